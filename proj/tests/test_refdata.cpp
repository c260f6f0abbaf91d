#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "qloop/refdata.hpp"
#include "qloop/secular.hpp"

using namespace qloop;

namespace {

MultiPoly G() { return MultiPoly::variable(Var::Gamma); }
MultiPoly D() { return MultiPoly::variable(Var::Delta); }
MultiPoly Z() { return MultiPoly::variable(Var::Z); }
MultiPoly C(long p, long q = 1) { return MultiPoly::constant(Rational(p, q)); }

bool close(std::complex<double> a, std::complex<double> b, double tol) {
  return std::abs(a - b) <= tol;
}

}  // namespace

TEST_CASE("stored quartic table, K=3") {
  const auto plus = reference_factor(3, Branch::Plus);
  CHECK(plus.K == 3);
  CHECK(plus.constant_roots == 0);
  REQUIRE(plus.coefficients.size() == 5);
  CHECK(plus.coefficients[4] == C(1));
  CHECK(plus.coefficients[3] == C(-9));
  CHECK(plus.coefficients[2] == Z() * Z() + C(24) + C(4) * G() * G());
  CHECK(plus.coefficients[1] ==
        C(-5) * Z() * Z() - C(19) - C(16) * G() * G());
  CHECK(plus.coefficients[0] == C(2) * Z() * Z() +
                                    C(4) * G() * G() * Z() * Z() +
                                    C(12) * G() * G() + C(2));

  const auto minus = reference_factor(3, Branch::Minus);
  CHECK(minus.constant_roots == 0);
  CHECK(minus.coefficients[2] == C(28) + Z() * Z() + C(4) * D() * D());
  CHECK(minus.coefficients[1] ==
        C(-35) - C(5) * Z() * Z() - C(16) * D() * D());
  CHECK(minus.coefficients[0] == C(14) + C(6) * Z() * Z() +
                                     C(12) * D() * D() +
                                     C(4) * D() * D() * Z() * Z());
  // plus-branch involves gamma only, minus-branch delta only
  for (const auto& c : plus.coefficients) CHECK_FALSE(c.depends_on(Var::Delta));
  for (const auto& c : minus.coefficients)
    CHECK_FALSE(c.depends_on(Var::Gamma));
}

TEST_CASE("stored quartic table, K=4 carries one constant root each") {
  const auto plus = reference_factor(4, Branch::Plus);
  CHECK(plus.constant_roots == 1);
  REQUIRE(plus.coefficients.size() == 5);
  CHECK(plus.coefficients[2] == Z() * Z() + C(23) + C(4) * G() * G());
  CHECK(plus.coefficients[1] ==
        C(-5) * Z() * Z() - C(14) - C(16) * G() * G());
  CHECK(plus.coefficients[0] == Z() * Z() + C(4) * G() * G() * Z() * Z() +
                                    C(8) * G() * G() + C(1));
  const auto minus = reference_factor(4, Branch::Minus);
  CHECK(minus.constant_roots == 1);
  CHECK(minus.coefficients[2] == C(27) + Z() * Z() + C(4) * D() * D());
  CHECK(minus.coefficients[1] ==
        C(-30) - C(5) * Z() * Z() - C(16) * D() * D());
  CHECK(minus.coefficients[0] == C(9) + C(5) * Z() * Z() +
                                     C(8) * D() * D() +
                                     C(4) * D() * D() * Z() * Z());
}

TEST_CASE("stored sextic table, K=5") {
  const auto plus = reference_factor(5, Branch::Plus);
  CHECK(plus.constant_roots == 0);
  REQUIRE(plus.coefficients.size() == 7);
  CHECK(plus.coefficients[6] == C(1));
  CHECK(plus.coefficients[5] == C(-13));
  CHECK(plus.coefficients[4] == Z() * Z() + C(62) + C(4) * G() * G());
  CHECK(plus.coefficients[3] ==
        C(-9) * Z() * Z() - C(133) - C(32) * G() * G());
  CHECK(plus.coefficients[2] == C(24) * Z() * Z() +
                                    C(4) * G() * G() * Z() * Z() +
                                    C(84) * G() * G() + C(125));
  CHECK(plus.coefficients[1] == C(-19) * Z() * Z() - C(41) -
                                    C(80) * G() * G() -
                                    C(16) * G() * G() * Z() * Z());
  CHECK(plus.coefficients[0] == C(2) * Z() * Z() +
                                    C(12) * G() * G() * Z() * Z() +
                                    C(20) * G() * G() + C(2));
  const auto minus = reference_factor(5, Branch::Minus);
  CHECK(minus.coefficients[4] == Z() * Z() + C(66) + C(4) * D() * D());
  CHECK(minus.coefficients[3] ==
        C(-9) * Z() * Z() - C(165) - C(32) * D() * D());
  CHECK(minus.coefficients[2] == C(28) * Z() * Z() +
                                    C(4) * D() * D() * Z() * Z() +
                                    C(84) * D() * D() + C(209));
  CHECK(minus.coefficients[1] == C(-35) * Z() * Z() - C(121) -
                                    C(80) * D() * D() -
                                    C(16) * D() * D() * Z() * Z());
  CHECK(minus.coefficients[0] == C(14) * Z() * Z() +
                                    C(12) * D() * D() * Z() * Z() +
                                    C(20) * D() * D() + C(22));
}

TEST_CASE("factor_polynomial prefixes the constant roots") {
  const auto p3 = factor_polynomial(reference_factor(3, Branch::Plus));
  CHECK(p3.degree(Var::E) == 4);
  const auto p4 = factor_polynomial(reference_factor(4, Branch::Minus));
  CHECK(p4.degree(Var::E) == 5);
  CHECK(p4.evaluated({2, 0, 0, 0}) == 0);
  CHECK(p4.evaluated({2, 1, 1, 1}) == 0);  // root at 2 for all couplings
  // sum of the two subleading coefficients = -(2N+2)
  for (int K = 3; K <= 5; ++K) {
    const auto fp = factor_polynomial(reference_factor(K, Branch::Plus));
    const auto fm = factor_polynomial(reference_factor(K, Branch::Minus));
    const int half = fp.degree(Var::E);
    const int N = 2 * half;
    CHECK(fp.coefficient_of(Var::E, unsigned(half - 1)) +
              fm.coefficient_of(Var::E, unsigned(half - 1)) ==
          C(-(2 * N + 2)));
  }
}

TEST_CASE("tables match the construction") {
  for (int K = 3; K <= 5; ++K) {
    const auto split = split_secular(build_graph(K, 1));
    CHECK(split.f_plus == factor_polynomial(reference_factor(K, Branch::Plus)));
    CHECK(split.f_minus ==
          factor_polynomial(reference_factor(K, Branch::Minus)));
  }
}

TEST_CASE("closed-form energies, K=1") {
  const auto at0 = closed_form_energies(1, 0, 0);
  REQUIRE(at0.size() == 4);
  // 5/2 +- sqrt(17)/2 and 5/2 +- 1/2
  const double s17 = std::sqrt(17.0);
  bool seen[4] = {};
  for (const auto& e : at0) {
    if (close(e, {2.5 + s17 / 2, 0}, 1e-12)) seen[0] = true;
    if (close(e, {2.5 - s17 / 2, 0}, 1e-12)) seen[1] = true;
    if (close(e, {3.0, 0}, 1e-12)) seen[2] = true;
    if (close(e, {2.0, 0}, 1e-12)) seen[3] = true;
  }
  CHECK((seen[0] && seen[1] && seen[2] && seen[3]));

  // negative inner radicand: conjugate pair 2.5 +- i sqrt(3)/2
  const auto inner = closed_form_energies(1, 0, Rational(1, 2));
  int complex_count = 0;
  for (const auto& e : inner) {
    if (std::abs(e.imag()) > 0) {
      ++complex_count;
      CHECK(std::abs(e.real() - 2.5) <= 1e-12);
      CHECK(std::abs(std::abs(e.imag()) - std::sqrt(3.0) / 2) <= 1e-12);
    }
  }
  CHECK(complex_count == 2);
}

TEST_CASE("closed-form energies, K=2 include the doublet") {
  const auto at0 = closed_form_energies(2, 0, 0);
  REQUIRE(at0.size() == 6);
  int twos = 0;
  for (const auto& e : at0)
    if (close(e, {2.0, 0}, 1e-12)) ++twos;
  CHECK(twos == 2);
  const double s21 = std::sqrt(21.0), s5 = std::sqrt(5.0);
  bool outer_hi = false, outer_lo = false, inner_hi = false, inner_lo = false;
  for (const auto& e : at0) {
    if (close(e, {2.5 + s21 / 2, 0}, 1e-12)) outer_hi = true;
    if (close(e, {2.5 - s21 / 2, 0}, 1e-12)) outer_lo = true;
    if (close(e, {2.5 + s5 / 2, 0}, 1e-12)) inner_hi = true;
    if (close(e, {2.5 - s5 / 2, 0}, 1e-12)) inner_lo = true;
  }
  CHECK((outer_hi && outer_lo && inner_hi && inner_lo));
}

TEST_CASE("verification report, symbolic branch") {
  for (int K = 3; K <= 5; ++K) {
    const auto rep = verify_reference(K);
    CHECK(rep.K == K);
    CHECK(rep.symbolic);
    CHECK(rep.pass);
    CHECK(rep.coeffs_total == (K == 5 ? 10 : 6));
    CHECK(rep.coeffs_matched == rep.coeffs_total);
    REQUIRE(int(rep.checks.size()) == rep.coeffs_total);
    for (const auto& c : rep.checks) {
      CHECK(c.matched);
      CHECK(c.diff.is_zero());
    }
  }
}

TEST_CASE("verification report, numeric branch") {
  for (int K = 1; K <= 2; ++K) {
    const auto rep = verify_reference(K);
    CHECK(rep.K == K);
    CHECK_FALSE(rep.symbolic);
    CHECK(rep.pass);
    CHECK(rep.points == 100);
    CHECK(rep.max_deviation <= 1e-10);
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(reference_factor(2, Branch::Plus), std::domain_error);
  CHECK_THROWS_AS(reference_factor(6, Branch::Plus), std::domain_error);
  CHECK_THROWS_AS(closed_form_energies(3, 0, 0), std::domain_error);
  CHECK_THROWS_AS(closed_form_energies(0, 0, 0), std::domain_error);
  CHECK_THROWS_AS(verify_reference(0), std::domain_error);
  CHECK_THROWS_AS(verify_reference(6), std::domain_error);
}
