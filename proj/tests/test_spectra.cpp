#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "qloop/charpoly.hpp"
#include "qloop/errors.hpp"
#include "qloop/randomq.hpp"
#include "qloop/secular.hpp"
#include "qloop/spectra.hpp"

#include <Eigen/Dense>

using namespace qloop;

namespace {

AmendedCouplingSet random_amended(RationalSampler& s) {
  return {s.next(), s.next(), s.next()};
}

// multiset distance: greedy nearest matching, returns the worst pairing gap
double multiset_gap(std::vector<std::complex<double>> a,
                    std::vector<std::complex<double>> b) {
  REQUIRE(a.size() == b.size());
  double worst = 0.0;
  for (const auto& x : a) {
    std::size_t best = 0;
    double bd = 1e300;
    for (std::size_t i = 0; i < b.size(); ++i) {
      const double d = std::abs(x - b[i]);
      if (d < bd) {
        bd = d;
        best = i;
      }
    }
    worst = std::max(worst, bd);
    b.erase(b.begin() + std::ptrdiff_t(best));
  }
  return worst;
}

// independent root finder: companion-matrix eigenvalues of a monic E-poly
// evaluated at exact couplings
std::vector<std::complex<double>> companion_roots(const MultiPoly& f,
                                                  const Rational& gamma,
                                                  const Rational& delta,
                                                  const Rational& z) {
  MultiPoly::Substitution sub{};
  sub[int(Var::Gamma)] = gamma;
  sub[int(Var::Delta)] = delta;
  sub[int(Var::Z)] = z;
  const MultiPoly p = f.substituted(sub);
  const int n = p.degree(Var::E);
  REQUIRE(n >= 1);
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int d = 0; d < n; ++d)
    comp(d, n - 1) = -to_double(p.coefficient_of(Var::E, unsigned(d))
                                    .constant_value());
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  std::vector<std::complex<double>> roots;
  for (int i = 0; i < n; ++i) roots.push_back(es.eigenvalues()[i]);
  return roots;
}

}  // namespace

TEST_CASE("identity and diagonal matrices") {
  RationalMatrix eye(3);
  for (int i = 0; i < 3; ++i) eye.at(i, i) = 1;
  const Spectrum s = eigenvalues_of(eye);
  REQUIRE(s.eigenvalues.size() == 3);
  for (const auto& e : s.eigenvalues) {
    CHECK(e.real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(e.imag() == 0.0);
  }
  CHECK(s.all_real);
  CHECK(s.n_real == 3);
  CHECK(s.n_complex_pairs == 0);
  CHECK(s.marginal);  // coincident eigenvalues sit inside tol_imag

  RationalMatrix d(3);
  d.at(0, 0) = 1;
  d.at(1, 1) = 2;
  d.at(2, 2) = 3;
  const Spectrum sd = eigenvalues_of(d);
  CHECK(sd.eigenvalues[0].real() == doctest::Approx(3.0));
  CHECK(sd.eigenvalues[1].real() == doctest::Approx(2.0));
  CHECK(sd.eigenvalues[2].real() == doctest::Approx(1.0));
  CHECK_FALSE(sd.marginal);
  CHECK(sd.all_real);
  for (double r : sd.residuals) CHECK(r <= 1e-10);
}

TEST_CASE("K=1 spectrum at zero couplings") {
  const auto g = build_graph(1, 1);
  const Spectrum s = eigenvalues_of(assemble(g, AmendedCouplingSet{0, 0, 0}));
  REQUIRE(s.eigenvalues.size() == 4);
  const double s17 = std::sqrt(17.0);
  // sorted by descending real part
  CHECK(std::abs(s.eigenvalues[0].real() - (2.5 + s17 / 2)) <= 1e-12);
  CHECK(std::abs(s.eigenvalues[1].real() - 3.0) <= 1e-12);
  CHECK(std::abs(s.eigenvalues[2].real() - 2.0) <= 1e-12);
  CHECK(std::abs(s.eigenvalues[3].real() - (2.5 - s17 / 2)) <= 1e-12);
  CHECK(s.all_real);
  CHECK(s.n_real == 4);
  CHECK_FALSE(s.marginal);
  CHECK(s.tol == 1e-10);
  CHECK(s.tol_imag == 1e-8);
}

TEST_CASE("K=1 conjugate pair past the inner boundary") {
  const auto g = build_graph(1, 1);
  const Spectrum s =
      eigenvalues_of(assemble(g, AmendedCouplingSet{0, Rational(1, 2), 0}));
  CHECK_FALSE(s.all_real);
  CHECK(s.n_real == 2);
  CHECK(s.n_complex_pairs == 1);
  CHECK(s.max_imag == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-10));
  // the pair is exactly conjugate after symmetrization
  std::complex<double> up{0, -1}, dn{0, 1};
  for (const auto& e : s.eigenvalues) {
    if (e.imag() > 0) up = e;
    if (e.imag() < 0) dn = e;
  }
  CHECK(up.real() == dn.real());
  CHECK(up.imag() == -dn.imag());
  CHECK(up.real() == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("trace and determinant sum/product rules") {
  RationalSampler s(0x9001ULL);
  for (int t = 0; t < 12; ++t) {
    const int K = 1 + int(s.next_u64() % 3);
    const int L = 1 + int(s.next_u64() % 2);
    const auto g = build_graph(K, L);
    const RationalMatrix m = assemble(g, random_amended(s));
    const Spectrum sp = eigenvalues_of(m);
    std::complex<double> sum = 0, prod = 1;
    for (const auto& e : sp.eigenvalues) {
      sum += e;
      prod *= e;
    }
    CHECK(std::abs(sum - std::complex<double>(2.0 * g.N + 2.0, 0)) <= 1e-8);
    const double det = to_double(charpoly_coefficients(m)[0]) *
                       ((g.N % 2 == 0) ? 1.0 : -1.0);
    CHECK(std::abs(prod - std::complex<double>(det, 0)) <=
          1e-6 * std::max(1.0, std::abs(det)));
  }
}

TEST_CASE("conjugate closure and sign-flip invariance at K=3") {
  RationalSampler s(0x9002ULL);
  const auto g = build_graph(3, 1);
  for (int t = 0; t < 25; ++t) {
    const AmendedCouplingSet a = random_amended(s);
    const Spectrum sp = eigenvalues_of(assemble(g, a));
    // closure under conjugation
    std::vector<std::complex<double>> conj;
    for (const auto& e : sp.eigenvalues) conj.push_back(std::conj(e));
    CHECK(multiset_gap(sp.eigenvalues, conj) <= 1e-8);
    // single sign flips leave the multiset invariant
    for (int flip = 0; flip < 3; ++flip) {
      AmendedCouplingSet b = a;
      if (flip == 0) b.gamma = -b.gamma;
      if (flip == 1) b.delta = -b.delta;
      if (flip == 2) b.z = -b.z;
      const Spectrum sf = eigenvalues_of(assemble(g, b));
      CHECK(multiset_gap(sp.eigenvalues, sf.eigenvalues) <= 1e-8);
    }
  }
}

TEST_CASE("residual certification") {
  const auto g = build_graph(1, 1);
  const RationalMatrix m =
      assemble(g, AmendedCouplingSet{Rational(1, 3), Rational(1, 3), 0});
  const Spectrum s = eigenvalues_of(m);
  REQUIRE(s.residuals.size() == 4);
  for (double r : s.residuals) CHECK(r <= 1e-10);
  // an unreachable tolerance must be reported, carrying the worst residual
  try {
    eigenvalues_of(m, 1e-30);
    FAIL("expected NumericalError");
  } catch (const NumericalError& e) {
    CHECK(e.worst_residual() > 0.0);
  }
}

TEST_CASE("split roots reassemble the full spectrum") {
  RationalSampler s(0x9003ULL);
  for (int K = 2; K <= 3; ++K) {
    const auto g = build_graph(K, 1);
    const auto split = split_secular(g);
    for (int t = 0; t < 5; ++t) {
      const AmendedCouplingSet a = random_amended(s);
      std::vector<std::complex<double>> roots =
          companion_roots(split.f_plus, a.gamma, a.delta, a.z);
      const auto more = companion_roots(split.f_minus, a.gamma, a.delta, a.z);
      roots.insert(roots.end(), more.begin(), more.end());
      const Spectrum sp = eigenvalues_of(assemble(g, a));
      // draws can land on factor-level double roots (e.g. E=2 at z=-1),
      // where the raw companion path is only sqrt(eps)-accurate
      CHECK(multiset_gap(sp.eigenvalues, roots) <= 5e-7);
    }
  }
}

TEST_CASE("marginal flag: K=2 doublet, exceptional point, clean separation") {
  const auto g2 = build_graph(2, 1);
  const RealityClassification inside =
      classify_reality(g2, AmendedCouplingSet{0, 0, 0});
  CHECK(inside.all_real);
  CHECK(inside.marginal);  // exact doublet at E=2

  const auto g1 = build_graph(1, 1);
  // defective exceptional point at delta = 1/4
  const RealityClassification ep =
      classify_reality(g1, AmendedCouplingSet{0, Rational(1, 4), 0});
  CHECK(ep.all_real);
  CHECK(ep.marginal);
  // clearly one-sided points are not marginal
  const RealityClassification in =
      classify_reality(g1, AmendedCouplingSet{0, Rational(2499, 10000), 0});
  CHECK(in.all_real);
  CHECK_FALSE(in.marginal);
  CHECK(in.max_imag == 0.0);
  const RealityClassification out =
      classify_reality(g1, AmendedCouplingSet{0, Rational(2501, 10000), 0});
  CHECK_FALSE(out.all_real);
  CHECK_FALSE(out.marginal);
  CHECK(out.max_imag > 1e-3);
}

TEST_CASE("classify_reality agrees with eigenvalues_of") {
  RationalSampler s(0x9004ULL);
  const auto g = build_graph(2, 2);
  for (int t = 0; t < 10; ++t) {
    const AmendedCouplingSet a = random_amended(s);
    const RealityClassification c = classify_reality(g, a);
    const Spectrum sp = eigenvalues_of(assemble(g, a));
    CHECK(c.all_real == sp.all_real);
    CHECK(c.marginal == sp.marginal);
    CHECK(c.max_imag == sp.max_imag);
  }
}
