#include "qloop/refdata.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include "qloop/charpoly.hpp"
#include "qloop/hamiltonian.hpp"
#include "qloop/lattice.hpp"
#include "qloop/multipoly.hpp"
#include "qloop/randomq.hpp"
#include "qloop/secular.hpp"
#include "qloop/spectra.hpp"

namespace qloop {
namespace {

// One monomial c * w^ew * z^ez, where w is gamma on the plus branch and
// delta on the minus branch.
struct TermSpec {
  long c;
  unsigned ew, ez;
};

MultiPoly build_coeff(Branch branch, std::initializer_list<TermSpec> terms) {
  std::vector<MultiPoly::Term> out;
  for (const auto& t : terms) {
    const unsigned eg = branch == Branch::Plus ? t.ew : 0;
    const unsigned ed = branch == Branch::Plus ? 0 : t.ew;
    out.push_back({mono_key(0, eg, ed, t.ez), Rational(t.c)});
  }
  return MultiPoly::from_terms(std::move(out));
}

// Quartic frame E^4 - 9E^3 + P E^2 + Q E + R.
std::vector<MultiPoly> quartic(Branch b, std::initializer_list<TermSpec> P,
                               std::initializer_list<TermSpec> Q,
                               std::initializer_list<TermSpec> R) {
  return {build_coeff(b, R), build_coeff(b, Q), build_coeff(b, P),
          MultiPoly::constant(-9), MultiPoly::constant(1)};
}

// Sextic frame E^6 - 13E^5 + P E^4 + Q E^3 + R E^2 + S E + T.
std::vector<MultiPoly> sextic(Branch b, std::initializer_list<TermSpec> P,
                              std::initializer_list<TermSpec> Q,
                              std::initializer_list<TermSpec> R,
                              std::initializer_list<TermSpec> S,
                              std::initializer_list<TermSpec> T) {
  return {build_coeff(b, T),      build_coeff(b, S),
          build_coeff(b, R),      build_coeff(b, Q),
          build_coeff(b, P),      MultiPoly::constant(-13),
          MultiPoly::constant(1)};
}

void append_pair(std::vector<std::complex<double>>& out,
                 const Rational& radicand) {
  const double r = to_double(radicand);
  if (r >= 0) {
    const double s = std::sqrt(r) / 2;
    out.emplace_back(2.5 + s, 0.0);
    out.emplace_back(2.5 - s, 0.0);
  } else {
    const double s = std::sqrt(-r) / 2;
    out.emplace_back(2.5, s);
    out.emplace_back(2.5, -s);
  }
}

const char* coeff_name(std::size_t deg, int power) {
  static const char* quartic_names[] = {"R", "Q", "P"};
  static const char* sextic_names[] = {"T", "S", "R", "Q", "P"};
  return deg == 4 ? quartic_names[power] : sextic_names[power];
}

}  // namespace

FactorReference reference_factor(int K, Branch branch) {
  FactorReference ref;
  ref.K = K;
  ref.branch = branch;
  ref.constant_roots = K == 4 ? 1 : 0;
  const Branch b = branch;
  switch (K) {
    case 3:
      ref.coefficients =
          branch == Branch::Plus
              ? quartic(b, {{1, 0, 2}, {24, 0, 0}, {4, 2, 0}},
                        {{-5, 0, 2}, {-19, 0, 0}, {-16, 2, 0}},
                        {{2, 0, 2}, {4, 2, 2}, {12, 2, 0}, {2, 0, 0}})
              : quartic(b, {{28, 0, 0}, {1, 0, 2}, {4, 2, 0}},
                        {{-35, 0, 0}, {-5, 0, 2}, {-16, 2, 0}},
                        {{14, 0, 0}, {6, 0, 2}, {12, 2, 0}, {4, 2, 2}});
      break;
    case 4:
      ref.coefficients =
          branch == Branch::Plus
              ? quartic(b, {{1, 0, 2}, {23, 0, 0}, {4, 2, 0}},
                        {{-5, 0, 2}, {-14, 0, 0}, {-16, 2, 0}},
                        {{1, 0, 2}, {4, 2, 2}, {8, 2, 0}, {1, 0, 0}})
              : quartic(b, {{27, 0, 0}, {1, 0, 2}, {4, 2, 0}},
                        {{-30, 0, 0}, {-5, 0, 2}, {-16, 2, 0}},
                        {{9, 0, 0}, {5, 0, 2}, {8, 2, 0}, {4, 2, 2}});
      break;
    case 5:
      ref.coefficients =
          branch == Branch::Plus
              ? sextic(b, {{1, 0, 2}, {62, 0, 0}, {4, 2, 0}},
                       {{-9, 0, 2}, {-133, 0, 0}, {-32, 2, 0}},
                       {{24, 0, 2}, {4, 2, 2}, {84, 2, 0}, {125, 0, 0}},
                       {{-19, 0, 2}, {-41, 0, 0}, {-80, 2, 0}, {-16, 2, 2}},
                       {{2, 0, 2}, {12, 2, 2}, {20, 2, 0}, {2, 0, 0}})
              : sextic(b, {{1, 0, 2}, {66, 0, 0}, {4, 2, 0}},
                       {{-9, 0, 2}, {-165, 0, 0}, {-32, 2, 0}},
                       {{28, 0, 2}, {4, 2, 2}, {84, 2, 0}, {209, 0, 0}},
                       {{-35, 0, 2}, {-121, 0, 0}, {-80, 2, 0}, {-16, 2, 2}},
                       {{14, 0, 2}, {12, 2, 2}, {20, 2, 0}, {22, 0, 0}});
      break;
    default:
      throw std::domain_error("reference_factor: no table for K=" +
                              std::to_string(K));
  }
  return ref;
}

MultiPoly factor_polynomial(const FactorReference& ref) {
  std::vector<MultiPoly::Term> terms;
  for (std::size_t d = 0; d < ref.coefficients.size(); ++d) {
    const MonoKey shift = mono_key(unsigned(d), 0, 0, 0);
    for (const auto& t : ref.coefficients[d].terms())
      terms.push_back({t.key | shift, t.coeff});
  }
  MultiPoly p = MultiPoly::from_terms(std::move(terms));
  const MultiPoly e_minus_2 =
      MultiPoly::variable(Var::E) - MultiPoly::constant(2);
  for (int i = 0; i < ref.constant_roots; ++i) p *= e_minus_2;
  return p;
}

std::vector<std::complex<double>> closed_form_energies(int K,
                                                       const Rational& gamma,
                                                       const Rational& delta) {
  if (K != 1 && K != 2)
    throw std::domain_error("closed_form_energies: K must be 1 or 2");
  const Rational g2 = gamma * gamma, d2 = delta * delta;
  std::vector<std::complex<double>> out;
  out.reserve(K == 1 ? 4 : 6);
  if (K == 1) {
    append_pair(out, Rational(17) - 16 * g2);
    append_pair(out, Rational(1) - 16 * d2);
  } else {
    append_pair(out, Rational(21) - 16 * g2);
    append_pair(out, Rational(5) - 16 * d2);
    out.emplace_back(2.0, 0.0);
    out.emplace_back(2.0, 0.0);
  }
  return out;
}

VerifyReport verify_reference(int K) {
  VerifyReport report;
  report.K = K;

  if (K == 1 || K == 2) {
    report.symbolic = false;
    report.points = 100;
    const GraphFamilySpec spec = build_graph(K, 1);
    RationalSampler sampler(0xFACADEull + std::uint64_t(K));
    double worst = 0.0;
    for (int t = 0; t < report.points; ++t) {
      const Rational gamma = sampler.next();
      const Rational delta = sampler.next();
      const Spectrum s =
          eigenvalues_of(assemble(spec, AmendedCouplingSet{gamma, delta, 0}));
      auto expected = closed_form_energies(K, gamma, delta);
      std::vector<std::complex<double>> got = s.eigenvalues;
      // Greedy nearest-neighbor matching; within a coalescent cluster any
      // assignment keeps the distances small.
      for (const auto& e : expected) {
        std::size_t best = 0;
        double bestd = -1;
        for (std::size_t i = 0; i < got.size(); ++i) {
          const double d = std::abs(e - got[i]);
          if (bestd < 0 || d < bestd) {
            bestd = d;
            best = i;
          }
        }
        worst = std::max(worst, bestd);
        got.erase(got.begin() + long(best));
      }
    }
    report.max_deviation = worst;
    report.pass = worst <= 1e-10;
    return report;
  }

  if (K < 3 || K > 5)
    throw std::domain_error("verify_reference: K must be 1..5");

  report.symbolic = true;
  const SecularSplit split = split_secular(build_graph(K, 1));
  bool all_equal = true;
  for (const Branch branch : {Branch::Plus, Branch::Minus}) {
    const FactorReference ref = reference_factor(K, branch);
    const MultiPoly& actual =
        branch == Branch::Plus ? split.f_plus : split.f_minus;
    all_equal = all_equal && (actual == factor_polynomial(ref));

    // Per-coefficient diffs on the reduced factor (constant roots divided
    // out); a failed division marks the whole branch.
    MultiPoly reduced = actual;
    bool divisible = true;
    const MultiPoly e_minus_2 =
        MultiPoly::variable(Var::E) - MultiPoly::constant(2);
    for (int i = 0; i < ref.constant_roots && divisible; ++i) {
      const DivisionResult d = divide_in_E(reduced, e_minus_2);
      if (!d.remainder.is_zero())
        divisible = false;
      else
        reduced = d.quotient;
    }
    const std::size_t deg = ref.coefficients.size() - 1;
    const int named = int(deg) - 1;  // powers 0 .. deg-2
    for (int power = named - 1; power >= 0; --power) {
      CoefficientCheck check;
      check.branch = branch;
      check.power = power;
      check.name = coeff_name(deg, power);
      if (divisible) {
        check.diff = reduced.coefficient_of(Var::E, unsigned(power)) -
                     ref.coefficients[std::size_t(power)];
        check.matched = check.diff.is_zero();
      } else {
        check.diff = actual - factor_polynomial(ref);
        check.matched = false;
      }
      report.coeffs_total += 1;
      report.coeffs_matched += check.matched ? 1 : 0;
      report.checks.push_back(std::move(check));
    }
  }
  report.pass = all_equal && report.coeffs_matched == report.coeffs_total;
  return report;
}

}  // namespace qloop
