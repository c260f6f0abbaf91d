#ifndef QLOOP_REFDATA_HPP
#define QLOOP_REFDATA_HPP

#include <complex>
#include <string>
#include <vector>

#include "qloop/multipoly.hpp"
#include "qloop/rational.hpp"

namespace qloop {

enum class Branch { Plus, Minus };

// Ground-truth coefficient table for one parity factor at L = 1. The factor
// is (E-2)^constant_roots times the monic polynomial whose dense
// E-coefficient list is `coefficients` (index d = coefficient of E^d; the
// top entry is the constant 1). Plus-branch coefficients involve gamma and
// z only, minus-branch ones delta and z only.
struct FactorReference {
  int K = 0;
  Branch branch = Branch::Plus;
  std::vector<MultiPoly> coefficients;
  int constant_roots = 0;
};

// The stored table for K in {3, 4, 5}; std::domain_error otherwise.
FactorReference reference_factor(int K, Branch branch);

// (E-2)^constant_roots times the tabulated monic polynomial.
MultiPoly factor_polynomial(const FactorReference& ref);

// Closed-form energies for K in {1, 2} (L = 1, z = 0): two level pairs
// 5/2 +- sqrt(r)/2 with radicands r = 17-16*gamma^2 and 1-16*delta^2 at
// K=1, r = 21-16*gamma^2 and 5-16*delta^2 at K=2, plus the constant doublet
// {2, 2} at K=2. Negative radicands give conjugate complex pairs.
// std::domain_error for K outside {1, 2}.
std::vector<std::complex<double>> closed_form_energies(int K,
                                                       const Rational& gamma,
                                                       const Rational& delta);

// One named-coefficient comparison of a computed parity factor against the
// stored table; diff = computed minus reference (zero on a match).
struct CoefficientCheck {
  Branch branch = Branch::Plus;
  std::string name;  // "P", "Q", "R", "S", "T"
  int power = 0;     // E power inside the reduced factor
  MultiPoly diff;
  bool matched = false;
};

// Verification of the toolkit against the stored ground truth. K in {3,4,5}
// compares split_secular factors with the tables symbolically (exact
// equality); K in {1,2} compares numeric eigenvalues with the closed forms
// at `points` pseudo-random rational (gamma, delta) in [-2,2]^2, z = 0.
struct VerifyReport {
  int K = 0;
  bool symbolic = false;
  bool pass = false;
  // symbolic path
  int coeffs_total = 0;
  int coeffs_matched = 0;
  std::vector<CoefficientCheck> checks;
  // numeric path
  int points = 0;
  double max_deviation = 0.0;
};

VerifyReport verify_reference(int K);  // K in 1..5 or std::domain_error

}  // namespace qloop

#endif
