#ifndef QLOOP_MULTIPOLY_HPP
#define QLOOP_MULTIPOLY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qloop/rational.hpp"

namespace qloop {

// Variables of the polynomial ring, in storage order.
enum class Var : int { E = 0, Gamma = 1, Delta = 2, Z = 3 };

inline constexpr int kNumVars = 4;

extern const char* const kVarNames[kNumVars];  // "E", "gamma", "delta", "z"

// Exponent vector (eE, eGamma, eDelta, eZ) packed 16 bits per variable, E in
// the top bits. Unsigned key comparison then orders monomials by descending
// eE first, then lexicographically by (gamma, delta, z) exponents, which is
// exactly the pretty-printer / canonical storage order.
using MonoKey = std::uint64_t;

constexpr MonoKey mono_key(unsigned eE, unsigned eG, unsigned eD, unsigned eZ) {
  return (MonoKey(eE) << 48) | (MonoKey(eG) << 32) | (MonoKey(eD) << 16) |
         MonoKey(eZ);
}

constexpr unsigned mono_exp(MonoKey k, Var v) {
  return unsigned(k >> (48 - 16 * int(v))) & 0xffffu;
}

// Sparse multivariate polynomial over Rational in {E, gamma, delta, z}.
// Invariants: terms sorted by key descending, no zero coefficients stored.
class MultiPoly {
 public:
  struct Term {
    MonoKey key;
    Rational coeff;
  };

  MultiPoly() = default;  // zero polynomial

  static MultiPoly constant(Rational c);
  static MultiPoly variable(Var v);
  // c * E^eE * gamma^eG * delta^eD * z^eZ
  static MultiPoly term(Rational c, unsigned eE, unsigned eG = 0,
                        unsigned eD = 0, unsigned eZ = 0);
  // Takes an arbitrary term list; merges duplicates, drops zeros, sorts.
  static MultiPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // 0 for the zero polynomial.
  Rational constant_value() const;

  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Degree in one variable; -1 for the zero polynomial.
  int degree(Var v) const;
  bool depends_on(Var v) const { return degree(v) > 0; }
  // Coefficient of v^power with the variable v struck out of the keys.
  MultiPoly coefficient_of(Var v, unsigned power) const;
  // Dense coefficient list in v: index i holds the coefficient of v^i.
  std::vector<MultiPoly> coefficients_in(Var v) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly& scale(const Rational& c);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) {
    return !(a == b);
  }

  // Partial substitution: entries with a value are evaluated exactly, the
  // rest stay symbolic.
  using Substitution = std::array<std::optional<Rational>, kNumVars>;
  MultiPoly substituted(const Substitution& sub) const;
  // Full evaluation at (E, gamma, delta, z).
  Rational evaluated(const std::array<Rational, kNumVars>& at) const;

  // Negates every term with odd total exponent in the flagged variables
  // (i.e. the substitution v -> -v for each flagged v).
  MultiPoly sign_flipped(bool gamma, bool delta, bool z,
                         bool e = false) const;

  // True when every term has even exponent in each of gamma, delta, z.
  bool even_in_couplings() const;

  // Terms ordered by descending eE, then lexicographic (gamma, delta, z).
  std::string str() const;

 private:
  std::vector<Term> terms_;
};

// Accumulates sums of polynomial products without materializing
// intermediates; the workhorse of the matrix arithmetic.
class PolyAccumulator {
 public:
  void add(const MultiPoly& p);
  void add_product(const MultiPoly& a, const MultiPoly& b);
  void add_scaled(const MultiPoly& p, const Rational& c);
  // Extracts the accumulated polynomial and resets the accumulator.
  MultiPoly take();

 private:
  std::vector<std::pair<MonoKey, Rational>> entries_;
  void bump(MonoKey k, const Rational& v);
};

struct DivisionResult {
  MultiPoly quotient;
  MultiPoly remainder;
};

// Long division in E with a divisor monic in E (leading E-coefficient happens
// to be the constant 1). Throws std::domain_error for a non-monic divisor.
DivisionResult divide_in_E(const MultiPoly& num, const MultiPoly& den);

// As divide_in_E but a nonzero remainder raises DivisibilityError carrying
// the remainder.
MultiPoly divide_exact_in_E(const MultiPoly& num, const MultiPoly& den);

}  // namespace qloop

#endif
