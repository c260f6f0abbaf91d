#ifndef QLOOP_HAMILTONIAN_HPP
#define QLOOP_HAMILTONIAN_HPP

#include <vector>

#include "qloop/lattice.hpp"
#include "qloop/multipoly.hpp"
#include "qloop/rational.hpp"

namespace qloop {

// Physical couplings (g, h, z).
struct CouplingSet {
  Rational g, h, z;
  friend bool operator==(const CouplingSet&, const CouplingSet&) = default;
};

// Amended couplings (gamma, delta, z) with g = gamma + delta,
// h = gamma - delta. The secular polynomial separates in these.
struct AmendedCouplingSet {
  Rational gamma, delta, z;
  friend bool operator==(const AmendedCouplingSet&,
                         const AmendedCouplingSet&) = default;
};

CouplingSet to_physical(const AmendedCouplingSet& a);
AmendedCouplingSet to_amended(const CouplingSet& c);

// Dense square matrix over an exact scalar.
template <class Scalar>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(int n) : n_(n), e_(std::size_t(n) * std::size_t(n)) {}

  int size() const { return n_; }
  Scalar& at(int i, int j) { return e_[std::size_t(i) * std::size_t(n_) + std::size_t(j)]; }
  const Scalar& at(int i, int j) const {
    return e_[std::size_t(i) * std::size_t(n_) + std::size_t(j)];
  }

  DenseMatrix transposed() const {
    DenseMatrix t(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<Scalar> e_;
};

using RationalMatrix = DenseMatrix<Rational>;
using PolyMatrix = DenseMatrix<MultiPoly>;

// Numeric assembly at exact coupling values.
RationalMatrix assemble(const GraphFamilySpec& spec, const CouplingSet& c);
RationalMatrix assemble(const GraphFamilySpec& spec,
                        const AmendedCouplingSet& a);

// Symbolic assembly over the amended variables: entries are polynomials of
// degree <= 1 in {gamma, delta, z}, with g and h expanded via to_physical.
PolyMatrix assemble_symbolic(const GraphFamilySpec& spec);

// Substitution into a symbolic matrix, entrywise.
PolyMatrix substitute(const PolyMatrix& m, const MultiPoly::Substitution& sub);
RationalMatrix substitute_numeric(const PolyMatrix& m,
                                  const AmendedCouplingSet& a);

// Float projection of the exact matrix (round each rational). The float
// matrix is never assembled independently.
std::vector<double> to_float(const RationalMatrix& m);  // row-major, n*n

Rational trace(const RationalMatrix& m);
MultiPoly trace(const PolyMatrix& m);

}  // namespace qloop

#endif
