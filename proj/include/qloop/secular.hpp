#ifndef QLOOP_SECULAR_HPP
#define QLOOP_SECULAR_HPP

#include <string>

#include "qloop/charpoly.hpp"
#include "qloop/errors.hpp"
#include "qloop/hamiltonian.hpp"
#include "qloop/lattice.hpp"
#include "qloop/multipoly.hpp"

namespace qloop {

// The two parity-sector factors of the secular polynomial:
// charpoly(H) = f_plus * f_minus, with f_plus carrying the gamma dependence
// and f_minus the delta dependence. verified_separation records that f_plus
// is free of delta and f_minus free of gamma (scanned exponents, not
// assumed).
struct SecularSplit {
  MultiPoly f_plus;
  MultiPoly f_minus;
  bool verified_separation = false;
};

// Reflection-adapted change of basis: one column e_a + e_{R(a)} per node
// pair (in ascending representative index), then the matching e_a - e_{R(a)}
// columns. B^T B = 2I, so B^{-1} = B^T / 2.
RationalMatrix parity_basis(const GraphFamilySpec& spec);

// Conjugates the symbolic Hamiltonian into the parity basis, checks exact
// block-diagonality (BlockStructureError otherwise, listing the offending
// entries), and returns the two half-size block characteristic polynomials.
// The block whose polynomial depends on gamma is labeled plus; if neither
// block shows a gamma dependence, the block free of delta is labeled plus.
SecularSplit split_secular(const GraphFamilySpec& spec);

// Outcome of the separation-identity check
//   charpoly(gamma,delta,z) * charpoly(0,0,z)
//     = charpoly(gamma,0,z) * charpoly(0,delta,z).
// trials = 0 runs the full symbolic identity; trials > 0 checks it at that
// many pseudo-random rational parameter points (fixed seed, so reports are
// reproducible). A failure is a report outcome, not an exception.
struct SeparationReport {
  int K = 0;
  int L = 0;
  bool symbolic = false;
  int trials = 0;
  bool pass = false;
  std::string counterexample;  // empty on pass
};

SeparationReport separation_identity_check(const GraphFamilySpec& spec,
                                           int trials = 0);

}  // namespace qloop

#endif
