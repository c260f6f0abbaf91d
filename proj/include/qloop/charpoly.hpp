#ifndef QLOOP_CHARPOLY_HPP
#define QLOOP_CHARPOLY_HPP

#include <vector>

#include "qloop/hamiltonian.hpp"
#include "qloop/multipoly.hpp"

namespace qloop {

// Coefficients of det(E*I - M) as a dense list: index d holds the
// coefficient of E^d, size n+1, leading coefficient 1. Faddeev-LeVerrier
// over the exact scalar ring; all divisions are by integers 1..n and stay
// exact. Throws std::domain_error for an empty matrix, and (symbolic case)
// for entries that already involve E.
std::vector<Rational> charpoly_coefficients(const RationalMatrix& m);
std::vector<MultiPoly> charpoly_coefficients(const PolyMatrix& m);

// Same polynomial as a single MultiPoly, monic of degree n in E.
MultiPoly charpoly(const RationalMatrix& m);
MultiPoly charpoly(const PolyMatrix& m);

}  // namespace qloop

#endif
