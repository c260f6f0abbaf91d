#ifndef QLOOP_JSON_IO_HPP
#define QLOOP_JSON_IO_HPP

#include <optional>
#include <string>

#include "qloop/domainscan.hpp"
#include "qloop/hamiltonian.hpp"
#include "qloop/lattice.hpp"
#include "qloop/refdata.hpp"
#include "qloop/secular.hpp"
#include "qloop/spectra.hpp"

namespace qloop {

// All writers emit deterministic, canonically ordered JSON (2-space indent,
// trailing newline); rationals are canonical "p/q" strings, polynomials
// canonical term lists ordered by descending E power then lexicographic
// (gamma, delta, z) exponents.

std::string graph_json(const GraphFamilySpec& spec);
std::string matrix_json(const RationalMatrix& m);
std::string matrix_json(const PolyMatrix& m);
std::string charpoly_json(int n, const MultiPoly& p);
std::string split_json(int K, int L, const SecularSplit& split,
                       const std::optional<bool>& matches_reference);
std::string spectrum_json(const Spectrum& s);
std::string boundary_json(const BoundaryResult& r);
std::string verify_json(const VerifyReport& r);
std::string scan_json(const ScanGrid& g);

// Header gamma,delta,z,all_real,max_imag,marginal; floats with 9 significant
// digits; booleans as 1/0.
std::string scan_csv(const ScanGrid& g);

enum class MatrixKind { Rational, Poly };

// Matrix document reader for the {"n", "kind", "entries"} schema. Kind
// "rational" and "float" both load into the exact rational matrix (floats
// are promoted exactly); "poly" loads symbolic entries. Malformed documents
// raise std::domain_error.
struct LoadedMatrix {
  MatrixKind kind = MatrixKind::Rational;
  RationalMatrix rational;
  PolyMatrix poly;
};

LoadedMatrix load_matrix_json(const std::string& text);

}  // namespace qloop

#endif
