#ifndef QLOOP_SPECTRA_HPP
#define QLOOP_SPECTRA_HPP

#include <complex>
#include <vector>

#include "qloop/hamiltonian.hpp"
#include "qloop/lattice.hpp"

namespace qloop {

// Numeric spectrum with residual certification: every eigenvalue lambda of
// the float projection is checked against the exact characteristic
// polynomial via |p_monic(lambda)| / (1+|lambda|)^N <= tol.
struct Spectrum {
  std::vector<std::complex<double>> eigenvalues;  // conjugate-paired
  std::vector<double> residuals;
  double tol = 0.0;
  double tol_imag = 0.0;  // classification threshold max(tol*100, 1e-8)
  int n_real = 0;
  int n_complex_pairs = 0;
  bool all_real = false;
  // Some pair of eigenvalues sits closer than tol_imag, so the real/complex
  // classification could flap under perturbation.
  bool marginal = false;
  double max_imag = 0.0;  // largest |Im| before real eigenvalues are snapped
};

// QR eigenvalues of the float projection, Newton-polished against the exact
// characteristic polynomial when needed. Throws NumericalError (carrying the
// worst residual) if certification fails at tol.
Spectrum eigenvalues_of(const RationalMatrix& m, double tol = 1e-10);

struct RealityClassification {
  bool all_real = false;
  double max_imag = 0.0;
  bool marginal = false;
};

// Assembles the Hamiltonian at the given couplings and classifies its
// spectrum. Propagates NumericalError.
RealityClassification classify_reality(const GraphFamilySpec& spec,
                                       const AmendedCouplingSet& a,
                                       double tol = 1e-10);

}  // namespace qloop

#endif
