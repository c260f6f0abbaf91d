#ifndef QLOOP_DOMAINSCAN_HPP
#define QLOOP_DOMAINSCAN_HPP

#include <optional>
#include <vector>

#include "qloop/hamiltonian.hpp"
#include "qloop/lattice.hpp"
#include "qloop/spectra.hpp"

namespace qloop {

// One swept parameter range; count == 1 degenerates to the single value lo.
struct AxisRange {
  double lo = 0.0;
  double hi = 0.0;
  int count = 1;
};

// Swept axes of a scan; absent axes stay at their fixed values.
struct ScanAxes {
  std::optional<AxisRange> gamma, delta, z;
};

struct ScanRecord {
  double gamma = 0.0, delta = 0.0, z = 0.0;
  bool all_real = false;
  double max_imag = 0.0;
  bool marginal = false;
};

// Row-major over the axes in the fixed order gamma, delta, z.
struct ScanGrid {
  ScanAxes axes;
  AmendedCouplingSet fixed;
  std::vector<ScanRecord> records;
};

// Classifies every grid point. Points whose spectrum fails residual
// certification are recorded as not-real and marginal (max_imag = NaN); the
// grid itself never aborts. jobs > 1 splits the points across threads with
// deterministic record order.
ScanGrid scan(const GraphFamilySpec& spec, const ScanAxes& axes,
              const AmendedCouplingSet& fixed, double tol = 1e-10,
              int jobs = 1);

struct BoundaryResult {
  Var axis = Var::Gamma;
  AmendedCouplingSet fixed;  // swept entry ignored
  double critical = 0.0;
  // Half-width of the final bracket: all_real holds at
  // critical - bracket_width and fails at critical + bracket_width.
  double bracket_width = 0.0;
  int iterations = 0;
};

// Bisection on the all_real predicate along one axis (Var::Gamma/Delta/Z;
// Var::E is a domain error). Requires all_real at lo and not at hi
// (BracketError otherwise), runs to |hi-lo| <= tol. A marginal midpoint is
// re-probed a sixteenth of the bracket to either side; if neither probe
// settles the verdict, the midpoint's own classification is used.
BoundaryResult reality_boundary(const GraphFamilySpec& spec, Var axis,
                                const AmendedCouplingSet& fixed, double lo,
                                double hi, double tol = 1e-8);

}  // namespace qloop

#endif
