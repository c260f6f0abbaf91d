#include "qloop/domainscan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "qloop/errors.hpp"

namespace qloop {
namespace {

std::vector<double> axis_values(const std::optional<AxisRange>& axis,
                                double fixed_value) {
  if (!axis) return {fixed_value};
  if (axis->count < 1)
    throw std::domain_error("scan: axis count must be >= 1");
  if (axis->count == 1) return {axis->lo};
  std::vector<double> v(std::size_t(axis->count));
  for (int i = 0; i < axis->count; ++i)
    v[std::size_t(i)] =
        axis->lo + (axis->hi - axis->lo) * double(i) / double(axis->count - 1);
  return v;
}

void classify_point(const GraphFamilySpec& spec, ScanRecord& rec, double tol) {
  try {
    const RealityClassification c = classify_reality(
        spec,
        AmendedCouplingSet{rational_from_double(rec.gamma),
                           rational_from_double(rec.delta),
                           rational_from_double(rec.z)},
        tol);
    rec.all_real = c.all_real;
    rec.max_imag = c.max_imag;
    rec.marginal = c.marginal;
  } catch (const std::exception&) {
    rec.all_real = false;
    rec.max_imag = std::numeric_limits<double>::quiet_NaN();
    rec.marginal = true;
  }
}

}  // namespace

ScanGrid scan(const GraphFamilySpec& spec, const ScanAxes& axes,
              const AmendedCouplingSet& fixed, double tol, int jobs) {
  ScanGrid grid;
  grid.axes = axes;
  grid.fixed = fixed;

  const std::vector<double> gv = axis_values(axes.gamma, to_double(fixed.gamma));
  const std::vector<double> dv = axis_values(axes.delta, to_double(fixed.delta));
  const std::vector<double> zv = axis_values(axes.z, to_double(fixed.z));

  grid.records.resize(gv.size() * dv.size() * zv.size());
  std::size_t idx = 0;
  for (const double g : gv)
    for (const double d : dv)
      for (const double z : zv) {
        grid.records[idx].gamma = g;
        grid.records[idx].delta = d;
        grid.records[idx].z = z;
        ++idx;
      }

  const std::size_t n = grid.records.size();
  const std::size_t workers =
      std::min<std::size_t>(std::max(jobs, 1), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (auto& rec : grid.records) classify_point(spec, rec, tol);
    return grid;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = n * w / workers; i < n * (w + 1) / workers; ++i)
        classify_point(spec, grid.records[i], tol);
    });
  }
  for (auto& t : pool) t.join();
  return grid;
}

BoundaryResult reality_boundary(const GraphFamilySpec& spec, Var axis,
                                const AmendedCouplingSet& fixed, double lo,
                                double hi, double tol) {
  if (axis == Var::E)
    throw std::domain_error("reality_boundary: axis must be a coupling");
  if (!(lo < hi)) throw BracketError("reality_boundary: empty bracket");
  if (!(tol > 0)) throw std::domain_error("reality_boundary: tol must be > 0");

  const auto classify_at = [&](double x) {
    AmendedCouplingSet a = fixed;
    const Rational rx = rational_from_double(x);
    switch (axis) {
      case Var::Gamma: a.gamma = rx; break;
      case Var::Delta: a.delta = rx; break;
      default: a.z = rx; break;
    }
    return classify_reality(spec, a);
  };

  BoundaryResult result;
  result.axis = axis;
  result.fixed = fixed;

  const RealityClassification c_lo = classify_at(lo);
  const RealityClassification c_hi = classify_at(hi);
  if (!c_lo.all_real || c_hi.all_real)
    throw BracketError(
        "reality_boundary: bracket must be all-real at lo and not at hi");

  while (hi - lo > tol && result.iterations < 500) {
    const double mid = 0.5 * (lo + hi);
    const RealityClassification cm = classify_at(mid);
    ++result.iterations;
    if (cm.marginal) {
      const double off = (hi - lo) / 16;
      const RealityClassification p1 = classify_at(mid - off);
      const RealityClassification p2 = classify_at(mid + off);
      if (!p1.marginal && !p1.all_real) {
        hi = mid - off;
        continue;
      }
      if (!p2.marginal && p2.all_real) {
        lo = mid + off;
        continue;
      }
      if (!p1.marginal && p1.all_real && !p2.marginal && !p2.all_real) {
        lo = mid - off;
        hi = mid + off;
        continue;
      }
      // Both probes marginal too: trust the midpoint's own verdict.
    }
    if (cm.all_real)
      lo = mid;
    else
      hi = mid;
  }
  result.critical = 0.5 * (lo + hi);
  result.bracket_width = 0.5 * (hi - lo);
  return result;
}

}  // namespace qloop
