#include "qloop/spectra.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

#include "qloop/charpoly.hpp"
#include "qloop/errors.hpp"

namespace qloop {
namespace {

using CLD = std::complex<long double>;

// About 64 accurate bits: leading double plus the rounding remainder.
long double to_long_double(const Rational& q) {
  const double hi = to_double(q);
  const Rational rem = q - rational_from_double(hi);
  return static_cast<long double>(hi) + static_cast<long double>(to_double(rem));
}

// Exact univariate helpers on ascending coefficient vectors (empty = zero).
using RPoly = std::vector<Rational>;

RPoly trim(RPoly v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

RPoly derivative_of(const RPoly& v) {
  RPoly d;
  for (std::size_t i = 1; i < v.size(); ++i) d.push_back(v[i] * long(i));
  return trim(std::move(d));
}

void make_monic(RPoly& v) {
  const Rational lead = v.back();
  for (auto& c : v) c /= lead;
}

RPoly poly_mod(RPoly a, const RPoly& b) {  // b monic
  while (a.size() >= b.size()) {
    const Rational f = a.back();
    const std::size_t shift = a.size() - b.size();
    if (f != 0)
      for (std::size_t k = 0; k + 1 < b.size(); ++k) a[shift + k] -= f * b[k];
    a.pop_back();
  }
  return trim(std::move(a));
}

RPoly poly_divide(const RPoly& a, const RPoly& b) {  // b monic, divides a
  RPoly r = a, q(a.size() - b.size() + 1, Rational(0));
  while (r.size() >= b.size()) {
    const Rational f = r.back();
    const std::size_t shift = r.size() - b.size();
    q[shift] = f;
    if (f != 0)
      for (std::size_t k = 0; k + 1 < b.size(); ++k) r[shift + k] -= f * b[k];
    r.pop_back();
  }
  return q;
}

// p / gcd(p, p'): same roots, all simple. Multiple roots of the secular
// polynomial (parity doublets, defective points) would otherwise cap Newton
// refinement at the half-precision noise floor.
RPoly square_free_part(const RPoly& p) {  // p monic, degree >= 1
  RPoly a = p, b = derivative_of(p);
  make_monic(b);
  while (b.size() > 1) {
    RPoly r = poly_mod(a, b);
    if (r.empty()) return poly_divide(p, b);  // b is the gcd
    a = std::move(b);
    b = std::move(r);
    make_monic(b);
  }
  return p;  // constant gcd: already square-free
}

struct HornerResult {
  CLD value;
  CLD derivative;
};

HornerResult horner(const std::vector<long double>& c, CLD x) {
  CLD p(0), dp(0);
  for (std::size_t i = c.size(); i-- > 0;) {
    dp = dp * x + p;
    p = p * x + c[i];
  }
  return {p, dp};
}

double residual_of(const std::vector<long double>& c, CLD x) {
  const long double ax = std::abs(x);
  const long double denom = std::pow(1.0L + ax, (long double)(c.size() - 1));
  return double(std::abs(horner(c, x).value) / denom);
}

// Newton refinement against the exact-coefficient polynomial; keeps the best
// iterate, so it can only improve on the QR starting point.
CLD polish(const std::vector<long double>& c, CLD x) {
  CLD best = x;
  double best_res = residual_of(c, x);
  for (int it = 0; it < 60 && best_res > 1e-18; ++it) {
    const HornerResult h = horner(c, x);
    if (h.derivative == CLD(0)) break;
    const CLD next = x - h.value / h.derivative;
    const double res = residual_of(c, next);
    if (!(res < best_res)) break;
    best = next;
    best_res = res;
    x = next;
  }
  return best;
}

}  // namespace

Spectrum eigenvalues_of(const RationalMatrix& m, double tol) {
  const int n = m.size();
  Spectrum s;
  s.tol = tol;
  s.tol_imag = std::max(tol * 100, 1e-8);

  Eigen::MatrixXd a(n, n);
  {
    const std::vector<double> flat = to_float(m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        a(i, j) = flat[std::size_t(i) * std::size_t(n) + std::size_t(j)];
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(a, /*computeEigenvectors=*/false);

  const std::vector<Rational> exact = charpoly_coefficients(m);
  std::vector<long double> coeff(exact.size());
  for (std::size_t i = 0; i < exact.size(); ++i)
    coeff[i] = to_long_double(exact[i]);

  // Refine against the square-free part so repeated roots stay simple
  // targets; certification below still runs against the full polynomial.
  const RPoly sf = square_free_part(exact);
  std::vector<long double> target(sf.size());
  for (std::size_t i = 0; i < sf.size(); ++i) target[i] = to_long_double(sf[i]);

  auto lam = std::vector<CLD>(std::size_t(n));
  for (int i = 0; i < n; ++i) {
    CLD x(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
    lam[std::size_t(i)] = polish(target, x);
  }

  // Conjugate pairing: partition by tol_imag, then match each upper-half
  // eigenvalue with its nearest lower-half partner and symmetrize.
  std::vector<std::complex<double>> reals, uppers, lowers;
  for (const CLD& x : lam) {
    const std::complex<double> xd(double(x.real()), double(x.imag()));
    s.max_imag = std::max(s.max_imag, std::abs(xd.imag()));
    if (std::abs(xd.imag()) <= s.tol_imag)
      reals.emplace_back(xd.real(), 0.0);
    else if (xd.imag() > 0)
      uppers.push_back(xd);
    else
      lowers.push_back(xd);
  }
  for (const auto& u : uppers) {
    if (lowers.empty()) {
      reals.emplace_back(u.real(), 0.0);  // unmatched: degrade to real
      continue;
    }
    std::size_t best = 0;
    double bestd = std::abs(std::conj(u) - lowers[0]);
    for (std::size_t i = 1; i < lowers.size(); ++i) {
      const double d = std::abs(std::conj(u) - lowers[i]);
      if (d < bestd) {
        bestd = d;
        best = i;
      }
    }
    const std::complex<double> l = lowers[best];
    lowers.erase(lowers.begin() + long(best));
    const double re = (u.real() + l.real()) / 2;
    const double im = (u.imag() - l.imag()) / 2;
    s.eigenvalues.emplace_back(re, im);
    s.eigenvalues.emplace_back(re, -im);
    s.n_complex_pairs += 1;
  }
  for (const auto& l : lowers) reals.emplace_back(l.real(), 0.0);
  for (const auto& r : reals) s.eigenvalues.push_back(r);
  s.n_real = int(reals.size());
  s.all_real = s.n_complex_pairs == 0;

  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(),
            [](const std::complex<double>& a, const std::complex<double>& b) {
              if (a.real() != b.real()) return a.real() > b.real();
              return a.imag() > b.imag();
            });

  double worst = 0.0;
  s.residuals.reserve(s.eigenvalues.size());
  for (const auto& x : s.eigenvalues) {
    const double r = residual_of(coeff, CLD(x.real(), x.imag()));
    s.residuals.push_back(r);
    worst = std::max(worst, r);
  }
  if (worst > tol)
    throw NumericalError("residual certification failed: worst residual " +
                             std::to_string(worst) + " exceeds tolerance",
                         worst);

  double min_gap = -1;
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i)
    for (std::size_t j = i + 1; j < s.eigenvalues.size(); ++j) {
      const double d = std::abs(s.eigenvalues[i] - s.eigenvalues[j]);
      if (min_gap < 0 || d < min_gap) min_gap = d;
    }
  s.marginal = min_gap >= 0 && min_gap < s.tol_imag;
  return s;
}

RealityClassification classify_reality(const GraphFamilySpec& spec,
                                       const AmendedCouplingSet& a,
                                       double tol) {
  const Spectrum s = eigenvalues_of(assemble(spec, a), tol);
  return {s.all_real, s.max_imag, s.marginal};
}

}  // namespace qloop
