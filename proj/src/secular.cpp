#include "qloop/secular.hpp"

#include <cstddef>
#include <sstream>
#include <utility>
#include <vector>

#include "qloop/randomq.hpp"

namespace qloop {
namespace {

// Representative node indices of the reflection pairs, ascending; the pair
// partner always sits strictly above the representative.
std::vector<int> pair_representatives(const GraphFamilySpec& spec) {
  std::vector<int> reps;
  reps.reserve(std::size_t(spec.N) / 2);
  for (int i = 0; i < spec.N; ++i)
    if (spec.reflected_index(i) > i) reps.push_back(i);
  return reps;
}

std::vector<Rational> convolve(const std::vector<Rational>& a,
                               const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

RationalMatrix parity_basis(const GraphFamilySpec& spec) {
  const auto reps = pair_representatives(spec);
  const int half = spec.N / 2;
  RationalMatrix b(spec.N);
  for (int p = 0; p < half; ++p) {
    const int i = reps[std::size_t(p)];
    const int ri = spec.reflected_index(i);
    b.at(i, p) = 1;
    b.at(ri, p) = 1;
    b.at(i, half + p) = 1;
    b.at(ri, half + p) = -1;
  }
  return b;
}

SecularSplit split_secular(const GraphFamilySpec& spec) {
  const PolyMatrix h = assemble_symbolic(spec);
  const auto reps = pair_representatives(spec);
  const int half = spec.N / 2;

  // H' = B^T H B / 2 with the sparse two-entry columns expanded directly:
  // column r of B is e_a + s_r e_{R(a)} with s_r = +1 on the symmetric half.
  PolyMatrix conj(spec.N);
  for (int r = 0; r < spec.N; ++r) {
    const int ar = reps[std::size_t(r % half)];
    const int rar = spec.reflected_index(ar);
    const int sr = r < half ? 1 : -1;
    for (int c = 0; c < spec.N; ++c) {
      const int ac = reps[std::size_t(c % half)];
      const int rac = spec.reflected_index(ac);
      const int sc = c < half ? 1 : -1;
      MultiPoly sum = h.at(ar, ac);
      if (sc > 0) sum += h.at(ar, rac); else sum -= h.at(ar, rac);
      if (sr > 0) sum += h.at(rar, ac); else sum -= h.at(rar, ac);
      if (sr * sc > 0) sum += h.at(rar, rac); else sum -= h.at(rar, rac);
      sum.scale(Rational(1, 2));
      conj.at(r, c) = std::move(sum);
    }
  }

  std::ostringstream offending;
  int n_offending = 0;
  for (int r = 0; r < spec.N; ++r)
    for (int c = 0; c < spec.N; ++c) {
      const bool off_block = (r < half) != (c < half);
      if (off_block && !conj.at(r, c).is_zero()) {
        if (n_offending++) offending << "; ";
        offending << "(" << r << "," << c << ") = " << conj.at(r, c).str();
      }
    }
  if (n_offending)
    throw BlockStructureError(
        "parity conjugation left nonzero off-block entries: " +
        offending.str());

  PolyMatrix sym(half), asym(half);
  for (int r = 0; r < half; ++r)
    for (int c = 0; c < half; ++c) {
      sym.at(r, c) = conj.at(r, c);
      asym.at(r, c) = conj.at(half + r, half + c);
    }

  MultiPoly cp_sym = charpoly(sym);
  MultiPoly cp_asym = charpoly(asym);

  SecularSplit split;
  const bool sym_gamma = cp_sym.depends_on(Var::Gamma);
  const bool asym_gamma = cp_asym.depends_on(Var::Gamma);
  bool sym_is_plus;
  if (sym_gamma != asym_gamma)
    sym_is_plus = sym_gamma;
  else
    sym_is_plus = !cp_sym.depends_on(Var::Delta);
  if (sym_is_plus) {
    split.f_plus = std::move(cp_sym);
    split.f_minus = std::move(cp_asym);
  } else {
    split.f_plus = std::move(cp_asym);
    split.f_minus = std::move(cp_sym);
  }
  split.verified_separation = !split.f_plus.depends_on(Var::Delta) &&
                              !split.f_minus.depends_on(Var::Gamma);
  return split;
}

SeparationReport separation_identity_check(const GraphFamilySpec& spec,
                                           int trials) {
  SeparationReport report;
  report.K = spec.K;
  report.L = spec.L;
  report.symbolic = trials <= 0;
  report.trials = trials <= 0 ? 0 : trials;

  if (trials <= 0) {
    const MultiPoly p = charpoly(assemble_symbolic(spec));
    MultiPoly::Substitution zero_both{}, zero_delta{}, zero_gamma{};
    zero_both[std::size_t(Var::Gamma)] = Rational(0);
    zero_both[std::size_t(Var::Delta)] = Rational(0);
    zero_delta[std::size_t(Var::Delta)] = Rational(0);
    zero_gamma[std::size_t(Var::Gamma)] = Rational(0);
    const MultiPoly lhs = p * p.substituted(zero_both);
    const MultiPoly rhs =
        p.substituted(zero_delta) * p.substituted(zero_gamma);
    report.pass = lhs == rhs;
    if (!report.pass) {
      std::string diff = (lhs - rhs).str();
      if (diff.size() > 200) diff = diff.substr(0, 200) + "...";
      report.counterexample = "symbolic difference " + diff;
    }
    return report;
  }

  RationalSampler sampler(0x5ec1ull * 1000003ull +
                          std::uint64_t(spec.K) * 131ull +
                          std::uint64_t(spec.L));
  report.pass = true;
  for (int t = 0; t < trials; ++t) {
    const Rational gamma = sampler.next();
    const Rational delta = sampler.next();
    const Rational z = sampler.next();
    const auto full =
        charpoly_coefficients(assemble(spec, AmendedCouplingSet{gamma, delta, z}));
    const auto none =
        charpoly_coefficients(assemble(spec, AmendedCouplingSet{0, 0, z}));
    const auto gonly =
        charpoly_coefficients(assemble(spec, AmendedCouplingSet{gamma, 0, z}));
    const auto donly =
        charpoly_coefficients(assemble(spec, AmendedCouplingSet{0, delta, z}));
    if (convolve(full, none) != convolve(gonly, donly)) {
      report.pass = false;
      report.counterexample = "gamma=" + to_string(gamma) +
                              ", delta=" + to_string(delta) +
                              ", z=" + to_string(z);
      break;
    }
  }
  return report;
}

}  // namespace qloop
