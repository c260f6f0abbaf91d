#include "qloop/hamiltonian.hpp"

namespace qloop {

CouplingSet to_physical(const AmendedCouplingSet& a) {
  return {a.gamma + a.delta, a.gamma - a.delta, a.z};
}

AmendedCouplingSet to_amended(const CouplingSet& c) {
  return {(c.g + c.h) / 2, (c.g - c.h) / 2, c.z};
}

RationalMatrix assemble(const GraphFamilySpec& spec, const CouplingSet& c) {
  RationalMatrix m(spec.N);
  for (int i = 0; i < spec.N; ++i)
    m.at(i, i) = spec.weights[std::size_t(i)];
  for (const auto& e : spec.edges) {
    const int ia = spec.index_of(e.a), ib = spec.index_of(e.b);
    Rational cv;
    switch (e.coupling) {
      case Coupling::None: cv = 0; break;
      case Coupling::G: cv = c.g; break;
      case Coupling::H: cv = c.h; break;
      case Coupling::Z: cv = c.z; break;
    }
    if (e.sign < 0) cv = -cv;
    m.at(ia, ib) = -1 - cv;
    m.at(ib, ia) = -1 + cv;
  }
  return m;
}

RationalMatrix assemble(const GraphFamilySpec& spec,
                        const AmendedCouplingSet& a) {
  return assemble(spec, to_physical(a));
}

PolyMatrix assemble_symbolic(const GraphFamilySpec& spec) {
  const MultiPoly gamma = MultiPoly::variable(Var::Gamma);
  const MultiPoly delta = MultiPoly::variable(Var::Delta);
  const MultiPoly g = gamma + delta;
  const MultiPoly h = gamma - delta;
  const MultiPoly z = MultiPoly::variable(Var::Z);
  const MultiPoly none;

  PolyMatrix m(spec.N);
  for (int i = 0; i < spec.N; ++i)
    m.at(i, i) = MultiPoly::constant(spec.weights[std::size_t(i)]);
  const MultiPoly minus_one = MultiPoly::constant(-1);
  for (const auto& e : spec.edges) {
    const int ia = spec.index_of(e.a), ib = spec.index_of(e.b);
    const MultiPoly* cv = &none;
    switch (e.coupling) {
      case Coupling::None: break;
      case Coupling::G: cv = &g; break;
      case Coupling::H: cv = &h; break;
      case Coupling::Z: cv = &z; break;
    }
    MultiPoly signed_cv = e.sign < 0 ? -*cv : *cv;
    m.at(ia, ib) = minus_one - signed_cv;
    m.at(ib, ia) = minus_one + signed_cv;
  }
  return m;
}

PolyMatrix substitute(const PolyMatrix& m, const MultiPoly::Substitution& sub) {
  PolyMatrix out(m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      out.at(i, j) = m.at(i, j).substituted(sub);
  return out;
}

RationalMatrix substitute_numeric(const PolyMatrix& m,
                                  const AmendedCouplingSet& a) {
  RationalMatrix out(m.size());
  const std::array<Rational, kNumVars> at{Rational(0), a.gamma, a.delta, a.z};
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      out.at(i, j) = m.at(i, j).evaluated(at);
  return out;
}

std::vector<double> to_float(const RationalMatrix& m) {
  std::vector<double> out;
  out.reserve(std::size_t(m.size()) * std::size_t(m.size()));
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) out.push_back(to_double(m.at(i, j)));
  return out;
}

Rational trace(const RationalMatrix& m) {
  Rational t(0);
  for (int i = 0; i < m.size(); ++i) t += m.at(i, i);
  return t;
}

MultiPoly trace(const PolyMatrix& m) {
  MultiPoly t;
  for (int i = 0; i < m.size(); ++i) t += m.at(i, i);
  return t;
}

}  // namespace qloop
