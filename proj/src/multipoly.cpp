#include "qloop/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qloop/errors.hpp"

namespace qloop {

const char* const kVarNames[kNumVars] = {"E", "gamma", "delta", "z"};

MultiPoly MultiPoly::constant(Rational c) {
  MultiPoly p;
  if (c != 0) p.terms_.push_back({0, std::move(c)});
  return p;
}

MultiPoly MultiPoly::variable(Var v) { return term(1, v == Var::E, v == Var::Gamma, v == Var::Delta, v == Var::Z); }

MultiPoly MultiPoly::term(Rational c, unsigned eE, unsigned eG, unsigned eD,
                          unsigned eZ) {
  MultiPoly p;
  if (c != 0) p.terms_.push_back({mono_key(eE, eG, eD, eZ), std::move(c)});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.key > b.key; });
  MultiPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().key == t.key)
      p.terms_.back().coeff += t.coeff;
    else
      p.terms_.push_back(std::move(t));
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coeff == 0; });
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].key == 0);
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant())
    throw std::domain_error("constant_value on a non-constant polynomial");
  return terms_[0].coeff;
}

int MultiPoly::degree(Var v) const {
  int deg = -1;
  for (const auto& t : terms_) deg = std::max(deg, int(mono_exp(t.key, v)));
  return deg;
}

MultiPoly MultiPoly::coefficient_of(Var v, unsigned power) const {
  const int shift = 48 - 16 * int(v);
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (mono_exp(t.key, v) == power)
      out.push_back({t.key & ~(MonoKey(0xffffu) << shift), t.coeff});
  return from_terms(std::move(out));
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const {
  std::vector<MultiPoly> out(std::size_t(std::max(0, degree(v)) + 1));
  for (unsigned d = 0; d < out.size(); ++d) out[d] = coefficient_of(v, d);
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p(*this);
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].key > o.terms_[j].key) {
      merged.push_back(std::move(terms_[i++]));
    } else if (terms_[i].key < o.terms_[j].key) {
      merged.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].coeff + o.terms_[j].coeff;
      if (c != 0) merged.push_back({terms_[i].key, std::move(c)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) merged.push_back(std::move(terms_[i]));
  for (; j < o.terms_.size(); ++j) merged.push_back(o.terms_[j]);
  terms_ = std::move(merged);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  PolyAccumulator acc;
  acc.add_product(a, b);
  return acc.take();
}

MultiPoly& MultiPoly::scale(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].key != b.terms_[i].key ||
        a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

namespace {

Rational rational_pow(const Rational& base, unsigned e) {
  Rational r(1);
  Rational b = base;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace

MultiPoly MultiPoly::substituted(const Substitution& sub) const {
  bool any = false;
  for (const auto& s : sub) any = any || s.has_value();
  if (!any) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    MonoKey key = t.key;
    for (int v = 0; v < kNumVars; ++v) {
      if (!sub[v]) continue;
      const unsigned e = mono_exp(t.key, Var(v));
      if (e) c *= rational_pow(*sub[v], e);
      key &= ~(MonoKey(0xffffu) << (48 - 16 * v));
    }
    out.push_back({key, std::move(c)});
  }
  return from_terms(std::move(out));
}

Rational MultiPoly::evaluated(const std::array<Rational, kNumVars>& at) const {
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    for (int v = 0; v < kNumVars; ++v) {
      const unsigned e = mono_exp(t.key, Var(v));
      if (e) c *= rational_pow(at[std::size_t(v)], e);
    }
    sum += c;
  }
  return sum;
}

MultiPoly MultiPoly::sign_flipped(bool gamma, bool delta, bool z,
                                  bool e) const {
  MultiPoly p(*this);
  for (auto& t : p.terms_) {
    unsigned odd = 0;
    if (e) odd += mono_exp(t.key, Var::E);
    if (gamma) odd += mono_exp(t.key, Var::Gamma);
    if (delta) odd += mono_exp(t.key, Var::Delta);
    if (z) odd += mono_exp(t.key, Var::Z);
    if (odd & 1u) t.coeff = -t.coeff;
  }
  return p;
}

bool MultiPoly::even_in_couplings() const {
  for (const auto& t : terms_)
    if ((mono_exp(t.key, Var::Gamma) | mono_exp(t.key, Var::Delta) |
         mono_exp(t.key, Var::Z)) &
        1u)
      return false;
  return true;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    std::string vars;
    for (int v = 0; v < kNumVars; ++v) {
      const unsigned e = mono_exp(t.key, Var(v));
      if (!e) continue;
      if (!vars.empty()) vars += "*";
      vars += kVarNames[v];
      if (e > 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) {
      os << c.get_str();
    } else if (c == 1) {
      os << vars;
    } else {
      os << c.get_str() << "*" << vars;
    }
  }
  return os.str();
}

void PolyAccumulator::bump(MonoKey k, const Rational& v) {
  entries_.emplace_back(k, v);
}

void PolyAccumulator::add(const MultiPoly& p) {
  for (const auto& t : p.terms()) bump(t.key, t.coeff);
}

void PolyAccumulator::add_scaled(const MultiPoly& p, const Rational& c) {
  if (c == 0) return;
  for (const auto& t : p.terms()) entries_.emplace_back(t.key, t.coeff * c);
}

void PolyAccumulator::add_product(const MultiPoly& a, const MultiPoly& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  entries_.reserve(entries_.size() + ta.size() * tb.size());
  for (const auto& x : ta)
    for (const auto& y : tb)
      entries_.emplace_back(x.key + y.key, x.coeff * y.coeff);
}

MultiPoly PolyAccumulator::take() {
  std::vector<MultiPoly::Term> terms;
  terms.reserve(entries_.size());
  for (auto& [k, v] : entries_) terms.push_back({k, std::move(v)});
  entries_.clear();
  return MultiPoly::from_terms(std::move(terms));
}

DivisionResult divide_in_E(const MultiPoly& num, const MultiPoly& den) {
  const int dd = den.degree(Var::E);
  if (dd < 0) throw std::domain_error("division by the zero polynomial");
  const MultiPoly lead = den.coefficient_of(Var::E, unsigned(dd));
  if (!(lead.is_constant() && lead.constant_value() == 1))
    throw std::domain_error("divisor is not monic in E");

  auto rem = num.coefficients_in(Var::E);  // index = power of E
  const auto dcoef = den.coefficients_in(Var::E);
  const int dn = int(rem.size()) - 1;
  if (dn < dd) return {MultiPoly(), num};

  std::vector<MultiPoly> quot(std::size_t(dn - dd + 1));
  for (int k = dn - dd; k >= 0; --k) {
    MultiPoly q = rem[std::size_t(k + dd)];
    if (!q.is_zero()) {
      for (int i = 0; i < dd; ++i)
        rem[std::size_t(k + i)] -= q * dcoef[std::size_t(i)];
      rem[std::size_t(k + dd)] = MultiPoly();
    }
    quot[std::size_t(k)] = std::move(q);
  }

  auto assemble = [](const std::vector<MultiPoly>& coefs) {
    std::vector<MultiPoly::Term> terms;
    for (std::size_t p = 0; p < coefs.size(); ++p)
      for (const auto& t : coefs[p].terms())
        terms.push_back({t.key + mono_key(unsigned(p), 0, 0, 0), t.coeff});
    return MultiPoly::from_terms(std::move(terms));
  };
  return {assemble(quot), assemble(rem)};
}

MultiPoly divide_exact_in_E(const MultiPoly& num, const MultiPoly& den) {
  DivisionResult r = divide_in_E(num, den);
  if (!r.remainder.is_zero())
    throw DivisibilityError("inexact division in E", r.remainder.str());
  return std::move(r.quotient);
}

}  // namespace qloop
