#include "qloop/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace qloop {

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// mpz_class rejects a leading '+', so shed it first.
mpz_class to_mpz(const std::string& s) {
  return mpz_class(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::domain_error("empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
      throw std::domain_error("malformed rational literal: " + text);
    mpz_class p = to_mpz(num), q = to_mpz(den);
    if (q == 0) throw std::domain_error("zero denominator: " + text);
    Rational r(p, q);
    r.canonicalize();
    return r;
  }

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    // Literal place value: digits after the dot over a power of ten.
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    bool neg = false;
    if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
      neg = head[0] == '-';
      head.erase(head.begin());
    }
    const std::string all = head + tail;
    if (all.empty())
      throw std::domain_error("malformed rational literal: " + text);
    for (char c : all)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::domain_error("malformed rational literal: " + text);
    mpz_class digits(all, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, tail.size());
    Rational r(digits, scale);
    r.canonicalize();
    if (neg) r = -r;
    return r;
  }

  if (!is_integer_literal(s))
    throw std::domain_error("malformed rational literal: " + text);
  return Rational(to_mpz(s));
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("non-finite value");
  Rational r;
  mpq_set_d(r.get_mpq_t(), x);
  return r;
}

}  // namespace qloop
