#include "qloop/charpoly.hpp"

#include <stdexcept>
#include <type_traits>
#include <utility>

namespace qloop {
namespace {

template <class Scalar>
bool scalar_is_zero(const Scalar& s) {
  if constexpr (std::is_same_v<Scalar, MultiPoly>)
    return s.is_zero();
  else
    return s == 0;
}

// M_1 = A, c_{n-1} = -tr M_1; M_k = A (M_{k-1} + c_{n-k+1} I),
// c_{n-k} = -tr(M_k) / k. The left factor is always A, which for the
// assembled Hamiltonians has at most five nonzeros per row, so the products
// run over A's sparsity pattern.
template <class Scalar>
std::vector<Scalar> faddeev_leverrier(const DenseMatrix<Scalar>& a) {
  const int n = a.size();
  if (n < 1) throw std::domain_error("charpoly: empty matrix");

  auto rows = std::vector<std::vector<std::pair<int, Scalar>>>(std::size_t(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!scalar_is_zero(a.at(i, j)))
        rows[std::size_t(i)].emplace_back(j, a.at(i, j));

  std::vector<Scalar> c(std::size_t(n) + 1);
  if constexpr (std::is_same_v<Scalar, MultiPoly>)
    c[std::size_t(n)] = MultiPoly::constant(1);
  else
    c[std::size_t(n)] = 1;

  DenseMatrix<Scalar> m = a;
  {
    Scalar t{};
    for (int i = 0; i < n; ++i) t += m.at(i, i);
    c[std::size_t(n - 1)] = -t;
  }

  for (int k = 2; k <= n; ++k) {
    for (int i = 0; i < n; ++i) m.at(i, i) += c[std::size_t(n - k + 1)];
    DenseMatrix<Scalar> next(n);
    for (int i = 0; i < n; ++i) {
      if constexpr (std::is_same_v<Scalar, MultiPoly>) {
        PolyAccumulator acc;
        for (int col = 0; col < n; ++col) {
          for (const auto& [j, v] : rows[std::size_t(i)])
            acc.add_product(v, m.at(j, col));
          next.at(i, col) = acc.take();
        }
      } else {
        for (int col = 0; col < n; ++col) {
          Scalar s{};
          for (const auto& [j, v] : rows[std::size_t(i)])
            s += v * m.at(j, col);
          next.at(i, col) = std::move(s);
        }
      }
    }
    m = std::move(next);

    Scalar t{};
    for (int i = 0; i < n; ++i) t += m.at(i, i);
    if constexpr (std::is_same_v<Scalar, MultiPoly>) {
      t.scale(Rational(-1) / k);
      c[std::size_t(n - k)] = std::move(t);
    } else {
      c[std::size_t(n - k)] = -t / k;
    }
  }
  return c;
}

}  // namespace

std::vector<Rational> charpoly_coefficients(const RationalMatrix& m) {
  return faddeev_leverrier(m);
}

std::vector<MultiPoly> charpoly_coefficients(const PolyMatrix& m) {
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      if (m.at(i, j).depends_on(Var::E))
        throw std::domain_error("charpoly: matrix entries must not involve E");
  return faddeev_leverrier(m);
}

MultiPoly charpoly(const RationalMatrix& m) {
  const auto c = charpoly_coefficients(m);
  std::vector<MultiPoly::Term> terms;
  terms.reserve(c.size());
  for (std::size_t d = 0; d < c.size(); ++d)
    terms.push_back({mono_key(unsigned(d), 0, 0, 0), c[d]});
  return MultiPoly::from_terms(std::move(terms));
}

MultiPoly charpoly(const PolyMatrix& m) {
  const auto c = charpoly_coefficients(m);
  std::vector<MultiPoly::Term> terms;
  for (std::size_t d = 0; d < c.size(); ++d) {
    const MonoKey shift = mono_key(unsigned(d), 0, 0, 0);
    for (const auto& t : c[d].terms()) terms.push_back({t.key | shift, t.coeff});
  }
  return MultiPoly::from_terms(std::move(terms));
}

}  // namespace qloop
