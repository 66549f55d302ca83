#ifndef SYMPCONE_TESTS_ORACLES_HPP
#define SYMPCONE_TESTS_ORACLES_HPP

// Test-side oracles, deliberately independent of the library's computation
// paths: Laplace expansion instead of elimination or Faddeev-LeVerrier,
// minor enumeration instead of rref ranks, Sylvester determinants instead of
// the subresultant PRS.

#include <vector>

#include "sympcone/matrix.hpp"
#include "sympcone/polynomial.hpp"

namespace oracles {

using sympcone::Mat;
using sympcone::Matrix;
using sympcone::PolyRat;
using sympcone::Polynomial;
using sympcone::Rational;

template <class T>
T laplace_det(const Matrix<T>& m, const std::vector<std::size_t>& rows,
              const std::vector<std::size_t>& cols) {
  if (rows.size() == 1) return m(rows[0], cols[0]);
  T acc{};
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (m(rows[0], cols[k]) == T()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t t = 0; t < cols.size(); ++t)
      if (t != k) sub_cols.push_back(cols[t]);
    T term = m(rows[0], cols[k]) * laplace_det(m, sub_rows, sub_cols);
    if (k % 2 == 0)
      acc = acc + term;
    else
      acc = acc - term;
  }
  return acc;
}

template <class T>
T laplace_det(const Matrix<T>& m) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < m.rows(); ++i) idx.push_back(i);
  return laplace_det(m, idx, idx);
}

// Rank as the largest k admitting a nonzero k x k minor.
inline std::size_t minor_rank(const Mat& m) {
  std::size_t maxk = std::min(m.rows(), m.cols());
  for (std::size_t k = maxk; k >= 1; --k) {
    std::vector<std::size_t> rs(k), cs(k);
    for (std::size_t i = 0; i < k; ++i) rs[i] = i;
    auto next_combo = [](std::vector<std::size_t>& c, std::size_t limit) {
      std::size_t k2 = c.size();
      for (std::size_t i = k2; i-- > 0;) {
        if (c[i] + (k2 - i) < limit) {
          ++c[i];
          for (std::size_t j = i + 1; j < k2; ++j) c[j] = c[j - 1] + 1;
          return true;
        }
      }
      return false;
    };
    do {
      for (std::size_t i = 0; i < k; ++i) cs[i] = i;
      do {
        if (!(laplace_det(m, rs, cs) == Rational(0))) return k;
      } while (next_combo(cs, m.cols()));
    } while (next_combo(rs, m.rows()));
  }
  return 0;
}

// det(tI - m) by Laplace expansion over Q[t].
inline PolyRat charpoly_expansion(const Mat& m) {
  Matrix<PolyRat> tm(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::vector<Rational> c{-m(i, j)};
      if (i == j) c.push_back(Rational(1));
      tm(i, j) = PolyRat::from_coeffs(std::move(c));
    }
  return laplace_det(tm);
}

// Resultant as the Laplace determinant of the Sylvester matrix.
inline Rational sylvester_laplace_resultant(const PolyRat& a, const PolyRat& b) {
  std::size_t m = static_cast<std::size_t>(a.degree());
  std::size_t n = static_cast<std::size_t>(b.degree());
  if (m == 0 && n == 0) return Rational(1);
  Mat s(m + n, m + n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s(i, i + j) = a.coeff(m - j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s(n + i, i + j) = b.coeff(n - j);
  return laplace_det(s);
}

}  // namespace oracles

#endif
