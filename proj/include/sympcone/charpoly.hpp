#ifndef SYMPCONE_CHARPOLY_HPP
#define SYMPCONE_CHARPOLY_HPP

#include "matrix.hpp"
#include "polynomial.hpp"

namespace sympcone {

// Monic characteristic polynomial det(t*I - m) by Faddeev-LeVerrier. The only
// divisions are by the integers 1..dim, exact in characteristic zero, so the
// same code runs on Rational and on polynomial-entry matrices.
template <class T>
Polynomial<T> charpoly(const Matrix<T>& m) {
  m.require_square();
  std::size_t n = m.rows();
  std::vector<T> cs(n + 1);
  cs[n] = T(1);
  Matrix<T> acc = Matrix<T>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    acc = m * acc;
    T ck = T() - acc.trace();
    divide_by_int(ck, static_cast<long>(k));
    cs[n - k] = ck;
    if (k < n)
      for (std::size_t i = 0; i < n; ++i) acc(i, i) += ck;
  }
  return Polynomial<T>::from_coeffs(std::move(cs));
}

// Trace of the k-th exterior power, i.e. the k-th elementary symmetric
// function of the eigenvalues: charpoly = sum_k (-1)^k ext_trace(m,k) t^(n-k).
template <class T>
T ext_trace(const Matrix<T>& m, std::size_t k) {
  m.require_square();
  if (k > m.rows()) throw std::invalid_argument("ext_trace: k out of range");
  if (k == 0) return T(1);
  T c = charpoly(m).coeff(m.rows() - k);
  return (k % 2 == 0) ? c : T() - c;
}

}  // namespace sympcone

#endif
