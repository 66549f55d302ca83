#ifndef SYMPCONE_SUBSPACE_HPP
#define SYMPCONE_SUBSPACE_HPP

#include <stdexcept>
#include <vector>

#include "matrix.hpp"

namespace sympcone {

// Linear subspace of Q^ambient in canonical form: the basis is the unique
// RREF of any spanning set, so equality of subspaces is structural equality.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Mat(0, ambient);
    return s;
  }

  static Subspace full(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Mat::identity(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
    return s;
  }

  // Rows span the subspace; they are reduced to the canonical RREF basis.
  static Subspace span_of_rows(const Mat& rows) {
    auto red = rref(rows);
    Subspace s;
    s.ambient_ = rows.cols();
    s.basis_ = Mat(red.rank, rows.cols());
    for (std::size_t i = 0; i < red.rank; ++i)
      for (std::size_t j = 0; j < rows.cols(); ++j)
        s.basis_(i, j) = red.reduced(i, j);
    s.pivots_.assign(red.pivot_cols.begin(), red.pivot_cols.end());
    return s;
  }

  static Subspace span_of_vectors(std::size_t ambient, const std::vector<Vec>& vs) {
    Mat rows(vs.size(), ambient);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (vs[i].size() != ambient)
        throw std::invalid_argument("subspace: vector has wrong ambient dimension");
      for (std::size_t j = 0; j < ambient; ++j) rows(i, j) = vs[i][j];
    }
    return span_of_rows(rows);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

  bool contains(const Vec& v) const {
    if (v.size() != ambient_)
      throw std::invalid_argument("subspace: ambient dimension mismatch");
    Vec w = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      Rational f = w[pivots_[i]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_(i, j);
    }
    for (const auto& x : w)
      if (x != 0) return false;
    return true;
  }

  bool contains(const Subspace& o) const {
    check_ambient(o);
    for (std::size_t i = 0; i < o.dim(); ++i)
      if (!contains(o.basis_vector(i))) return false;
    return true;
  }

  // {v : b G v = 0 for every basis vector b}; G is the Gram matrix of a
  // bilinear form on the ambient space.
  Subspace annihilator_under(const Mat& form) const {
    if (form.rows() != ambient_ || form.cols() != ambient_)
      throw std::invalid_argument("subspace: form has wrong shape");
    if (dim() == 0) return full(ambient_);
    return span_of_rows(kernel_basis(basis_ * form));
  }

  // Orthogonal complement for the standard dot product (plumbing for
  // intersections; not the symplectic annihilator).
  Subspace dot_complement() const {
    if (dim() == 0) return full(ambient_);
    return span_of_rows(kernel_basis(basis_));
  }

 private:
  void check_ambient(const Subspace& o) const {
    if (ambient_ != o.ambient_)
      throw std::invalid_argument("subspace: ambient dimension mismatch");
  }

  friend Subspace sum(const Subspace&, const Subspace&);
  friend Subspace intersect(const Subspace&, const Subspace&);

  std::size_t ambient_ = 0;
  Mat basis_{0, 0};
  std::vector<std::size_t> pivots_;
};

inline Subspace sum(const Subspace& a, const Subspace& b) {
  a.check_ambient(b);
  Mat rows(a.dim() + b.dim(), a.ambient_dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.ambient_dim(); ++j) rows(i, j) = a.basis()(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < a.ambient_dim(); ++j)
      rows(a.dim() + i, j) = b.basis()(i, j);
  return Subspace::span_of_rows(rows);
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  a.check_ambient(b);
  return sum(a.dot_complement(), b.dot_complement()).dot_complement();
}

inline Subspace kernel(const Mat& m) {
  return Subspace::span_of_rows(kernel_basis(m));
}

}  // namespace sympcone

#endif
