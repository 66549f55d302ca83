#ifndef SYMPCONE_MULTIPOLY_HPP
#define SYMPCONE_MULTIPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace sympcone {

// Sparse multivariate polynomial over Z, just enough machinery for the
// symbolic nilpotency certificate tr((sum_k lambda_k B_k)^{2r}) == 0 (the
// basis matrices are rescaled to integers first, which changes nothing about
// identical vanishing). Monomials are packed 4 bits per variable into a
// 64-bit key (at most 16 variables, every exponent <= 15; the certificate
// needs <= 9 variables of total degree <= 6). Terms are kept sorted by key;
// multiplication accumulates into a scratch vector and merges, which
// profiles much faster than map-based accumulation at these sizes.
class MultiPoly {
 public:
  static constexpr std::size_t kMaxVars = 16;

  MultiPoly() = default;

  static MultiPoly constant(const Int& c) {
    MultiPoly p;
    if (c != 0) p.terms_.emplace_back(0, c);
    return p;
  }

  static MultiPoly variable(std::size_t index, const Int& coeff = Int(1)) {
    if (index >= kMaxVars) throw std::invalid_argument("multipoly: too many variables");
    MultiPoly p;
    if (coeff != 0) p.terms_.emplace_back(std::uint64_t{1} << (4 * index), coeff);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  MultiPoly operator+(const MultiPoly& o) const {
    MultiPoly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
      if (terms_[i].first < o.terms_[j].first) {
        r.terms_.push_back(terms_[i++]);
      } else if (terms_[i].first > o.terms_[j].first) {
        r.terms_.push_back(o.terms_[j++]);
      } else {
        Int c = terms_[i].second + o.terms_[j].second;
        if (c != 0) r.terms_.emplace_back(terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
  }

  void add_in_place(const MultiPoly& o) { *this = *this + o; }

  MultiPoly operator*(const MultiPoly& o) const {
    MultiPoly r;
    if (is_zero() || o.is_zero()) return r;
    std::vector<std::pair<std::uint64_t, Int>> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& [ka, ca] : terms_)
      for (const auto& [kb, cb] : o.terms_)
        acc.emplace_back(ka + kb, ca * cb);  // packed exponents add fieldwise
    std::sort(acc.begin(), acc.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [k, c] : acc) {
      if (!r.terms_.empty() && r.terms_.back().first == k)
        r.terms_.back().second += c;
      else
        r.terms_.emplace_back(k, std::move(c));
      if (r.terms_.back().second == 0) r.terms_.pop_back();
    }
    return r;
  }

 private:
  std::vector<std::pair<std::uint64_t, Int>> terms_;
};

}  // namespace sympcone

#endif
