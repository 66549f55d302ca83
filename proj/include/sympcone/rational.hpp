#ifndef SYMPCONE_RATIONAL_HPP
#define SYMPCONE_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace sympcone {

// Exact scalar types. Every value in the library is a Rational; there is no
// floating point anywhere. GMP keeps rationals canonical (lowest terms,
// positive denominator, 0 stored as 0/1) provided values are built through
// arithmetic, so parsing below routes through an exact division.
using Rational = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  return Rational(num) / Rational(den);
}

// Accepts "p", "p/q" and an optional leading sign on either part.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational: empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    return make_rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("rational: cannot parse '" + s + "'");
  }
}

inline std::string to_string(const Rational& r) { return r.str(); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline void divide_by_int(Rational& v, long k) { v /= k; }

inline Rational rational_pow(const Rational& b, std::size_t e) {
  Rational r(1);
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace sympcone

#endif
