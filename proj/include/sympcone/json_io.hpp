#ifndef SYMPCONE_JSON_IO_HPP
#define SYMPCONE_JSON_IO_HPP

#include <json.hpp>

#include "nilpotent.hpp"
#include "spectral.hpp"
#include "symplectic.hpp"

namespace sympcone {

using nlohmann::json;

// Rationals serialize as "p/q" (or "p" when q = 1); plain JSON integers are
// accepted on input.
inline json to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational as string or integer");
}

inline json to_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  Vec v;
  for (const auto& e : j) v.push_back(rational_from_json(e));
  return v;
}

inline json to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return rows;
}

inline Mat mat_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a matrix as array of rows");
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(r));
  Mat m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t k = 0; k < rows[i].size(); ++k) m(i, k) = rows[i][k];
  }
  return m;
}

// Polynomials: coefficient arrays, ascending degree.
inline json to_json(const PolyRat& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

inline PolyRat poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a polynomial as coefficient array");
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return PolyRat::from_coeffs(std::move(c));
}

// Flags: the list of 2n adapted basis vectors (J is implicit from n).
inline json to_json(const IsotropicFlag& f) {
  json a = json::array();
  for (const auto& u : f.adapted_basis()) a.push_back(to_json(u));
  return a;
}

// {n, matrix} or a bare matrix (n inferred from the size).
struct ConeCheckInput {
  SymplecticSpace space;
  Mat matrix;
};

inline ConeCheckInput cone_input_from_json(const json& j) {
  json mj = j;
  std::size_t n = 0;
  if (j.is_object()) {
    if (!j.contains("matrix")) throw std::invalid_argument("expected key 'matrix'");
    mj = j.at("matrix");
    if (j.contains("n")) n = j.at("n").get<std::size_t>();
  }
  Mat m = mat_from_json(mj);
  if (!m.is_square() || m.rows() % 2 != 0 || m.rows() == 0)
    throw std::invalid_argument("matrix must be square of even size 2n");
  if (n == 0) n = m.rows() / 2;
  if (2 * n != m.rows()) throw std::invalid_argument("matrix size does not match n");
  return ConeCheckInput{SymplecticSpace(n), std::move(m)};
}

// FlagSubspace: {n, basis: [flattened matrices (4n^2 entries) or row arrays]}.
struct FlagSubspaceInput {
  SymplecticSpace space;
  Subspace l;
};

inline FlagSubspaceInput flag_subspace_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("basis"))
    throw std::invalid_argument("expected {n, basis: [...]}");
  std::size_t n = j.at("n").get<std::size_t>();
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  SymplecticSpace sp(n);
  std::size_t d = sp.dim();
  std::vector<Vec> rows;
  for (const auto& e : j.at("basis")) {
    if (e.is_array() && !e.empty() && e[0].is_array())
      rows.push_back(flatten(mat_from_json(e)));
    else
      rows.push_back(vec_from_json(e));
    if (rows.back().size() != d * d)
      throw std::invalid_argument("basis element has wrong size (need 4n^2 entries)");
  }
  return FlagSubspaceInput{sp, Subspace::span_of_vectors(d * d, rows)};
}

// SpectralData {n, s, degree_bounds?} or PolyHiggs {n, entries}.
inline SpectralData spectral_data_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("s"))
    throw std::invalid_argument("expected {n, s: [[coeffs]...]}");
  std::size_t n = j.at("n").get<std::size_t>();
  std::vector<PolyRat> s;
  for (const auto& e : j.at("s")) s.push_back(poly_from_json(e));
  std::vector<std::size_t> bounds;
  if (j.contains("degree_bounds"))
    bounds = j.at("degree_bounds").get<std::vector<std::size_t>>();
  return make_spectral_data(n, std::move(s), std::move(bounds));
}

inline json to_json(const SpectralData& sd) {
  json s = json::array();
  for (const auto& p : sd.s) s.push_back(to_json(p));
  return json{{"n", sd.n}, {"s", s}, {"degree_bounds", sd.degree_bounds}};
}

inline PolyHiggs poly_higgs_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw std::invalid_argument("expected {n, entries: [[[coeffs]...]...]}");
  std::size_t n = j.at("n").get<std::size_t>();
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  SymplecticSpace sp(n);
  const json& rows = j.at("entries");
  if (!rows.is_array() || rows.size() != sp.dim())
    throw std::invalid_argument("entries must be a 2n x 2n array of polynomials");
  Matrix<PolyRat> entries(sp.dim(), sp.dim());
  for (std::size_t i = 0; i < sp.dim(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != sp.dim())
      throw std::invalid_argument("entries must be a 2n x 2n array of polynomials");
    for (std::size_t k = 0; k < sp.dim(); ++k) entries(i, k) = poly_from_json(rows[i][k]);
  }
  return make_poly_higgs(sp, std::move(entries));
}

inline json to_json(const DiscriminantClass& c) {
  json out;
  out["class"] = to_string(c.kind);
  out["d1_witness"] = c.d1_witness ? to_json(*c.d1_witness) : json();
  out["d2_witness"] = c.d2_witness ? to_json(*c.d2_witness) : json();
  return out;
}

}  // namespace sympcone

#endif
