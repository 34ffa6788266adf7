#include "eao/json_io.hpp"

#include <string>

#include "eao/error.hpp"

namespace eao::json {
namespace {

[[noreturn]] void malformed(const std::string& detail) {
  throw Error(ErrorCode::malformed_input, detail);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) malformed("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t positive_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 1)
    malformed(std::string("field \"") + key + "\" must be a positive integer");
  return v.get<std::size_t>();
}

std::string join_word(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

}  // namespace

Json to_json(const Rational& value) { return format_rational(value); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(j.dump());
  malformed("rational must be a string like \"-3/7\"");
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) malformed("matrix must be an array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  std::vector<Rational> entries;
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array()) malformed("matrix row must be an array");
    if (i == 0) cols = row.size();
    if (row.size() != cols) malformed("matrix rows differ in length");
    for (const auto& x : row) entries.push_back(rational_from_json(x));
  }
  return Matrix(rows, cols, std::move(entries));
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  Matrix m = matrix_from_json(j);
  if (m.rows() != rows || m.cols() != cols)
    malformed("expected a " + std::to_string(rows) + " x " + std::to_string(cols) + " matrix");
  return m;
}

Json to_json(const Point& w) {
  Json out;
  out["n"] = w.n();
  out["p"] = w.p();
  out["q"] = w.q();
  out["r"] = w.r();
  if (w.r() == 1) {
    out["A"] = to_json(w.a());
  } else {
    Json a = Json::array();
    for (const auto& m : w.a_list()) a.push_back(to_json(m));
    out["A"] = std::move(a);
  }
  out["B"] = to_json(w.b());
  out["C"] = to_json(w.c());
  return out;
}

Point point_from_json(const Json& j) {
  const std::size_t n = positive_field(j, "n");
  const std::size_t p = positive_field(j, "p");
  const std::size_t q = positive_field(j, "q");
  const std::size_t r = j.contains("r") ? positive_field(j, "r") : 1;
  const Json& a_json = field(j, "A");
  std::vector<Matrix> a;
  // A lone matrix is accepted when r = 1: its first entry is a row, not a matrix.
  const bool single = a_json.is_array() && !a_json.empty() && a_json[0].is_array() &&
                      !a_json[0].empty() && !a_json[0][0].is_array();
  if (r == 1 && single) {
    a.push_back(matrix_from_json(a_json, n, n));
  } else {
    if (!a_json.is_array() || a_json.size() != r) malformed("\"A\" must list r matrices");
    for (const auto& m : a_json) a.push_back(matrix_from_json(m, n, n));
  }
  return Point(matrix_from_json(field(j, "B"), n, p), matrix_from_json(field(j, "C"), q, n),
               std::move(a));
}

Json to_json(const InvariantVector& v) {
  Json out;
  Json tau = Json::array();
  for (const auto& t : v.tau) tau.push_back(to_json(t));
  Json gamma = Json::array();
  for (const auto& g : v.gamma) gamma.push_back(to_json(g));
  out["tau"] = std::move(tau);
  out["gamma"] = std::move(gamma);
  return out;
}

InvariantVector invariant_vector_from_json(const Json& j) {
  InvariantVector out;
  const Json& tau = field(j, "tau");
  const Json& gamma = field(j, "gamma");
  if (!tau.is_array() || !gamma.is_array() || tau.size() != gamma.size())
    malformed("\"tau\" and \"gamma\" must be arrays of equal length");
  for (const auto& t : tau) out.tau.push_back(rational_from_json(t));
  for (const auto& g : gamma) out.gamma.push_back(matrix_from_json(g));
  return out;
}

Json to_json(const WordInvariants& v) {
  Json tau = Json::object();
  for (const auto& [word, value] : v.tau) tau[join_word(word)] = to_json(value);
  Json gamma = Json::object();
  for (const auto& [word, value] : v.gamma) gamma[join_word(word)] = to_json(value);
  Json out;
  out["tau"] = std::move(tau);
  out["gamma"] = std::move(gamma);
  return out;
}

Json to_json(const StabilizerReport& report) {
  Json out;
  out["stab_dim"] = report.stab_dim;
  out["orbit_dim"] = report.orbit_dim;
  out["kernel_basis"] = to_json(report.kernel_basis.basis());
  return out;
}

Json to_json(const ComponentInterval& interval) {
  Json out;
  out["in_null_cone"] = interval.in_null_cone;
  if (interval.in_null_cone) {
    out["d_min"] = interval.d_min;
    out["d_max"] = interval.d_max;
  } else {
    out["d_min"] = nullptr;
    out["d_max"] = nullptr;
  }
  return out;
}

Json to_json(const Certificate& cert) {
  Json out;
  out["k"] = cert.k;
  out["g"] = to_json(cert.g);
  out["lambda"] = cert.lambda.lambda;
  return out;
}

Json to_json(const NullconeSummary& summary) {
  Json out;
  out["component_dims"] = summary.component_dims;
  out["nullcone_dim"] = summary.nullcone_dim;
  out["equidimensional"] = summary.equidimensional;
  return out;
}

ReconstructionInput reconstruction_input_from_json(const Json& j) {
  const Json& t = field(j, "t");
  const Json& gamma = field(j, "gamma");
  if (!t.is_array() || t.empty()) malformed("\"t\" must be a nonempty array");
  if (!gamma.is_array() || gamma.size() != t.size())
    malformed("\"gamma\" must hold one matrix per entry of \"t\"");
  ReconstructionInput out;
  for (const auto& x : t) out.t.push_back(rational_from_json(x));
  for (const auto& g : gamma) out.gamma.push_back(matrix_from_json(g));
  const std::size_t q = out.gamma[0].rows(), p = out.gamma[0].cols();
  if (q == 0 || p == 0) malformed("gamma matrices must be nonempty");
  for (const auto& g : out.gamma)
    if (g.rows() != q || g.cols() != p) malformed("gamma matrices differ in shape");
  return out;
}

}  // namespace eao::json
