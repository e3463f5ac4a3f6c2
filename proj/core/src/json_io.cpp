#include "equicert/json_io.hpp"

#include <string>

namespace equicert {

using nlohmann::json;

namespace {

template <typename T>
json optional_field(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> read_optional(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

void to_json(json& j, const Rational& r) { j = r.str(); }
void from_json(const json& j, Rational& r) { r = Rational::parse(j.get<std::string>()); }

void to_json(json& j, const IdentityParams& p) {
  j = json::object();
  if (p.n) j["n"] = *p.n;
  if (p.d) j["d"] = *p.d;
  if (p.variant) j["variant"] = *p.variant;
  if (p.normalization) j["normalization"] = *p.normalization;
}

void from_json(const json& j, IdentityParams& p) {
  p.n = read_optional<unsigned>(j, "n");
  p.d = read_optional<unsigned>(j, "d");
  p.variant = read_optional<std::string>(j, "variant");
  p.normalization = read_optional<std::string>(j, "normalization");
}

void to_json(json& j, const IdentityReport& r) {
  j = json{{"identity", r.identity},
           {"params", r.params},
           {"holds", r.holds},
           {"constant", optional_field(r.constant)},
           {"expected_constant", optional_field(r.expected_constant)},
           {"residual_terms", r.residual_terms}};
}

void from_json(const json& j, IdentityReport& r) {
  r.identity = j.at("identity").get<std::string>();
  r.params = j.at("params").get<IdentityParams>();
  r.holds = j.at("holds").get<bool>();
  r.constant = read_optional<Rational>(j, "constant");
  r.expected_constant = read_optional<Rational>(j, "expected_constant");
  r.residual_terms = j.at("residual_terms").get<std::size_t>();
}

void to_json(json& j, const SolverReport& r) {
  j = json{{"iterations", r.iterations},
           {"residual", r.residual},
           {"objective", r.objective},
           {"converged", r.converged},
           {"steps", r.step_history_length()}};
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
}

void from_json(const json& j, SolverReport& r) {
  r.iterations = j.at("iterations").get<unsigned>();
  r.residual = j.at("residual").get<double>();
  r.objective = j.at("objective").get<double>();
  r.converged = j.at("converged").get<bool>();
  r.diagnostic = j.value("diagnostic", std::string{});
}

void to_json(json& j, const HandelmanCertificate& c) {
  json weights = json::array();
  for (const auto& w : c.weights) weights.push_back({{"alpha", w.alpha}, {"value", w.value}});
  j = json{{"type", "handelman"}, {"d", c.d}, {"n", c.n}, {"weights", weights}};
}

void from_json(const json& j, HandelmanCertificate& c) {
  if (j.at("type") != "handelman") throw std::invalid_argument("not a handelman certificate");
  c.d = j.at("d").get<std::size_t>();
  c.n = j.at("n").get<unsigned>();
  c.target = MPoly(c.d);
  c.weights.clear();
  for (const auto& w : j.at("weights")) c.weights.push_back({w.at("alpha").get<Exponent>(), w.at("value").get<double>()});
}

void to_json(json& j, const ExactHandelmanCertificate& c) {
  json weights = json::array();
  for (const auto& [alpha, value] : c.weights) weights.push_back({{"alpha", alpha}, {"value", value}});
  j = json{{"type", "handelman"}, {"d", c.d}, {"n", c.n}, {"weights", weights}};
}

void from_json(const json& j, ExactHandelmanCertificate& c) {
  if (j.at("type") != "handelman") throw std::invalid_argument("not a handelman certificate");
  c.d = j.at("d").get<std::size_t>();
  c.n = j.at("n").get<unsigned>();
  c.weights.clear();
  for (const auto& w : j.at("weights")) {
    c.weights.emplace_back(w.at("alpha").get<Exponent>(), w.at("value").get<Rational>());
  }
}

void to_json(json& j, const PutinarCertificate& c) {
  j = json{{"type", "putinar"}, {"n", c.n}, {"gramA", c.gram_a}, {"gramB", c.gram_b}};
}

void from_json(const json& j, PutinarCertificate& c) {
  if (j.at("type") != "putinar") throw std::invalid_argument("not a putinar certificate");
  c.n = j.at("n").get<unsigned>();
  c.gram_a = j.at("gramA").get<DenseMatrix>();
  c.gram_b = j.at("gramB").get<DenseMatrix>();
}

void to_json(json& j, const ExactPutinarCertificate& c) {
  j = json{{"type", "putinar"}, {"n", c.n}, {"gramA", c.gram_a}, {"gramB", c.gram_b}};
}

void from_json(const json& j, ExactPutinarCertificate& c) {
  if (j.at("type") != "putinar") throw std::invalid_argument("not a putinar certificate");
  c.n = j.at("n").get<unsigned>();
  c.gram_a = j.at("gramA").get<RationalMatrix>();
  c.gram_b = j.at("gramB").get<RationalMatrix>();
}

void to_json(json& j, const DualFunctional& f) { j = json{{"basis", f.basis}, {"values", f.values}}; }

void from_json(const json& j, DualFunctional& f) {
  f.basis = j.at("basis").get<std::vector<Exponent>>();
  f.values = j.at("values").get<std::vector<double>>();
}

void to_json(json& j, const RationalMatrix& m) {
  j = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    j.push_back(std::move(row));
  }
}

void from_json(const json& j, RationalMatrix& m) {
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  m = RationalMatrix(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j.at(r).size() != cols) throw std::invalid_argument("matrix rows have unequal length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = j.at(r).at(c).get<Rational>();
  }
}

json matrix_report(const MeasureId& measure, unsigned degree, const std::vector<Exponent>& basis,
                   const RationalMatrix& entries) {
  return json{{"measure", measure.name()}, {"degree", degree}, {"basis", basis}, {"entries", entries}};
}

MatrixReport parse_matrix_report(const json& j) {
  return {j.at("basis").get<std::vector<Exponent>>(), j.at("entries").get<RationalMatrix>()};
}

json polynomial_terms(const MPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"exponent", e}, {"coefficient", c}});
  return out;
}

MPoly parse_polynomial_terms(const json& j, std::size_t dimension) {
  MPoly p(dimension);
  for (const auto& t : j) p.add_term(t.at("exponent").get<Exponent>(), t.at("coefficient").get<Rational>());
  return p;
}

}  // namespace equicert
