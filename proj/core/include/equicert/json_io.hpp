#ifndef EQUICERT_JSON_IO_HPP
#define EQUICERT_JSON_IO_HPP

#include <vector>

#include <nlohmann/json.hpp>

#include "equicert/identities.hpp"
#include "equicert/maxent.hpp"
#include "equicert/momatrix.hpp"
#include "equicert/rational.hpp"
#include "equicert/rational_matrix.hpp"

/// JSON encodings of reports and certificates. Rationals are "p/q" strings.
/// Each to_json has a matching from_json, so `json j = x; j.get<T>()` round-trips.
/// from_json throws nlohmann::json::exception on schema mismatches and
/// std::invalid_argument on malformed rationals.
namespace equicert {

void to_json(nlohmann::json& j, const Rational& r);
void from_json(const nlohmann::json& j, Rational& r);

void to_json(nlohmann::json& j, const IdentityParams& p);
void from_json(const nlohmann::json& j, IdentityParams& p);

void to_json(nlohmann::json& j, const IdentityReport& r);
void from_json(const nlohmann::json& j, IdentityReport& r);

void to_json(nlohmann::json& j, const SolverReport& r);
void from_json(const nlohmann::json& j, SolverReport& r);

/// {"type":"handelman","d","n","weights":[{"alpha":[..],"value":float}]}; the target is not encoded.
void to_json(nlohmann::json& j, const HandelmanCertificate& c);
void from_json(const nlohmann::json& j, HandelmanCertificate& c);

/// Same layout with "value" as a "p/q" string.
void to_json(nlohmann::json& j, const ExactHandelmanCertificate& c);
void from_json(const nlohmann::json& j, ExactHandelmanCertificate& c);

/// {"type":"putinar","n","gramA":[[..]],"gramB":[[..]]}
void to_json(nlohmann::json& j, const PutinarCertificate& c);
void from_json(const nlohmann::json& j, PutinarCertificate& c);

void to_json(nlohmann::json& j, const ExactPutinarCertificate& c);
void from_json(const nlohmann::json& j, ExactPutinarCertificate& c);

void to_json(nlohmann::json& j, const DualFunctional& f);
void from_json(const nlohmann::json& j, DualFunctional& f);

void to_json(nlohmann::json& j, const RationalMatrix& m);
void from_json(const nlohmann::json& j, RationalMatrix& m);

/// {"measure","degree","basis","entries"}
nlohmann::json matrix_report(const MeasureId& measure, unsigned degree, const std::vector<Exponent>& basis,
                             const RationalMatrix& entries);

/// {"basis","entries"} read back from matrix_report output.
struct MatrixReport {
  std::vector<Exponent> basis;
  RationalMatrix entries;
};
MatrixReport parse_matrix_report(const nlohmann::json& j);

/// Sparse terms as [{"exponent":[..],"coefficient":"p/q"}].
nlohmann::json polynomial_terms(const MPoly& p);
MPoly parse_polynomial_terms(const nlohmann::json& j, std::size_t dimension);

}  // namespace equicert

#endif  // EQUICERT_JSON_IO_HPP
