#include <gtest/gtest.h>

#include "equicert/json_io.hpp"

using namespace equicert;
using nlohmann::json;

TEST(Json, RationalsAreStrings) {
  const json j = Rational(-7, 3);
  EXPECT_EQ(j, "-7/3");
  EXPECT_EQ(json("12").get<Rational>(), Rational(12));
  EXPECT_THROW(json("1/x").get<Rational>(), std::invalid_argument);
}

TEST(Json, IdentityReportSchemaAndRoundTrip) {
  const IdentityReport r = verify_simplex_equilibrium(2, Normalization::Probability);
  const json j = r;
  for (const char* key : {"identity", "params", "holds", "constant", "expected_constant", "residual_terms"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_TRUE(j["constant"].is_string());
  EXPECT_EQ(j.get<IdentityReport>(), r);
  const IdentityReport conj = verify_simplex_unity(2, 3);
  const json jc = conj;
  EXPECT_TRUE(jc["expected_constant"].is_null());
  EXPECT_EQ(json::parse(jc.dump()).get<IdentityReport>(), conj);
}

TEST(Json, HandelmanCertificateRoundTrip) {
  const auto s = solve_handelman(UPoly::constant(6), 2);
  const json j = s.certificate;
  EXPECT_EQ(j["type"], "handelman");
  const auto back = json::parse(j.dump()).get<HandelmanCertificate>();
  ASSERT_EQ(back.weights.size(), s.certificate.weights.size());
  for (std::size_t i = 0; i < back.weights.size(); ++i) {
    EXPECT_EQ(back.weights[i].alpha, s.certificate.weights[i].alpha);
    EXPECT_EQ(back.weights[i].value, s.certificate.weights[i].value);
  }
  const auto exact = rationalize_certificate(s);
  ASSERT_TRUE(exact.has_value());
  const json je = *exact;
  EXPECT_TRUE(je["weights"][0]["value"].is_string());
  const auto eback = json::parse(je.dump()).get<ExactHandelmanCertificate>();
  EXPECT_EQ(eback.weights, exact->weights);
}

TEST(Json, PutinarCertificateRoundTrip) {
  const auto s = solve_putinar(3);
  const json j = s.certificate;
  EXPECT_EQ(j["type"], "putinar");
  const auto back = json::parse(j.dump()).get<PutinarCertificate>();
  EXPECT_EQ(back.gram_a, s.certificate.gram_a);
  EXPECT_EQ(back.gram_b, s.certificate.gram_b);
  const auto exact = rationalize_certificate(s);
  ASSERT_TRUE(exact.has_value());
  const auto eback = json::parse(json(*exact).dump()).get<ExactPutinarCertificate>();
  EXPECT_EQ(eback.gram_a, exact->gram_a);
  EXPECT_EQ(eback.gram_b, exact->gram_b);
  EXPECT_THROW(json(s.certificate).get<HandelmanCertificate>(), std::invalid_argument);
}

TEST(Json, SolverReportRoundTrip) {
  const auto s = solve_handelman(UPoly::constant(3), 1);
  const json j = s.report;
  for (const char* key : {"iterations", "residual", "objective", "converged"}) EXPECT_TRUE(j.contains(key)) << key;
  const auto back = json::parse(j.dump()).get<SolverReport>();
  EXPECT_EQ(back.iterations, s.report.iterations);
  EXPECT_EQ(back.residual, s.report.residual);
  EXPECT_EQ(back.objective, s.report.objective);
  EXPECT_EQ(back.converged, s.report.converged);
}

TEST(Json, MatrixReportRoundTrip) {
  const auto m = moment_matrix(MeasureId::simplex_equilibrium(), 2);
  const json j = matrix_report(m.measure, 2, m.basis, m.entries);
  const auto back = parse_matrix_report(json::parse(j.dump()));
  EXPECT_EQ(back.basis, m.basis);
  EXPECT_EQ(back.entries, m.entries);
}

TEST(Json, PolynomialTermsRoundTrip) {
  const auto form = christoffel_form(MeasureId::simplex_uniform(2), 2);
  const auto back = parse_polynomial_terms(json::parse(polynomial_terms(form.quadratic_form_poly).dump()), 2);
  EXPECT_EQ(back, form.quadratic_form_poly);
}
