#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "equicert/families.hpp"
#include "equicert/identities.hpp"
#include "equicert/json_io.hpp"
#include "equicert/maxent.hpp"
#include "equicert/measures.hpp"
#include "equicert/momatrix.hpp"

namespace equicert::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  unsigned n = 1;
  unsigned d = 2;
  unsigned max_degree = 10;
  std::string measure = "arcsine";
  std::string normalization = "paper-pi";
  std::string identity;
  std::string format = "json";
  std::string output;
  std::string domain;
  std::string shift_coeffs;
  std::string target_constant;
  std::string target_coeffs;
  std::vector<std::string> points;
  double tol = 1e-10;
  unsigned max_iter = 200;
  bool exact = false;
  bool inverse = false;
};

// "p", "p/q", or a decimal literal (taken at its exact binary value).
Rational parse_scalar(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument&) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + text + "'");
    }
    if (used != text.size()) throw UsageError("not a number: '" + text + "'");
    return Rational::from_double(v);
  }
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_scalar(item));
  if (out.empty()) throw UsageError("empty list '" + text + "'");
  return out;
}

std::vector<std::vector<Rational>> parse_points(const std::vector<std::string>& raw, std::size_t dim) {
  std::vector<std::vector<Rational>> out;
  for (const auto& p : raw) {
    auto coords = parse_list(p);
    if (coords.size() != dim) {
      throw UsageError("point '" + p + "' has " + std::to_string(coords.size()) + " coordinates, expected " +
                       std::to_string(dim));
    }
    out.push_back(std::move(coords));
  }
  return out;
}

json point_json(const std::vector<Rational>& p) {
  json out = json::array();
  for (const auto& c : p) out.push_back(c.to_double());
  return out;
}

MeasureId measure_from(const Options& o) {
  return MeasureId::parse(o.measure, o.d, parse_normalization(o.normalization));
}

std::string csv_field(const std::string& s) {
  return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

class Command {
 public:
  Command(const Options& opts, std::ostream& out, std::ostream& err) : o_(opts), out_(out), err_(err) {}

  void emit(const json& j) { emit_text(j.dump(2) + "\n"); }

  void emit_text(const std::string& text) {
    if (o_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(o_.output);
    if (!file) throw UsageError("cannot open output file '" + o_.output + "'");
    file << text;
  }

  int pell() {
    const IdentityReport report = verify_pell(o_.n);
    emit({{"n", o_.n},
          {"T", polynomial_terms(MPoly::from_upoly(cheb(ChebKind::First, o_.n)))},
          {"U", polynomial_terms(MPoly::from_upoly(cheb(ChebKind::Second, o_.n - 1)))},
          {"report", report}});
    return report.holds ? kSuccess : kNegative;
  }

  int moments() {
    const MeasureId measure = measure_from(o_);
    const MomentFunctional f(measure);
    const auto basis = graded_basis(measure.dimension(), o_.max_degree);
    if (o_.format == "csv") {
      std::string text = "exponent,value\n";
      for (const auto& e : basis) {
        std::string exp;
        for (std::size_t i = 0; i < e.size(); ++i) exp += (i ? "," : "") + std::to_string(e[i]);
        text += csv_field(exp) + "," + f.moment(e).str() + "\n";
      }
      emit_text(text);
      return kSuccess;
    }
    json rows = json::array();
    for (const auto& e : basis) rows.push_back({{"exponent", e}, {"value", f.moment(e)}});
    emit({{"measure", measure.name()}, {"max_degree", o_.max_degree}, {"moments", rows}});
    return kSuccess;
  }

  std::optional<MPoly> shift() const {
    if (o_.shift_coeffs.empty()) return std::nullopt;
    return MPoly::from_upoly(UPoly(parse_list(o_.shift_coeffs)));
  }

  int matrix() {
    const MeasureId measure = measure_from(o_);
    const auto g = shift();
    if (g && !measure.is_interval()) throw UsageError("--shift-coeffs requires an interval measure");
    const MomentMatrix m = moment_matrix(measure, o_.n, g);
    json j = matrix_report(measure, o_.n, m.basis, m.entries);
    if (g) j["shift"] = polynomial_terms(*g);
    if (o_.inverse) j["inverse"] = invert_exact(m);
    emit(j);
    return kSuccess;
  }

  int christoffel() {
    const MeasureId measure = measure_from(o_);
    const auto g = shift();
    if (g && !measure.is_interval()) throw UsageError("--shift-coeffs requires an interval measure");
    const auto points = parse_points(o_.points, measure.dimension());
    const ChristoffelForm form = christoffel_form(measure, o_.n, g);
    json values = json::array();
    for (const auto& p : points) {
      values.push_back({{"point", p}, {"value", christoffel_eval(form, p)}});
    }
    emit({{"measure", measure.name()},
          {"degree", o_.n},
          {"polynomial", polynomial_terms(form.quadratic_form_poly)},
          {"values", values}});
    return kSuccess;
  }

  int verify() {
    IdentityReport report;
    const std::string& id = o_.identity;
    if (id == "pell") {
      report = verify_pell(o_.n);
    } else if (id == "unity1" || id == "unity2" || id == "cheby2") {
      report = verify_unity_interval(o_.n, parse_unity_variant(id));
    } else if (id == "unity01") {
      report = verify_unity_01(o_.n);
    } else if (id == "simplex-unity") {
      report = verify_simplex_unity(o_.d, o_.n);
    } else {
      report = verify_simplex_equilibrium(o_.n, parse_normalization(o_.normalization));
    }
    if (report.holds && !report.expected_constant) {
      err_ << "note: no proven constant for these parameters; reporting the computed value only\n";
    } else if (!report.matches_expected()) {
      err_ << "warning: " << report.identity << " reduces to " << *report.constant << ", expected "
           << *report.expected_constant << "\n";
    }
    emit(report);
    return report.holds ? kSuccess : kNegative;
  }

  std::optional<Rational> target_constant() const {
    if (o_.target_constant.empty()) return std::nullopt;
    return parse_scalar(o_.target_constant);
  }

  std::optional<UPoly> target_poly() const {
    if (!o_.target_coeffs.empty()) return UPoly(parse_list(o_.target_coeffs));
    if (auto c = target_constant()) return UPoly::constant(*c);
    return std::nullopt;
  }

  SolverOptions solver_options() const {
    SolverOptions s;
    s.tol = o_.tol;
    s.max_iter = o_.max_iter;
    return s;
  }

  template <typename Solve>
  int run_solver(Solve&& solve) {
    try {
      return solve();
    } catch (const NoInteriorCertificate& e) {
      err_ << e.what() << "\n";
      emit({{"report", e.report()}, {"dual", e.last_dual()}});
      return kNegative;
    }
  }

  template <typename Solution, typename Target>
  json solution_json(const Solution& s, const Target& target) {
    json j{{"certificate", s.certificate}, {"dual", s.dual}, {"report", s.report}};
    if (o_.exact) {
      const auto exact = rationalize_certificate(s);
      if (!exact) {
        err_ << "warning: rounded dual left the feasible domain; no exact certificate\n";
        j["exact"] = nullptr;
      } else {
        const Rational residual = verify_certificate_exact(*exact, target);
        j["exact"] = {{"certificate", *exact}, {"residual", residual}, {"identical", residual.is_zero()}};
        if (!residual.is_zero()) err_ << "warning: rationalized certificate has residual " << residual << "\n";
      }
    }
    return j;
  }

  int handelman() {
    return run_solver([&] {
      const UPoly p = target_poly().value_or(UPoly::constant(interval_generator_count(o_.n)));
      const auto s = solve_handelman(p, o_.n, solver_options());
      emit(solution_json(s, MPoly::from_upoly(p)));
      return kSuccess;
    });
  }

  int putinar() {
    return run_solver([&] {
      const UPoly p = target_poly().value_or(UPoly::constant(Rational(2 * static_cast<std::int64_t>(o_.n) + 1)));
      const auto s = solve_putinar(o_.n, solver_options(), p);
      emit(solution_json(s, p));
      return kSuccess;
    });
  }

  int simplex() {
    return run_solver([&] {
      const auto s = solve_simplex(o_.d, o_.n, solver_options());
      json j = solution_json(s, MPoly::constant(o_.d, simplex_generator_count(o_.d, o_.n)));
      j["uniform_candidate_deviation"] = uniform_candidate_deviation(s.certificate);
      emit(j);
      return kSuccess;
    });
  }

  struct Member {
    json generator;
    Rational weight;
    MPoly poly;
  };

  int partition() {
    std::vector<Member> members;
    std::size_t dim = 1;
    if (o_.domain == "interval01") {
      for (const auto& a : graded_basis(2, o_.n)) {
        const Rational w = Rational(1) / (beta_integral(a[0], a[1]) * interval_generator_count(o_.n));
        members.push_back({{{"alpha", a}}, w, simplex_generator_power(1, a)});
      }
    } else if (o_.domain == "interval11") {
      const Rational w(1, 2 * static_cast<std::int64_t>(o_.n) + 1);
      for (unsigned j = 0; j <= o_.n; ++j) {
        members.push_back({{{"family", "T"}, {"index", j}}, w,
                           MPoly::from_upoly(cheb_orthonormal_square(ChebKind::First, j))});
      }
      for (unsigned j = 0; j < o_.n; ++j) {
        members.push_back({{{"family", "U"}, {"index", j}}, w,
                           MPoly::from_upoly(one_minus_x_squared() * cheb_orthonormal_square(ChebKind::Second, j))});
      }
    } else {
      dim = o_.d;
      const MomentFunctional uniform(MeasureId::simplex_uniform(o_.d));
      const Rational total = simplex_generator_count(o_.d, o_.n);
      for (const auto& a : graded_basis(o_.d + 1, o_.n)) {
        const MPoly g = simplex_generator_power(o_.d, a);
        members.push_back({{{"alpha", a}}, Rational(1) / (poly_moment(uniform, g) * total), g});
      }
    }

    MPoly sum(dim);
    json listed = json::array();
    for (const auto& m : members) {
      sum += m.poly * m.weight;
      listed.push_back({{"generator", m.generator},
                        {"weight", m.weight},
                        {"polynomial", polynomial_terms(m.poly * m.weight)}});
    }
    const auto constant = constant_reduce(sum);
    if (!constant || *constant != Rational(1)) {
      err_ << "warning: members do not sum to 1 identically at these parameters\n";
    }

    json evaluations = json::array();
    for (const auto& p : parse_points(o_.points, dim)) {
      std::vector<double> x;
      for (const auto& c : p) x.push_back(c.to_double());
      json values = json::array();
      double row = 0.0;
      for (const auto& m : members) {
        const double v = (m.poly * m.weight).eval_double(x);
        values.push_back(v);
        row += v;
      }
      evaluations.push_back({{"point", point_json(p)}, {"values", values}, {"sum", row}});
    }

    json j{{"domain", o_.domain},
           {"n", o_.n},
           {"members", listed},
           {"exact_sum", constant ? json(*constant) : json(nullptr)},
           {"evaluations", evaluations}};
    if (o_.domain == "simplex") j["d"] = o_.d;
    emit(j);
    return constant && *constant == Rational(1) ? kSuccess : kNegative;
  }

 private:
  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

const std::vector<std::string> kMeasures = {"arcsine", "arcsine-g", "lebesgue01", "simplex-uniform",
                                            "simplex-equilibrium"};
const std::vector<std::string> kNormalizations = {"paper-pi", "probability"};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact identities, moment matrices and max-entropy certificates", "equicert"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  const auto add_n = [&](CLI::App* c, const char* what) {
    return c->add_option("--n", o.n, what)->check(CLI::PositiveNumber);
  };
  const auto add_d = [&](CLI::App* c) {
    return c->add_option("--d", o.d, "Simplex dimension")->check(CLI::PositiveNumber);
  };
  const auto add_measure = [&](CLI::App* c) {
    c->add_option("--measure", o.measure, "Measure name")->check(CLI::IsMember(kMeasures));
    add_d(c);
    c->add_option("--normalization", o.normalization, "Simplex equilibrium normalization")
        ->check(CLI::IsMember(kNormalizations));
  };
  const auto add_output = [&](CLI::App* c) { c->add_option("--output,-o", o.output, "Write the report here"); };

  auto* pell = app.add_subcommand("pell", "T_n, U_{n-1} and the Pell identity check");
  add_n(pell, "Degree")->required();

  auto* moments = app.add_subcommand("moments", "Exact moment table");
  add_measure(moments);
  moments->add_option("--max-degree", o.max_degree, "Largest total degree");
  moments->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* matrix = app.add_subcommand("matrix", "Moment or localizing matrix");
  add_measure(matrix);
  add_n(matrix, "Degree")->required();
  matrix->add_option("--shift-coeffs", o.shift_coeffs, "Localizing polynomial, ascending coefficients");
  matrix->add_flag("--inverse", o.inverse, "Also emit the exact inverse");

  auto* christoffel = app.add_subcommand("christoffel", "Reciprocal Christoffel function");
  add_measure(christoffel);
  add_n(christoffel, "Degree")->required();
  christoffel->add_option("--shift-coeffs", o.shift_coeffs, "Localizing polynomial, ascending coefficients");
  christoffel->add_option("--at", o.points, "Evaluation point, comma separated (repeatable)");

  auto* verify = app.add_subcommand("verify", "Exact identity verification");
  verify->add_option("--identity", o.identity, "Identity name")
      ->required()
      ->check(CLI::IsMember(
          {"pell", "unity1", "unity2", "cheby2", "unity01", "simplex-unity", "simplex-equilibrium"}));
  add_n(verify, "Degree")->required();
  add_d(verify);
  verify->add_option("--normalization", o.normalization, "Simplex equilibrium normalization")
      ->check(CLI::IsMember(kNormalizations));
  verify->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json"}));

  auto* maxent = app.add_subcommand("maxent", "Max-entropy certificates");
  maxent->require_subcommand(1);
  const auto add_solver = [&](CLI::App* c, bool with_target) {
    add_n(c, "Degree")->required();
    c->add_option("--tol", o.tol, "Residual tolerance")->check(CLI::PositiveNumber);
    c->add_option("--max-iter", o.max_iter, "Newton iteration cap")->check(CLI::PositiveNumber);
    c->add_flag("--exact", o.exact, "Rationalize the dual and verify exactly");
    if (with_target) {
      auto* tc = c->add_option("--target-constant", o.target_constant, "Constant target");
      c->add_option("--target-coeffs", o.target_coeffs, "Target polynomial, ascending coefficients")->excludes(tc);
    }
    add_output(c);
  };
  auto* handelman = maxent->add_subcommand("handelman", "Handelman certificate on [0, 1]");
  add_solver(handelman, true);
  auto* putinar = maxent->add_subcommand("putinar", "Putinar certificate on [-1, 1]");
  add_solver(putinar, true);
  auto* simplex = maxent->add_subcommand("simplex", "Handelman certificate of C(d+1+n, n) on the d-simplex");
  add_solver(simplex, false);
  add_d(simplex);

  auto* partition = app.add_subcommand("partition", "Partition of unity members and point values");
  partition->add_option("--domain", o.domain, "interval01, interval11 or simplex")
      ->required()
      ->check(CLI::IsMember({"interval01", "interval11", "simplex"}));
  add_n(partition, "Degree")->required();
  add_d(partition);
  partition->add_option("--at", o.points, "Evaluation point, comma separated (repeatable)");

  for (auto* c : {pell, moments, matrix, christoffel, verify, partition}) add_output(c);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  Command cmd(o, out, err);
  try {
    if (pell->parsed()) return cmd.pell();
    if (moments->parsed()) return cmd.moments();
    if (matrix->parsed()) return cmd.matrix();
    if (christoffel->parsed()) return cmd.christoffel();
    if (verify->parsed()) return cmd.verify();
    if (partition->parsed()) return cmd.partition();
    if (handelman->parsed()) return cmd.handelman();
    if (putinar->parsed()) return cmd.putinar();
    return cmd.simplex();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NotPositiveDefinite& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  }
}

}  // namespace equicert::cli
