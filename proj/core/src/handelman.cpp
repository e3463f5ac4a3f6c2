#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "equicert/families.hpp"
#include "equicert/identities.hpp"
#include "equicert/maxent.hpp"
#include "equicert/measures.hpp"

namespace equicert {

namespace {

constexpr double kArmijo = 1e-4;
constexpr double kMinStep = 1e-14;
// Squared Newton decrement below which the iterate is stationary. The decrement
// stays of order one along a recession direction, so this also separates
// genuine convergence from a dual drifting to infinity.
constexpr double kDecrementTol = 1e-12;
constexpr double kDivergenceBound = 1e13;
// Once the decrement is below the objective's rounding noise, full Newton
// steps are taken without the descent test until the residual is this far
// under tolerance, for at most kMaxPolish steps.
constexpr double kPolish = 1e-3;
constexpr unsigned kMaxPolish = 4;

// (m; k_1, ..., k_r) = m! / (k_1! ... k_r!)
double multinomial(unsigned m, const Exponent& parts) {
  mpz_class num = factorial(m);
  mpz_class den = 1;
  for (unsigned k : parts) den *= factorial(k);
  return mpq_class(num, den).get_d();
}

// Dual of the Handelman program in coordinates z_gamma = <l, g^gamma>, |gamma| = n.
// Every generator satisfies g^alpha = sum_gamma E(alpha, gamma) g^gamma with E >= 0
// because g_1 + ... + g_{d+1} = 1.
struct HandelmanProblem {
  std::size_t d = 1;
  unsigned n = 0;
  std::vector<Exponent> top;
  std::vector<Exponent> generators;
  std::vector<Exponent> monomials;
  Eigen::MatrixXd expansion;     // generators x top
  Eigen::MatrixXd top_to_monos;  // monomials x top: coefficients of g^gamma
  Eigen::MatrixXd monos_from_z;  // monomials x top: l_beta = row . z
  Eigen::VectorXd target;        // p in the top basis

  HandelmanProblem(std::size_t dim, unsigned degree, const MPoly& p) : d(dim), n(degree) {
    top = homogeneous_exponents(d + 1, n);
    generators = graded_basis(d + 1, n);
    monomials = graded_basis(d, n);
    const auto ntop = static_cast<Eigen::Index>(top.size());

    expansion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(generators.size()), ntop);
    for (std::size_t a = 0; a < generators.size(); ++a) {
      const Exponent& alpha = generators[a];
      for (std::size_t t = 0; t < top.size(); ++t) {
        Exponent diff(d + 1);
        bool dominates = true;
        for (std::size_t i = 0; i <= d && dominates; ++i) {
          if (top[t][i] < alpha[i]) dominates = false;
          else diff[i] = top[t][i] - alpha[i];
        }
        if (dominates) {
          expansion(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(t)) =
              multinomial(n - total_degree(alpha), diff);
        }
      }
    }

    // x^beta is the generator (beta, 0).
    monos_from_z = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(monomials.size()), ntop);
    for (std::size_t b = 0; b < monomials.size(); ++b) {
      Exponent alpha = monomials[b];
      alpha.push_back(0);
      const auto it = std::find(generators.begin(), generators.end(), alpha);
      monos_from_z.row(static_cast<Eigen::Index>(b)) =
          expansion.row(static_cast<Eigen::Index>(it - generators.begin()));
    }

    RationalMatrix exact_basis(monomials.size(), top.size());
    top_to_monos = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(monomials.size()), ntop);
    for (std::size_t t = 0; t < top.size(); ++t) {
      const auto coeffs = generator_coefficients(d, n, top[t]);
      for (std::size_t b = 0; b < monomials.size(); ++b) {
        exact_basis(b, t) = coeffs[b];
        top_to_monos(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(t)) = coeffs[b].to_double();
      }
    }

    std::vector<Rational> rhs(monomials.size());
    for (std::size_t b = 0; b < monomials.size(); ++b) rhs[b] = p.coeff(monomials[b]);
    const auto in_top = solve_exact(exact_basis, rhs);
    target.resize(ntop);
    for (Eigen::Index t = 0; t < ntop; ++t) target(t) = in_top[static_cast<std::size_t>(t)].to_double();
  }

  // +inf outside the domain.
  double objective(const Eigen::VectorXd& z, Eigen::VectorXd* pairings = nullptr) const {
    const Eigen::VectorXd s = expansion * z;
    double value = target.dot(z);
    for (Eigen::Index a = 0; a < s.size(); ++a) {
      if (!(s(a) > 0.0)) return std::numeric_limits<double>::infinity();
      value -= std::log(s(a));
    }
    if (pairings) *pairings = s;
    return value;
  }

  DualFunctional dual(const Eigen::VectorXd& z) const {
    DualFunctional f{monomials, {}};
    const Eigen::VectorXd l = monos_from_z * z;
    f.values.assign(l.data(), l.data() + l.size());
    return f;
  }

  HandelmanCertificate certificate(const Eigen::VectorXd& s, const MPoly& p) const {
    HandelmanCertificate cert{d, n, {}, p};
    for (std::size_t a = 0; a < generators.size(); ++a) {
      cert.weights.push_back({generators[a], 1.0 / s(static_cast<Eigen::Index>(a))});
    }
    return cert;
  }
};

HandelmanSolution solve(const HandelmanProblem& problem, const MPoly& p, const SolverOptions& options) {
  const auto ntop = static_cast<Eigen::Index>(problem.top.size());
  Eigen::VectorXd z = Eigen::VectorXd::Ones(ntop);
  if (options.initial_dual) {
    if (options.initial_dual->size() != problem.monomials.size()) {
      throw std::invalid_argument("initial_dual has " + std::to_string(options.initial_dual->size()) +
                                  " entries, expected " + std::to_string(problem.monomials.size()));
    }
    const Eigen::Map<const Eigen::VectorXd> l(options.initial_dual->data(),
                                              static_cast<Eigen::Index>(options.initial_dual->size()));
    z = problem.top_to_monos.transpose() * l;
  }
  Eigen::VectorXd s;
  double f = problem.objective(z, &s);
  if (!std::isfinite(f)) throw std::invalid_argument("initial dual point is not strictly feasible");
  const double bound = kDivergenceBound * std::max(1.0, z.cwiseAbs().maxCoeff());

  SolverReport report;
  bool stationary = false;
  unsigned polish_steps = 0;
  std::string failure;
  for (unsigned iter = 0; iter < options.max_iter; ++iter) {
    const Eigen::VectorXd c = s.cwiseInverse();
    const Eigen::VectorXd grad = problem.target - problem.expansion.transpose() * c;
    const Eigen::MatrixXd weighted = c.asDiagonal() * problem.expansion;
    const Eigen::MatrixXd hess = weighted.transpose() * weighted;
    const Eigen::VectorXd step = hess.ldlt().solve(-grad);
    const double decrement = -grad.dot(step);
    const double residual = (problem.top_to_monos * grad).cwiseAbs().maxCoeff();

    const bool polishing = decrement <= kDecrementTol;
    if (polishing && (residual <= kPolish * options.tol || polish_steps == kMaxPolish)) {
      stationary = true;
      break;
    }
    if (z.cwiseAbs().maxCoeff() > bound) {
      failure = "dual iterate diverging";
      break;
    }

    double t = 1.0;
    Eigen::VectorXd s_next;
    double f_next = std::numeric_limits<double>::infinity();
    while (t >= kMinStep) {
      f_next = problem.objective(z + t * step, &s_next);
      if (std::isfinite(f_next) && (polishing || f_next <= f + kArmijo * t * grad.dot(step))) break;
      t *= 0.5;
    }
    if (t < kMinStep) {
      // Precision floor: no descent left to find.
      stationary = residual <= options.tol;
      if (!stationary) failure = "line search failed";
      break;
    }
    if (polishing) ++polish_steps;
    z += t * step;
    s = s_next;
    f = f_next;
    report.history.push_back({iter + 1, f, decrement, t, residual});
    report.iterations = iter + 1;
  }

  HandelmanSolution solution{problem.certificate(s, p), problem.dual(z), {}};
  report.residual = verify_certificate(solution.certificate, p);
  report.objective = 0.0;
  for (const auto& w : solution.certificate.weights) report.objective += std::log(w.value);
  report.converged = stationary && report.residual <= options.tol;
  if (!report.converged) {
    if (failure.empty()) failure = stationary ? "residual above tolerance" : "iteration limit reached";
    report.diagnostic = "no interior certificate found at degree " + std::to_string(problem.n) + " (" +
                        failure + ")";
    throw NoInteriorCertificate(report.diagnostic, report, solution.dual);
  }
  solution.report = std::move(report);
  return solution;
}

}  // namespace

std::vector<Rational> generator_coefficients(std::size_t d, unsigned n, const Exponent& alpha) {
  const MPoly g = simplex_generator_power(d, alpha);
  const auto basis = graded_basis(d, n);
  std::vector<Rational> out;
  out.reserve(basis.size());
  for (const auto& beta : basis) out.push_back(g.coeff(beta));
  return out;
}

HandelmanSolution solve_simplex_handelman(const MPoly& p, unsigned n, const SolverOptions& options) {
  if (n == 0) throw std::invalid_argument("solve_handelman: n must be >= 1");
  if (p.total_degree() > static_cast<int>(n)) {
    throw std::invalid_argument("solve_handelman: target degree " + std::to_string(p.total_degree()) +
                                " exceeds n = " + std::to_string(n));
  }
  const HandelmanProblem problem(p.dimension(), n, p);
  return solve(problem, p, options);
}

HandelmanSolution solve_handelman(const UPoly& p, unsigned n, const SolverOptions& options) {
  return solve_simplex_handelman(MPoly::from_upoly(p), n, options);
}

HandelmanSolution solve_simplex(unsigned d, unsigned n, const SolverOptions& options) {
  if (d == 0) throw std::invalid_argument("solve_simplex: d must be >= 1");
  return solve_simplex_handelman(MPoly::constant(d, simplex_generator_count(d, n)), n, options);
}

double uniform_candidate_deviation(const HandelmanCertificate& cert) {
  const MomentFunctional uniform(MeasureId::simplex_uniform(cert.d));
  double worst = 0.0;
  for (const auto& w : cert.weights) {
    const double pairing = poly_moment(uniform, simplex_generator_power(cert.d, w.alpha)).to_double();
    worst = std::max(worst, std::abs(w.value * pairing - 1.0));
  }
  return worst;
}

}  // namespace equicert
