#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "equicert/families.hpp"
#include "equicert/maxent.hpp"

namespace equicert {

namespace {

constexpr double kArmijo = 1e-4;
constexpr double kMinStep = 1e-14;
constexpr double kDecrementTol = 1e-12;
constexpr double kDivergenceBound = 1e13;
// Once the decrement is below the objective's rounding noise, full Newton
// steps are taken without the descent test until the residual is this far
// under tolerance, for at most kMaxPolish steps.
constexpr double kPolish = 1e-3;
constexpr unsigned kMaxPolish = 4;

using Matrices = std::vector<Eigen::MatrixXd>;

// Dual of the Putinar program in Chebyshev-moment coordinates psi_k = <y, T_k>.
// The moment matrix is assembled in the basis T_0..T_n and the localizing
// matrix in U_0..U_{n-1}; both are congruent to the monomial ones, so the
// log-det barrier changes only by a constant.
struct PutinarProblem {
  unsigned n = 0;
  Eigen::Index dim = 0;  // 2n + 1
  Matrices moment_basis;     // coefficient matrices of psi_k in the T-basis moment matrix
  Matrices localizing_basis; // same for the U-basis localizing matrix
  Eigen::VectorXd target;    // Chebyshev coefficients of the target
  Eigen::MatrixXd monos_from_psi;
  Eigen::MatrixXd psi_from_monos;
  Eigen::MatrixXd cheb_t;  // row i: monomial coefficients of T_i
  Eigen::MatrixXd cheb_u;  // row i: monomial coefficients of U_i
  double log_det_basis = 0.0;  // 2 log det(cheb_t) + 2 log det(cheb_u)

  PutinarProblem(unsigned degree, const UPoly& p) : n(degree), dim(2 * degree + 1) {
    const auto na = static_cast<Eigen::Index>(n + 1);
    const auto nb = static_cast<Eigen::Index>(n);
    moment_basis.assign(static_cast<std::size_t>(dim), Eigen::MatrixXd::Zero(na, na));
    localizing_basis.assign(static_cast<std::size_t>(dim), Eigen::MatrixXd::Zero(nb, nb));

    // T_i T_j = (T_{i+j} + T_{|i-j|}) / 2
    for (Eigen::Index i = 0; i < na; ++i) {
      for (Eigen::Index j = 0; j < na; ++j) {
        moment_basis[static_cast<std::size_t>(i + j)](i, j) += 0.5;
        moment_basis[static_cast<std::size_t>(std::abs(i - j))](i, j) += 0.5;
      }
    }
    const UPoly g = one_minus_x_squared();
    std::vector<UPoly> us;
    for (unsigned i = 0; i < n; ++i) us.push_back(cheb(ChebKind::Second, i));
    for (Eigen::Index i = 0; i < nb; ++i) {
      for (Eigen::Index j = i; j < nb; ++j) {
        const auto coeffs = to_chebyshev_first(g * us[static_cast<std::size_t>(i)] * us[static_cast<std::size_t>(j)]);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
          localizing_basis[k](i, j) = coeffs[k].to_double();
          localizing_basis[k](j, i) = coeffs[k].to_double();
        }
      }
    }

    target = Eigen::VectorXd::Zero(dim);
    const auto tc = to_chebyshev_first(p);
    for (std::size_t k = 0; k < tc.size(); ++k) target(static_cast<Eigen::Index>(k)) = tc[k].to_double();

    monos_from_psi = Eigen::MatrixXd::Zero(dim, dim);
    psi_from_monos = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
      const auto xj = to_chebyshev_first(UPoly::monomial(static_cast<unsigned>(j)));
      for (std::size_t k = 0; k < xj.size(); ++k) monos_from_psi(j, static_cast<Eigen::Index>(k)) = xj[k].to_double();
      const UPoly tk = cheb(ChebKind::First, static_cast<unsigned>(j));
      for (Eigen::Index m = 0; m <= tk.degree(); ++m) {
        psi_from_monos(j, m) = tk.coeff(static_cast<std::size_t>(m)).to_double();
      }
    }

    cheb_t = Eigen::MatrixXd::Zero(na, na);
    cheb_u = Eigen::MatrixXd::Zero(nb, nb);
    for (Eigen::Index i = 0; i < na; ++i) {
      const UPoly t = cheb(ChebKind::First, static_cast<unsigned>(i));
      for (Eigen::Index m = 0; m <= i; ++m) cheb_t(i, m) = t.coeff(static_cast<std::size_t>(m)).to_double();
      log_det_basis += 2.0 * std::log(cheb_t(i, i));
    }
    for (Eigen::Index i = 0; i < nb; ++i) {
      for (Eigen::Index m = 0; m <= i; ++m) {
        cheb_u(i, m) = us[static_cast<std::size_t>(i)].coeff(static_cast<std::size_t>(m)).to_double();
      }
      log_det_basis += 2.0 * std::log(cheb_u(i, i));
    }
  }

  static Eigen::MatrixXd assemble(const Matrices& basis, const Eigen::VectorXd& psi) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(basis.front().rows(), basis.front().cols());
    for (std::size_t k = 0; k < basis.size(); ++k) m += psi(static_cast<Eigen::Index>(k)) * basis[k];
    return m;
  }

  struct Point {
    double objective = std::numeric_limits<double>::infinity();
    double log_det = 0.0;  // log det of both matrices
    Eigen::MatrixXd inv_moment;
    Eigen::MatrixXd inv_localizing;
  };

  // Cholesky doubles as the domain guard: a failed factorization means the
  // point is outside the open cone and the objective is +inf.
  bool evaluate(const Eigen::VectorXd& psi, Point& out) const {
    double log_det = 0.0;
    Eigen::MatrixXd inverses[2];
    const Matrices* blocks[2] = {&moment_basis, &localizing_basis};
    for (int b = 0; b < 2; ++b) {
      const Eigen::MatrixXd m = assemble(*blocks[b], psi);
      Eigen::LLT<Eigen::MatrixXd> llt(m);
      if (llt.info() != Eigen::Success) return false;
      const auto diag = llt.matrixLLT().diagonal();
      for (Eigen::Index i = 0; i < diag.size(); ++i) {
        if (!(diag(i) > 0.0)) return false;
        log_det += 2.0 * std::log(diag(i));
      }
      inverses[b] = llt.solve(Eigen::MatrixXd::Identity(m.rows(), m.cols()));
    }
    out.objective = target.dot(psi) - log_det;
    out.log_det = log_det;
    out.inv_moment = std::move(inverses[0]);
    out.inv_localizing = std::move(inverses[1]);
    return true;
  }

  void derivatives(const Point& pt, Eigen::VectorXd& grad, Eigen::MatrixXd& hess) const {
    grad = target;
    hess = Eigen::MatrixXd::Zero(dim, dim);
    const std::pair<const Matrices*, const Eigen::MatrixXd*> blocks[2] = {
        {&moment_basis, &pt.inv_moment}, {&localizing_basis, &pt.inv_localizing}};
    for (const auto& [basis, inv] : blocks) {
      Matrices products;
      products.reserve(basis->size());
      for (const auto& f : *basis) products.push_back(*inv * f);
      for (Eigen::Index k = 0; k < dim; ++k) {
        const auto& pk = products[static_cast<std::size_t>(k)];
        grad(k) -= pk.trace();
        for (Eigen::Index l = k; l < dim; ++l) {
          const double v = (pk.array() * products[static_cast<std::size_t>(l)].transpose().array()).sum();
          hess(k, l) += v;
          if (l != k) hess(l, k) += v;
        }
      }
    }
  }

  // Gram matrix in the monomial basis: rows(C)^T W C with long double accumulation.
  static DenseMatrix to_monomial_gram(const Eigen::MatrixXd& w, const Eigen::MatrixXd& c) {
    const Eigen::Index size = c.rows();
    DenseMatrix out(static_cast<std::size_t>(size), std::vector<double>(static_cast<std::size_t>(size)));
    for (Eigen::Index a = 0; a < size; ++a) {
      for (Eigen::Index b = 0; b < size; ++b) {
        long double acc = 0.0L;
        for (Eigen::Index i = 0; i < size; ++i) {
          if (c(i, a) == 0.0) continue;
          for (Eigen::Index j = 0; j < size; ++j) {
            acc += static_cast<long double>(c(i, a)) * w(i, j) * c(j, b);
          }
        }
        out[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = static_cast<double>(acc);
      }
    }
    return out;
  }

  DualFunctional dual(const Eigen::VectorXd& psi) const {
    DualFunctional f;
    const Eigen::VectorXd y = monos_from_psi * psi;
    for (Eigen::Index k = 0; k < dim; ++k) f.basis.push_back({static_cast<unsigned>(k)});
    f.values.assign(y.data(), y.data() + y.size());
    return f;
  }
};

}  // namespace

PutinarSolution solve_putinar(unsigned n, const SolverOptions& options, const std::optional<UPoly>& target) {
  if (n == 0) throw std::invalid_argument("solve_putinar: n must be >= 1");
  const UPoly p = target.value_or(UPoly::constant(Rational(2 * static_cast<std::int64_t>(n) + 1)));
  if (p.degree() > static_cast<int>(2 * n)) {
    throw std::invalid_argument("solve_putinar: target degree " + std::to_string(p.degree()) +
                                " exceeds 2n = " + std::to_string(2 * n));
  }
  const PutinarProblem problem(n, p);

  Eigen::VectorXd y0(problem.dim);
  if (options.initial_dual) {
    if (options.initial_dual->size() != static_cast<std::size_t>(problem.dim)) {
      throw std::invalid_argument("initial_dual has " + std::to_string(options.initial_dual->size()) +
                                  " entries, expected " + std::to_string(problem.dim));
    }
    for (Eigen::Index k = 0; k < problem.dim; ++k) y0(k) = (*options.initial_dual)[static_cast<std::size_t>(k)];
  } else {
    // Moments of the uniform probability measure on [-1, 1].
    for (Eigen::Index k = 0; k < problem.dim; ++k) y0(k) = (k % 2 == 0) ? 1.0 / static_cast<double>(k + 1) : 0.0;
  }
  Eigen::VectorXd psi = problem.psi_from_monos * y0;

  PutinarProblem::Point point;
  if (!problem.evaluate(psi, point)) throw std::invalid_argument("initial dual point is not strictly feasible");
  const double bound = kDivergenceBound * std::max(1.0, psi.cwiseAbs().maxCoeff());

  SolverReport report;
  bool stationary = false;
  unsigned polish_steps = 0;
  std::string failure;
  Eigen::VectorXd grad;
  Eigen::MatrixXd hess;
  for (unsigned iter = 0; iter < options.max_iter; ++iter) {
    problem.derivatives(point, grad, hess);
    const Eigen::VectorXd step = hess.ldlt().solve(-grad);
    const double decrement = -grad.dot(step);
    const double residual = grad.cwiseAbs().maxCoeff();
    const bool polishing = decrement <= kDecrementTol;
    if (polishing && (residual <= kPolish * options.tol || polish_steps == kMaxPolish)) {
      stationary = true;
      break;
    }
    if (psi.cwiseAbs().maxCoeff() > bound) {
      failure = "dual iterate diverging";
      break;
    }

    double t = 1.0;
    PutinarProblem::Point next;
    while (t >= kMinStep) {
      if (problem.evaluate(psi + t * step, next) &&
          (polishing || next.objective <= point.objective + kArmijo * t * grad.dot(step))) {
        break;
      }
      t *= 0.5;
    }
    if (t < kMinStep) {
      stationary = residual <= options.tol;
      if (!stationary) failure = "line search failed";
      break;
    }
    if (polishing) ++polish_steps;
    psi += t * step;
    point = std::move(next);
    report.history.push_back({iter + 1, point.objective, decrement, t, residual});
    report.iterations = iter + 1;
  }

  PutinarSolution solution;
  solution.certificate.n = n;
  solution.certificate.gram_a = PutinarProblem::to_monomial_gram(point.inv_moment, problem.cheb_t);
  solution.certificate.gram_b = PutinarProblem::to_monomial_gram(point.inv_localizing, problem.cheb_u);
  solution.dual = problem.dual(psi);

  report.residual = verify_certificate(solution.certificate, p);
  // log det A + log det B = log det(C)^2 - log det M for each block.
  report.objective = problem.log_det_basis - point.log_det;
  report.converged = stationary && report.residual <= options.tol;
  if (!report.converged) {
    if (failure.empty()) failure = stationary ? "residual above tolerance" : "iteration limit reached";
    report.diagnostic = "no interior certificate found at degree " + std::to_string(n) + " (" + failure + ")";
    throw NoInteriorCertificate(report.diagnostic, report, solution.dual);
  }
  solution.report = std::move(report);
  return solution;
}

}  // namespace equicert
