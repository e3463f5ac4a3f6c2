#ifndef EQUICERT_MAXENT_HPP
#define EQUICERT_MAXENT_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "equicert/mpoly.hpp"
#include "equicert/rational.hpp"
#include "equicert/rational_matrix.hpp"
#include "equicert/upoly.hpp"

namespace equicert {

/// Max-entropy certificate programs solved through their duals.
///
/// Handelman form (interval [0, 1] and the canonical simplex):
///   max sum_a log c_a  s.t.  sum_a c_a g^a = p,
/// dual  min <l, p> - sum_a log <l, g^a>,  optimum c_a = 1 / <l, g^a>.
///
/// Putinar form on [-1, 1] with g = 1 - x^2:
///   max log det A + log det B  s.t.  v_n^T A v_n + g v_{n-1}^T B v_{n-1} = p,
/// dual  min <y, p> - log det M_n(y) - log det M_{n-1}(g y),
/// optimum A = M_n(y)^{-1}, B = M_{n-1}(g y)^{-1}.
///
/// Both duals are minimized by damped Newton with a backtracking line search
/// that never leaves the open barrier domain. Iterates are kept in a
/// well-conditioned coordinate system (pairings with the top-degree Bernstein
/// generators, resp. Chebyshev moments); Newton steps are invariant under such
/// a change of coordinates, and all outputs are reported in monomial coordinates.

using DenseMatrix = std::vector<std::vector<double>>;

struct SolverOptions {
  /// Required sup-norm of the primal reconstruction residual.
  double tol = 1e-10;
  unsigned max_iter = 200;
  /// Optional strictly feasible starting point in monomial moment coordinates
  /// (same layout as DualFunctional::values).
  std::optional<std::vector<double>> initial_dual;
};

struct SolverStep {
  unsigned iteration = 0;
  double dual_objective = 0.0;
  /// Squared Newton decrement at the start of the step.
  double decrement = 0.0;
  double step_size = 0.0;
  double residual = 0.0;
};

struct SolverReport {
  unsigned iterations = 0;
  double residual = 0.0;
  /// Primal objective: sum log c_a (Handelman) or log det A + log det B (Putinar).
  double objective = 0.0;
  bool converged = false;
  std::vector<SolverStep> history;
  std::string diagnostic;

  std::size_t step_history_length() const { return history.size(); }
};

/// Moment vector of the dual element, indexed like `basis` (graded lex).
struct DualFunctional {
  std::vector<Exponent> basis;
  std::vector<double> values;
};

struct HandelmanWeight {
  Exponent alpha;
  double value = 0.0;
};

/// p = sum_a c_a g^a over a in N^{d+1}_n; d = 1 is the interval [0, 1]
/// with g^{(i,j)} = x^i (1 - x)^j.
struct HandelmanCertificate {
  std::size_t d = 1;
  unsigned n = 0;
  std::vector<HandelmanWeight> weights;
  MPoly target{1};
};

/// p = v_n^T A v_n + (1 - x^2) v_{n-1}^T B v_{n-1}.
struct PutinarCertificate {
  unsigned n = 0;
  DenseMatrix gram_a;
  DenseMatrix gram_b;
};

struct HandelmanSolution {
  HandelmanCertificate certificate;
  DualFunctional dual;
  SolverReport report;
};

struct PutinarSolution {
  PutinarCertificate certificate;
  DualFunctional dual;
  SolverReport report;
};

/// The solver stopped without an interior certificate. This is a diagnostic,
/// not a proof that the target lies outside the cone.
class NoInteriorCertificate : public std::runtime_error {
 public:
  NoInteriorCertificate(const std::string& what, SolverReport report, DualFunctional last_dual)
      : std::runtime_error(what), report_(std::move(report)), last_dual_(std::move(last_dual)) {}

  const SolverReport& report() const { return report_; }
  const DualFunctional& last_dual() const { return last_dual_; }

 private:
  SolverReport report_;
  DualFunctional last_dual_;
};

/// Handelman max-entropy certificate of p on [0, 1] with generators x^i (1-x)^j, i + j <= n.
/// Throws std::invalid_argument when deg(p) > n or n == 0, NoInteriorCertificate
/// when no interior certificate is found within max_iter.
HandelmanSolution solve_handelman(const UPoly& p, unsigned n, const SolverOptions& options = {});

/// Handelman max-entropy certificate of p on the canonical d-simplex.
HandelmanSolution solve_simplex_handelman(const MPoly& p, unsigned n, const SolverOptions& options = {});

/// Max-entropy partition of the constant C(d+1+n, n) on the d-simplex.
HandelmanSolution solve_simplex(unsigned d, unsigned n, const SolverOptions& options = {});

/// Putinar max-entropy certificate on [-1, 1]; the default target is 2n + 1.
/// Throws std::invalid_argument when n == 0 or deg(target) > 2n, NoInteriorCertificate otherwise on failure.
PutinarSolution solve_putinar(unsigned n, const SolverOptions& options = {},
                              const std::optional<UPoly>& target = std::nullopt);

/// Sup norm of the monomial-coefficient residual between the certificate's
/// reconstruction and the target, computed exactly from the stored doubles.
double verify_certificate(const HandelmanCertificate& cert, const MPoly& target);
double verify_certificate(const HandelmanCertificate& cert, const UPoly& target);
double verify_certificate(const PutinarCertificate& cert, const UPoly& target);

struct ExactHandelmanCertificate {
  std::size_t d = 1;
  unsigned n = 0;
  std::vector<std::pair<Exponent, Rational>> weights;
};

struct ExactPutinarCertificate {
  unsigned n = 0;
  RationalMatrix gram_a;
  RationalMatrix gram_b;
};

/// Exact residual sup norm; zero iff the certificate reconstructs the target identically.
Rational verify_certificate_exact(const ExactHandelmanCertificate& cert, const MPoly& target);
Rational verify_certificate_exact(const ExactPutinarCertificate& cert, const UPoly& target);

/// Best rational approximation with denominator <= max_denominator (continued fractions).
Rational rationalize(double value, std::int64_t max_denominator = 1'000'000);

/// Rounds the dual to nearby rationals and rebuilds the certificate exactly from
/// the KKT conditions. Returns nullopt if the rounded dual leaves the domain.
std::optional<ExactHandelmanCertificate> rationalize_certificate(const HandelmanSolution& solution,
                                                                 std::int64_t max_denominator = 1'000'000);
std::optional<ExactPutinarCertificate> rationalize_certificate(const PutinarSolution& solution,
                                                               std::int64_t max_denominator = 1'000'000);

/// Largest relative deviation |c_a phi*(g^a) - 1| between the weights and the
/// uniform-measure candidate c_a = 1 / phi*(g^a).
double uniform_candidate_deviation(const HandelmanCertificate& cert);

/// Monomial coefficient vector (graded lex, degree <= n) of g^alpha on the d-simplex.
std::vector<Rational> generator_coefficients(std::size_t d, unsigned n, const Exponent& alpha);

}  // namespace equicert

#endif  // EQUICERT_MAXENT_HPP
