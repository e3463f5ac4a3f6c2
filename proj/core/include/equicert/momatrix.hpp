#ifndef EQUICERT_MOMATRIX_HPP
#define EQUICERT_MOMATRIX_HPP

#include <optional>
#include <span>
#include <vector>

#include "equicert/measures.hpp"
#include "equicert/mpoly.hpp"
#include "equicert/rational_matrix.hpp"

namespace equicert {

/// Moment matrix M_n over the graded-lex monomial basis of degree <= n, or the
/// localizing matrix when a shift polynomial g is present:
/// entry(a, b) = L(g x^{a+b}).
struct MomentMatrix {
  MeasureId measure;
  Rational scale{1};
  unsigned degree = 0;
  std::vector<Exponent> basis;
  RationalMatrix entries;
  std::optional<MPoly> shift;
};

/// Throws std::invalid_argument when the shift's dimension differs from the measure's.
MomentMatrix moment_matrix(const MomentFunctional& f, unsigned n,
                           const std::optional<MPoly>& shift = std::nullopt);
MomentMatrix moment_matrix(const MeasureId& measure, unsigned n,
                           const std::optional<MPoly>& shift = std::nullopt);
MomentMatrix moment_matrix(const MeasureId& measure, unsigned n, const UPoly& shift);

/// Exact inverse; throws NotPositiveDefinite with the failing leading minor.
RationalMatrix invert_exact(const MomentMatrix& m);

/// Reciprocal Christoffel function v_n(x)^T M^{-1} v_n(x) as an exact polynomial.
struct ChristoffelForm {
  MeasureId measure;
  unsigned degree = 0;
  std::vector<Exponent> basis;
  RationalMatrix inverse;
  MPoly quadratic_form_poly{1};

  /// Dense copy for univariate measures; throws std::invalid_argument otherwise.
  UPoly univariate() const { return to_upoly(quadratic_form_poly); }
};

ChristoffelForm christoffel_form(const MomentFunctional& f, unsigned n,
                                 const std::optional<MPoly>& shift = std::nullopt);
ChristoffelForm christoffel_form(const MeasureId& measure, unsigned n,
                                 const std::optional<MPoly>& shift = std::nullopt);
ChristoffelForm christoffel_form(const MeasureId& measure, unsigned n, const UPoly& shift);

/// Value of the reciprocal Christoffel function at a point.
Rational christoffel_eval(const ChristoffelForm& form, std::span<const Rational> point);

}  // namespace equicert

#endif  // EQUICERT_MOMATRIX_HPP
