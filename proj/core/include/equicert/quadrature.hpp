#ifndef EQUICERT_QUADRATURE_HPP
#define EQUICERT_QUADRATURE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "equicert/measures.hpp"

namespace equicert {

/// Floating-point cross-checks for the exact moment functionals. None of these
/// touch the closed-form moment code.

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1]; exact for degree < 2n.
GaussRule gauss_legendre(unsigned n);
/// Gauss-Chebyshev rule for the arcsine probability measure: nodes
/// cos((2k - 1) pi / 2n), weights 1/n; exact for degree < 2n.
GaussRule gauss_chebyshev(unsigned n);

/// Integral of p against the measure using `nodes` points per axis.
///  - Arcsine / ArcsineG: Gauss-Chebyshev (ArcsineG integrates p (1 - x^2)).
///  - Lebesgue01: Gauss-Legendre mapped to [0, 1].
///  - SimplexUniform: collapsed-coordinate tensor Gauss-Legendre (Duffy map).
///  - SimplexEquilibrium: x = s^2 and a Chebyshev rule in the collapsed direction,
///    which removes every endpoint singularity.
/// All rules are exact up to rounding once 2 * nodes exceeds deg(p) + dimension.
/// Throws std::invalid_argument when nodes == 0 or dimensions differ.
double quadrature_oracle(const MeasureId& measure, const UPoly& p, unsigned nodes);
double quadrature_oracle(const MeasureId& measure, const MPoly& p, unsigned nodes);

/// Plain Monte-Carlo estimate with a fixed seed (Dirichlet sampling on the simplex).
double monte_carlo_oracle(const MeasureId& measure, const MPoly& p, std::size_t samples,
                          std::uint64_t seed = 20240611);

}  // namespace equicert

#endif  // EQUICERT_QUADRATURE_HPP
