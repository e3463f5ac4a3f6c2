#ifndef EQUICERT_FAMILIES_HPP
#define EQUICERT_FAMILIES_HPP

#include <vector>

#include "equicert/mpoly.hpp"
#include "equicert/upoly.hpp"

namespace equicert {

enum class ChebKind { First, Second };

/// T_n (First) or U_n (Second) from the three-term recurrence p_{k+1} = 2x p_k - p_{k-1}.
UPoly cheb(ChebKind kind, unsigned n);

/// Square of the j-th orthonormal Chebyshev polynomial: orthonormal for the
/// arcsine measure (First) or for (1 - x^2) times it (Second). Only the square
/// is exposed so the sqrt(2) normalization stays rational:
/// T̂_0^2 = 1, T̂_j^2 = 2 T_j^2 (j >= 1), Û_j^2 = 2 U_j^2.
UPoly cheb_orthonormal_square(ChebKind kind, unsigned j);

/// Coefficients of p in the basis T_0, ..., T_deg(p).
std::vector<Rational> to_chebyshev_first(const UPoly& p);

/// C(n, j) x^j (1 - x)^{n - j}. Throws std::invalid_argument unless 0 <= j <= n.
UPoly bernstein(unsigned n, int j);

/// The constant 1 - x^2 multiplying the second-kind block of the interval certificates.
UPoly one_minus_x_squared();

/// g_1^{a_1} ... g_{d+1}^{a_{d+1}} with g_j = x_j for j <= d and
/// g_{d+1} = 1 - x_1 - ... - x_d, expanded in d variables.
/// Throws std::invalid_argument when alpha.size() != d + 1 or d == 0.
MPoly simplex_generator_power(std::size_t d, const Exponent& alpha);

}  // namespace equicert

#endif  // EQUICERT_FAMILIES_HPP
