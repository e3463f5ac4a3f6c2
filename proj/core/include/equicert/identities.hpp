#ifndef EQUICERT_IDENTITIES_HPP
#define EQUICERT_IDENTITIES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "equicert/measures.hpp"
#include "equicert/mpoly.hpp"
#include "equicert/rational.hpp"
#include "equicert/upoly.hpp"

namespace equicert {

struct IdentityParams {
  std::optional<unsigned> n;
  std::optional<unsigned> d;
  std::optional<std::string> variant;
  std::optional<std::string> normalization;

  friend bool operator==(const IdentityParams&, const IdentityParams&) = default;
};

/// Outcome of expanding one side of a polynomial identity exactly.
///
/// `holds` means the expansion has no nonconstant term (residual_terms == 0);
/// `constant` is then the value it reduces to. `expected_constant` is the value
/// claimed in the literature, absent in conjecture-checking mode.
struct IdentityReport {
  std::string identity;
  IdentityParams params;
  bool holds = false;
  std::optional<Rational> constant;
  std::size_t residual_terms = 0;
  std::optional<Rational> expected_constant;

  /// True unless the identity reduced to a constant that differs from the expected one.
  bool matches_expected() const;

  friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

/// The constant value of p, or nullopt if p has a nonconstant term.
std::optional<Rational> constant_reduce(const UPoly& p);
std::optional<Rational> constant_reduce(const MPoly& p);

/// (n + 1)(n + 2) / 2: number of products x^i (1 - x)^j with i + j <= n.
Rational interval_generator_count(unsigned n);
/// C(d + 1 + n, n): number of simplex generator powers g^alpha with |alpha| <= n.
Rational simplex_generator_count(unsigned d, unsigned n);

/// T_n^2 + (1 - x^2) U_{n-1}^2 == 1. Throws std::invalid_argument for n == 0.
IdentityReport verify_pell(unsigned n);

enum class UnityVariant { Unity1, Unity2, Cheby2 };
std::string to_string(UnityVariant v);
UnityVariant parse_unity_variant(std::string_view text);

/// Partitions of unity on [-1, 1]:
///  - Unity1: (sum_{j<=n} T_j^2 + g sum_{i<n} U_i^2) / (n + 1) == 1;
///  - Unity2: sum T̂_j^2 + g sum Û_i^2 == 2n + 1;
///  - Cheby2: v_n^T M_n(phi)^{-1} v_n + g v_{n-1}^T M_{n-1}(g phi)^{-1} v_{n-1} == 2n + 1,
/// with g = 1 - x^2 and phi the arcsine measure.
IdentityReport verify_unity_interval(unsigned n, UnityVariant variant);

/// sum_{i+j<=n} x^i (1 - x)^j / beta_integral(i, j) == (n + 1)(n + 2) / 2.
IdentityReport verify_unity_01(unsigned n);

/// sum_{|alpha|<=n} g^alpha / phi*(g^alpha) with phi* the uniform probability on
/// the d-simplex. The constant C(d+1+n, n) is expected for n <= 2 and for d = 1;
/// other cases are reported without an expected value.
IdentityReport verify_simplex_unity(unsigned d, unsigned n);

/// Lambda_n^{-1} + sum_i g_i Lambda_{n-1}^{g_i phi, -1} on the triangle with
/// g_1 = xy, g_2 = x(1-x-y), g_3 = y(1-x-y) and phi the equilibrium measure
/// under the given normalization. For n <= 3 the expected constant is
/// s(n) + s(n-1) with s(n) = (n+1)(n+2)/2; larger n are exploratory.
IdentityReport verify_simplex_equilibrium(unsigned n, Normalization normalization);

/// The left-hand side expanded by verify_simplex_equilibrium, for inspection.
MPoly simplex_equilibrium_form(unsigned n, Normalization normalization);

}  // namespace equicert

#endif  // EQUICERT_IDENTITIES_HPP
