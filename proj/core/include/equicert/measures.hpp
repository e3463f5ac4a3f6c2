#ifndef EQUICERT_MEASURES_HPP
#define EQUICERT_MEASURES_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <string_view>

#include "equicert/mpoly.hpp"
#include "equicert/rational.hpp"
#include "equicert/upoly.hpp"

namespace equicert {

enum class MeasureKind { Arcsine, ArcsineG, Lebesgue01, SimplexUniform, SimplexEquilibrium };

/// Total-mass convention for the simplex equilibrium density
/// dx dy / (pi sqrt(x y (1 - x - y))): PaperPi keeps the density as written
/// (mass 2), Probability rescales it to mass 1.
enum class Normalization { PaperPi, Probability };

std::string to_string(Normalization n);
Normalization parse_normalization(std::string_view text);

/// Names one of the measures used throughout the library:
///  - Arcsine: dx / (pi sqrt(1 - x^2)) on [-1, 1], the equilibrium measure of the interval;
///  - ArcsineG: (1 - x^2) times the arcsine measure;
///  - Lebesgue01: dx on [0, 1];
///  - SimplexUniform(d): uniform probability on the canonical simplex of R^d;
///  - SimplexEquilibrium: equilibrium density of the triangle (d = 2 only).
class MeasureId {
 public:
  static MeasureId arcsine() { return MeasureId(MeasureKind::Arcsine, 1); }
  static MeasureId arcsine_g() { return MeasureId(MeasureKind::ArcsineG, 1); }
  static MeasureId lebesgue01() { return MeasureId(MeasureKind::Lebesgue01, 1); }
  /// Throws std::invalid_argument when d == 0.
  static MeasureId simplex_uniform(std::size_t d);
  static MeasureId simplex_equilibrium(Normalization normalization = Normalization::PaperPi);

  /// Inverse of name(); `d` is used by simplex-uniform, `normalization` by simplex-equilibrium.
  static MeasureId parse(std::string_view name, std::size_t d = 2,
                         Normalization normalization = Normalization::PaperPi);

  MeasureKind kind() const { return kind_; }
  std::size_t dimension() const { return dim_; }
  Normalization normalization() const { return normalization_; }
  bool is_interval() const { return dim_ == 1; }
  /// "arcsine", "arcsine-g", "lebesgue01", "simplex-uniform" or "simplex-equilibrium".
  std::string name() const;

  friend bool operator==(const MeasureId&, const MeasureId&) = default;

 private:
  MeasureId(MeasureKind kind, std::size_t dim, Normalization n = Normalization::PaperPi)
      : kind_(kind), dim_(dim), normalization_(n) {}

  MeasureKind kind_;
  std::size_t dim_;
  Normalization normalization_;
};

/// Closed-form moment of x^alpha; throws std::invalid_argument on a dimension mismatch.
Rational closed_form_moment(const MeasureId& measure, const Exponent& alpha);

/// Linear functional p -> t * integral of p against a named measure, with a
/// write-once memo of monomial moments. Copies share the memo.
class MomentFunctional {
 public:
  explicit MomentFunctional(MeasureId measure, Rational scale = 1);

  const MeasureId& measure() const { return measure_; }
  std::size_t dimension() const { return measure_.dimension(); }
  const Rational& scale() const { return scale_; }
  /// Same measure with every moment multiplied by t > 0.
  MomentFunctional scaled(const Rational& t) const;

  Rational moment(const Exponent& alpha) const;
  Rational moment(unsigned k) const { return moment(Exponent{k}); }
  Rational total_mass() const { return moment(Exponent(dimension(), 0)); }

 private:
  struct Memo {
    std::shared_mutex mutex;
    std::map<Exponent, Rational> values;
  };

  MeasureId measure_;
  Rational scale_;
  std::shared_ptr<Memo> memo_;
};

/// Sum of coeff_alpha * moment(alpha); throws std::invalid_argument on a dimension mismatch.
Rational poly_moment(const MomentFunctional& f, const UPoly& p);
Rational poly_moment(const MomentFunctional& f, const MPoly& p);

/// i! j! / (i + j + 1)!, the integral of x^i (1 - x)^j over [0, 1].
Rational beta_integral(unsigned i, unsigned j);

/// 1 / (n sqrt(2 pi x (1 - x))), the envelope of the degree-n Bernstein polynomials.
/// Throws std::domain_error unless 0 < x < 1 and std::invalid_argument when n == 0.
double bernstein_envelope(unsigned n, double x);

}  // namespace equicert

#endif  // EQUICERT_MEASURES_HPP
