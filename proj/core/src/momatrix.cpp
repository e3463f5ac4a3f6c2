#include "equicert/momatrix.hpp"

#include <stdexcept>
#include <string>

namespace equicert {

MomentMatrix moment_matrix(const MomentFunctional& f, unsigned n, const std::optional<MPoly>& shift) {
  if (shift && shift->dimension() != f.dimension()) {
    throw std::invalid_argument("moment_matrix: shift of dimension " +
                                std::to_string(shift->dimension()) + " for a measure of dimension " +
                                std::to_string(f.dimension()));
  }
  MomentMatrix m{f.measure(), f.scale(), n, graded_basis(f.dimension(), n), {}, shift};
  const std::size_t size = m.basis.size();
  m.entries = RationalMatrix(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i; j < size; ++j) {
      const Exponent e = m.basis[i] + m.basis[j];
      Rational value;
      if (shift) {
        for (const auto& [g, c] : shift->terms()) value += c * f.moment(e + g);
      } else {
        value = f.moment(e);
      }
      m.entries(i, j) = value;
      m.entries(j, i) = value;
    }
  }
  return m;
}

MomentMatrix moment_matrix(const MeasureId& measure, unsigned n, const std::optional<MPoly>& shift) {
  return moment_matrix(MomentFunctional(measure), n, shift);
}

MomentMatrix moment_matrix(const MeasureId& measure, unsigned n, const UPoly& shift) {
  return moment_matrix(measure, n, MPoly::from_upoly(shift));
}

RationalMatrix invert_exact(const MomentMatrix& m) { return invert_positive_definite(m.entries); }

ChristoffelForm christoffel_form(const MomentFunctional& f, unsigned n, const std::optional<MPoly>& shift) {
  MomentMatrix m = moment_matrix(f, n, shift);
  ChristoffelForm form{f.measure(), n, m.basis, invert_exact(m), MPoly(f.dimension())};
  const std::size_t size = form.basis.size();
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      form.quadratic_form_poly.add_term(form.basis[i] + form.basis[j], form.inverse(i, j));
    }
  }
  return form;
}

ChristoffelForm christoffel_form(const MeasureId& measure, unsigned n, const std::optional<MPoly>& shift) {
  return christoffel_form(MomentFunctional(measure), n, shift);
}

ChristoffelForm christoffel_form(const MeasureId& measure, unsigned n, const UPoly& shift) {
  return christoffel_form(measure, n, MPoly::from_upoly(shift));
}

Rational christoffel_eval(const ChristoffelForm& form, std::span<const Rational> point) {
  return form.quadratic_form_poly(point);
}

}  // namespace equicert
