#include "equicert/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace equicert {

GaussRule gauss_legendre(unsigned n) {
  if (n == 0) throw std::invalid_argument("gauss_legendre: need at least one node");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (unsigned i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (unsigned k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = x;
    rule.nodes[n - 1 - i] = -x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

GaussRule gauss_chebyshev(unsigned n) {
  if (n == 0) throw std::invalid_argument("gauss_chebyshev: need at least one node");
  GaussRule rule;
  for (unsigned k = 1; k <= n; ++k) {
    rule.nodes.push_back(std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * n)));
    rule.weights.push_back(1.0 / n);
  }
  return rule;
}

namespace {

double integrate_simplex_uniform(const MPoly& p, unsigned nodes) {
  const std::size_t d = p.dimension();
  const GaussRule gl = gauss_legendre(nodes);
  std::vector<double> u01(nodes);
  std::vector<double> w01(nodes);
  for (unsigned k = 0; k < nodes; ++k) {
    u01[k] = 0.5 * (gl.nodes[k] + 1.0);
    w01[k] = 0.5 * gl.weights[k];
  }
  std::vector<unsigned> idx(d, 0);
  std::vector<double> x(d);
  double total = 0.0;
  while (true) {
    double remaining = 1.0;
    double weight = 1.0;
    for (std::size_t k = 0; k < d; ++k) {
      const double u = u01[idx[k]];
      x[k] = remaining * u;
      weight *= w01[idx[k]] * remaining;
      remaining *= (1.0 - u);
    }
    total += weight * p.eval_double(x);
    std::size_t k = 0;
    while (k < d && ++idx[k] == nodes) idx[k++] = 0;
    if (k == d) break;
  }
  // d! turns the Lebesgue volume 1/d! into a probability measure.
  double dfact = 1.0;
  for (std::size_t k = 2; k <= d; ++k) dfact *= static_cast<double>(k);
  return total * dfact;
}

double integrate_simplex_equilibrium(const MPoly& p, unsigned nodes, Normalization normalization) {
  // x = s^2, y = (1 - s^2) v, v = (1 + t) / 2:
  //   dx dy / (pi sqrt(x y (1-x-y))) = (2 / pi) ds dt / sqrt(1 - t^2)
  const GaussRule gl = gauss_legendre(nodes);
  const GaussRule gc = gauss_chebyshev(nodes);
  double total = 0.0;
  for (unsigned i = 0; i < nodes; ++i) {
    const double s = 0.5 * (gl.nodes[i] + 1.0);
    const double ws = 0.5 * gl.weights[i];
    for (unsigned j = 0; j < nodes; ++j) {
      const double v = 0.5 * (gc.nodes[j] + 1.0);
      const double pt[2] = {s * s, (1.0 - s * s) * v};
      total += ws * gc.weights[j] * p.eval_double(pt);
    }
  }
  total *= 2.0;
  return normalization == Normalization::Probability ? total / 2.0 : total;
}

}  // namespace

double quadrature_oracle(const MeasureId& measure, const UPoly& p, unsigned nodes) {
  return quadrature_oracle(measure, MPoly::from_upoly(p), nodes);
}

double quadrature_oracle(const MeasureId& measure, const MPoly& p, unsigned nodes) {
  if (nodes == 0) throw std::invalid_argument("quadrature_oracle: nodes must be positive");
  if (p.dimension() != measure.dimension()) {
    throw std::invalid_argument("quadrature_oracle: polynomial of dimension " +
                                std::to_string(p.dimension()) + " against a measure of dimension " +
                                std::to_string(measure.dimension()));
  }
  switch (measure.kind()) {
    case MeasureKind::Arcsine:
    case MeasureKind::ArcsineG: {
      const GaussRule rule = gauss_chebyshev(nodes);
      const bool shifted = measure.kind() == MeasureKind::ArcsineG;
      double total = 0.0;
      for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const double x = rule.nodes[k];
        double v = p.eval_double(std::span<const double>(&x, 1));
        if (shifted) v *= (1.0 - x * x);
        total += rule.weights[k] * v;
      }
      return total;
    }
    case MeasureKind::Lebesgue01: {
      const GaussRule rule = gauss_legendre(nodes);
      double total = 0.0;
      for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const double x = 0.5 * (rule.nodes[k] + 1.0);
        total += 0.5 * rule.weights[k] * p.eval_double(std::span<const double>(&x, 1));
      }
      return total;
    }
    case MeasureKind::SimplexUniform:
      return integrate_simplex_uniform(p, nodes);
    case MeasureKind::SimplexEquilibrium:
      return integrate_simplex_equilibrium(p, nodes, measure.normalization());
  }
  throw std::logic_error("quadrature_oracle: unhandled measure");
}

double monte_carlo_oracle(const MeasureId& measure, const MPoly& p, std::size_t samples,
                          std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("monte_carlo_oracle: samples must be positive");
  if (p.dimension() != measure.dimension()) {
    throw std::invalid_argument("monte_carlo_oracle: dimension mismatch");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const std::size_t d = measure.dimension();
  double mass = 1.0;
  double shape = 1.0;
  switch (measure.kind()) {
    case MeasureKind::SimplexEquilibrium:
      shape = 0.5;
      mass = measure.normalization() == Normalization::PaperPi ? 2.0 : 1.0;
      break;
    default:
      break;
  }
  std::gamma_distribution<double> gamma(shape, 1.0);
  std::vector<double> x(d);
  std::vector<double> g(d + 1);
  double total = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    double weight = 1.0;
    switch (measure.kind()) {
      case MeasureKind::Arcsine:
      case MeasureKind::ArcsineG:
        x[0] = std::cos(std::numbers::pi * unif(rng));
        if (measure.kind() == MeasureKind::ArcsineG) weight = 1.0 - x[0] * x[0];
        break;
      case MeasureKind::Lebesgue01:
        x[0] = unif(rng);
        break;
      case MeasureKind::SimplexUniform:
      case MeasureKind::SimplexEquilibrium: {
        double sum = 0.0;
        for (auto& gi : g) sum += (gi = gamma(rng));
        for (std::size_t k = 0; k < d; ++k) x[k] = g[k] / sum;
        break;
      }
    }
    total += weight * p.eval_double(x);
  }
  return mass * total / static_cast<double>(samples);
}

}  // namespace equicert
