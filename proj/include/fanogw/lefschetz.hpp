#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "fanogw/grassmann.hpp"

namespace fanogw {

// Complete intersection of hypersurfaces of the given degrees (in units of
// the Pluecker hyperplane class) in a Grassmannian.
struct CompleteIntersectionSpec {
  GrassmannianSpec ambient;
  std::vector<int> degrees;

  int fano_index() const { return ambient.n - std::accumulate(degrees.begin(), degrees.end(), 0); }
  int dimension() const { return ambient.r * (ambient.n - ambient.r) - static_cast<int>(degrees.size()); }

  // Throws InvalidInput for malformed specs and NotFano for index <= 0.
  void validate() const {
    ambient.validate();
    for (int d : degrees)
      if (d < 1) throw InvalidInput("hypersurface degrees must be >= 1");
    if (dimension() < 1) throw InvalidInput("complete intersection has dimension " + std::to_string(dimension()));
    if (fano_index() < 1)
      throw NotFano("complete intersection in " + ambient.to_string() + " has index " +
                    std::to_string(fano_index()));
  }

  std::string to_string() const {
    std::string s = ambient.to_string() + " cut by degrees [";
    for (std::size_t i = 0; i < degrees.size(); ++i) s += (i ? "," : "") + std::to_string(degrees[i]);
    return s + "]";
  }
};

struct FanoModel {
  CompleteIntersectionSpec spec;
  int dimension = 0;
  int fano_index = 0;
  // (-K)^dim = index^dim * Pluecker degree * prod d_j
  long anticanonical_degree = 0;
  std::optional<Rational> shift;
  std::vector<std::string> warnings;
};

inline FanoModel ci_geometry(const CompleteIntersectionSpec& spec) {
  spec.validate();
  FanoModel model;
  model.spec = spec;
  model.dimension = spec.dimension();
  model.fano_index = spec.fano_index();
  long degree = grassmannian_geometry(spec.ambient).plucker_degree;
  for (int d : spec.degrees) degree *= d;
  for (int i = 0; i < model.dimension; ++i) degree *= model.fano_index;
  model.anticanonical_degree = degree;
  if (model.dimension != 3)
    model.warnings.push_back("NotThreefold: dimension is " + std::to_string(model.dimension));
  if (model.fano_index != 1)
    model.warnings.push_back("q-grading by the hyperplane class differs from the anticanonical grading (index " +
                             std::to_string(model.fano_index) + ")");
  return model;
}

// alpha = prod d_j! * (q^1 coefficient of the ambient unit component) for
// index 1, and 0 for index >= 2.
inline Rational lefschetz_shift(const CompleteIntersectionSpec& spec, const Series& c0_ambient) {
  spec.validate();
  if (c0_ambient.order() < 2) throw InvalidInput("lefschetz_shift needs the ambient series to order >= 2");
  if (spec.fano_index() >= 2) return Rational(0);
  Rational prod(1);
  for (int d : spec.degrees) prod *= Rational(factorial(static_cast<unsigned>(d)));
  return prod * c0_ambient[1];
}

// Applies E_d = prod_j prod_{i=1}^{d_j d} (d_j H + i) to each degree part
// modulo H^2. The i = 0 factors are the constant Euler class prod d_j H^k
// common to both sides of the mirror formula and are omitted.
inline HSeriesPair euler_corrected_series(const HSeriesPair& pair, const std::vector<int>& degrees, int d_max) {
  const std::size_t order = std::min(pair.order(), static_cast<std::size_t>(d_max) + 1);
  Series e0(order), e1(order);
  for (std::size_t d = 0; d < order; ++d) {
    Rational f0(1), f1(0);  // f0 + f1 H
    for (int dj : degrees)
      for (long i = 1; i <= static_cast<long>(dj) * static_cast<long>(d); ++i) {
        // (f0 + f1 H)(i + dj H)
        f1 = f1 * Rational(i) + f0 * Rational(dj);
        f0 = f0 * Rational(i);
      }
    e0[d] = f0 * pair.c0[d];
    e1[d] = f0 * pair.c1[d] + f1 * pair.c0[d];
  }
  return {e0, e1};
}

// I-series of the complete intersection modulo H^2:
// exp(-alpha q) * euler_corrected_series(ambient).
inline HSeriesPair quantum_lefschetz(const HSeriesPair& ambient, const CompleteIntersectionSpec& spec, int d_max) {
  spec.validate();
  if (ambient.order() <= static_cast<std::size_t>(d_max))
    throw InvalidInput("ambient series order " + std::to_string(ambient.order()) + " does not reach q^" +
                       std::to_string(d_max));
  const Rational alpha = lefschetz_shift(spec, ambient.c0);
  HSeriesPair corrected = euler_corrected_series(ambient, spec.degrees, d_max);
  Series twist = exp_linear(-alpha, corrected.order());
  return {twist * corrected.c0, twist * corrected.c1};
}

}  // namespace fanogw
