#pragma once

#include <random>

#include "qlorentz/coeff/scalar.hpp"
#include "qlorentz/tensor/tmap.hpp"

namespace qlorentz::testing {

// Small random Laurent polynomial: up to `max_terms` terms, half-exponents in
// [-3, 3], integer or Gaussian coefficients in [-3, 3].
inline LaurentPoly random_poly(std::mt19937& rng, int max_terms = 3, bool gaussian = true) {
  std::uniform_int_distribution<int> exp(-3, 3);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> count(1, max_terms);
  std::vector<LaurentPoly::Term> terms;
  int n = count(rng);
  for (int k = 0; k < n; ++k) {
    LaurentMono m{{exp(rng), exp(rng), exp(rng)}};
    GaussianRational c(coeff(rng), gaussian ? coeff(rng) : 0);
    terms.emplace_back(m, c);
  }
  return LaurentPoly::from_terms(std::move(terms));
}

inline Scalar random_scalar(std::mt19937& rng, bool gaussian = true) {
  LaurentPoly num = random_poly(rng, 3, gaussian);
  LaurentPoly den;
  while (den.is_zero()) den = random_poly(rng, 2, gaussian);
  return Scalar::fraction(num, den);
}

// Random map with roughly `density` of its entries nonzero.
inline TMap random_tmap(std::mt19937& rng, Signature in, Signature out, double density = 0.5) {
  TMap m(std::move(in), std::move(out));
  std::bernoulli_distribution keep(density);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (keep(rng)) m(r, c) = Scalar(random_poly(rng, 2));
  return m;
}

inline Signature random_signature(std::mt19937& rng, std::size_t length) {
  std::bernoulli_distribution coin;
  Signature s;
  for (std::size_t k = 0; k < length; ++k) s.push_back(coin(rng) ? Leg::B : Leg::U);
  return s;
}

}  // namespace qlorentz::testing
