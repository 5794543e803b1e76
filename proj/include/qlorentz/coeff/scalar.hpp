#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qlorentz/coeff/laurent.hpp"

namespace qlorentz {

/// Exact rational function in q^{1/2}, qb^{1/2}, t^{1/2} over the Gaussian
/// rationals.
///
/// The value is num / (f_1^{k_1} ... f_n^{k_n}). Each denominator factor is
/// normalized (no monomial content, leading coefficient 1, at least two
/// terms), so denominators of sums can be merged by taking the maximum power
/// per factor. Factors are not guaranteed to be irreducible or pairwise
/// coprime; after every operation each factor that divides the numerator is
/// cancelled. Zero is decided on the numerator alone.
class Scalar {
 public:
  struct Factor {
    LaurentPoly poly;
    int power = 1;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  Scalar() = default;
  Scalar(long c) : num_(c) {}                          // NOLINT(google-explicit-constructor)
  Scalar(GaussianRational c) : num_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
  Scalar(LaurentPoly p) : num_(std::move(p)) {}       // NOLINT(google-explicit-constructor)

  static Scalar atom(Atom a, int half_exponent = 1) { return LaurentPoly::atom(a, half_exponent); }
  static Scalar q(int power = 1) { return atom(Atom::Q, 2 * power); }
  static Scalar qb(int power = 1) { return atom(Atom::QBar, 2 * power); }
  static Scalar t(int power = 1) { return atom(Atom::T, 2 * power); }
  static Scalar i() { return GaussianRational::i(); }
  static Scalar rational(long num, long den) { return GaussianRational::fraction(num, den); }
  // num / den; throws DivisionByZero for den == 0.
  static Scalar fraction(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const std::vector<Factor>& den_factors() const { return den_; }
  LaurentPoly den() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.empty() && num_ == LaurentPoly(1); }
  // true when the value is a Gaussian rational constant
  bool is_constant() const { return den_.empty() && num_.is_constant(); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  Scalar inverse() const;
  Scalar pow(int e) const;

  // Regime-free conjugation: q <-> qb, i -> -i, t fixed.
  Scalar star_generic() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }

  // Grammar-compatible text, e.g. "(1/t)*(q - 1/q)" or "(q - 1/q)/(t^2 + 1)".
  std::string to_string() const;

 private:
  Scalar(LaurentPoly num, std::vector<Factor> den) : num_(std::move(num)), den_(std::move(den)) {}

  void cancel();
  // Splits p into normalized factors (dividing out the given candidates
  // first); returns the unit part c*m so that p = unit * prod(factors).
  static LaurentPoly split(LaurentPoly p, const std::vector<Factor>& candidates, std::vector<Factor>& out);
  static void add_factor(std::vector<Factor>& den, const LaurentPoly& f, int power);

  LaurentPoly num_;
  std::vector<Factor> den_;  // sorted by poly terms
};

bool is_zero(const Scalar& s);

}  // namespace qlorentz
