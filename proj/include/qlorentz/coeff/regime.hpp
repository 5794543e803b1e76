#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "qlorentz/coeff/scalar.hpp"

namespace qlorentz {

/// Monomial substitution: each atom is either left alone or replaced by
/// c * (monomial in the atoms). Applied to half-power atoms, so e.g.
/// qb^{1/2} -> q^{-1/2} realizes qb = 1/q.
class Substitution {
 public:
  using Image = std::pair<GaussianRational, LaurentMono>;

  Substitution& set(Atom a, GaussianRational c, LaurentMono m = {});
  const std::optional<Image>& image(Atom a) const { return image_[static_cast<std::size_t>(a)]; }
  bool is_identity() const;

  LaurentPoly apply(const LaurentPoly& p) const;
  // Throws DivisionByZero when a denominator factor maps to zero.
  Scalar apply(const Scalar& s) const;

  // Sign flip of one half-power atom: a -> -a.
  static Substitution flip(Atom a);
  // All atoms -> 1 (q = qb = t = 1).
  static Substitution classical();

 private:
  std::array<std::optional<Image>, kAtomCount> image_;
};

/// Parameter regime. Generic keeps q, qb, t independent; UnitCircle sets
/// qb^{1/2} = q^{-1/2}; RealQ sets qb^{1/2} = q^{1/2}; Case2 sets qb = t = q
/// and carries epsilon = +-1 for the X matrix; Classical sets q = qb = t = 1.
/// Every regime except Case2 has epsilon = 0.
class Regime {
 public:
  enum class Kind { Generic, UnitCircle, RealQ, Case2, Classical };

  static Regime generic() { return Regime(Kind::Generic, 0); }
  static Regime unit_circle() { return Regime(Kind::UnitCircle, 0); }
  static Regime real_q() { return Regime(Kind::RealQ, 0); }
  static Regime case2(int epsilon);
  static Regime classical() { return Regime(Kind::Classical, 0); }
  // "generic", "unit-circle", "real-q", "case2+", "case2-", "classical"
  static Regime parse(std::string_view name);

  Kind kind() const { return kind_; }
  int epsilon() const { return epsilon_; }
  std::string name() const;

  const Substitution& substitution() const { return substitution_; }

  friend bool operator==(const Regime& a, const Regime& b) {
    return a.kind_ == b.kind_ && a.epsilon_ == b.epsilon_;
  }

 private:
  Regime(Kind kind, int epsilon);

  Kind kind_;
  int epsilon_;
  Substitution substitution_;
};

Scalar specialize(const Scalar& s, const Regime& r);

// Conjugation within a regime: swaps q and qb, conjugates i, fixes t, then
// re-specializes (so star(q) = 1/q on the unit circle, q for real q).
Scalar star(const Scalar& s, const Regime& r);

/// Half-power values used for numeric evaluation.
struct NumericPoint {
  std::complex<double> q_half{1.0, 0.0};
  std::complex<double> qb_half{1.0, 0.0};
  std::complex<double> t_half{1.0, 0.0};
};

// Validates (q, t) for the regime and fixes the principal branch of q^{1/2};
// qb^{1/2} is its complex conjugate. Throws DomainError.
NumericPoint numeric_point(std::complex<double> q, double t, const Regime& r);

// Evaluates an already-specialized Scalar at a point. Throws DivisionByZero.
std::complex<double> evaluate(const Scalar& s, const NumericPoint& p);

std::complex<double> eval_numeric(const Scalar& s, std::complex<double> q, double t, const Regime& r);

}  // namespace qlorentz
