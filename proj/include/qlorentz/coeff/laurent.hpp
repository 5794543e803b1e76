#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlorentz/coeff/gaussian_rational.hpp"

namespace qlorentz {

/// The three formal atoms. Exponents count half-powers: exponent 1 of
/// Atom::Q means q^{1/2}.
enum class Atom : std::uint8_t { Q = 0, QBar = 1, T = 2 };

inline constexpr std::size_t kAtomCount = 3;

/// Monomial q^{a/2} qb^{b/2} t^{c/2}; exponents may be negative.
struct LaurentMono {
  std::array<int, kAtomCount> exp{};

  static LaurentMono atom(Atom a, int half_exponent = 1) {
    LaurentMono m;
    m.exp[static_cast<std::size_t>(a)] = half_exponent;
    return m;
  }

  int operator[](Atom a) const { return exp[static_cast<std::size_t>(a)]; }
  bool is_one() const { return exp == std::array<int, kAtomCount>{}; }
  int total_degree() const { return exp[0] + exp[1] + exp[2]; }

  LaurentMono inverse() const { return {{-exp[0], -exp[1], -exp[2]}}; }
  // q <-> qb
  LaurentMono swapped() const { return {{exp[1], exp[0], exp[2]}}; }
  // componentwise >=
  bool divisible_by(const LaurentMono& o) const {
    return exp[0] >= o.exp[0] && exp[1] >= o.exp[1] && exp[2] >= o.exp[2];
  }

  friend LaurentMono operator*(const LaurentMono& a, const LaurentMono& b) {
    return {{a.exp[0] + b.exp[0], a.exp[1] + b.exp[1], a.exp[2] + b.exp[2]}};
  }
  friend LaurentMono operator/(const LaurentMono& a, const LaurentMono& b) { return a * b.inverse(); }
  friend auto operator<=>(const LaurentMono&, const LaurentMono&) = default;

  // "q", "1/t", "q^(1/2)*qb/t^2"; empty string for the unit monomial.
  std::string to_string() const;
};

/// Sparse Laurent polynomial with Gaussian-rational coefficients. Terms are
/// kept sorted by monomial (lexicographic in (q, qb, t)) with no zeros.
class LaurentPoly {
 public:
  using Term = std::pair<LaurentMono, GaussianRational>;

  LaurentPoly() = default;
  LaurentPoly(GaussianRational c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long c) : LaurentPoly(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(const LaurentMono& m, GaussianRational c = 1);
  static LaurentPoly atom(Atom a, int half_exponent = 1) {
    return monomial(LaurentMono::atom(a, half_exponent));
  }
  // Takes arbitrary terms; sorts and combines.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return is_zero() || (is_monomial() && terms_[0].first.is_one()); }
  GaussianRational constant_term() const;
  const Term& leading() const { return terms_.back(); }

  // Componentwise minimum exponent over all terms (the monomial content).
  LaurentMono min_exponents() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  LaurentPoly scaled(const GaussianRational& c, const LaurentMono& m = {}) const;
  LaurentPoly pow(unsigned e) const;

  // q <-> qb on exponents, coefficients conjugated.
  LaurentPoly star() const;

  // Exact quotient `*this / d` when d divides *this in the Laurent ring.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace qlorentz
