#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlorentz/coeff/regime.hpp"

namespace qlorentz {

/// Finite set of noncommuting generators with a star involution and a
/// total order. Generator ids are insertion indices; the order is separate
/// so the same alphabet can be ranked differently per regime.
class Alphabet {
 public:
  int add(std::string name);
  // Both directions; a generator may be its own partner.
  void set_star(int a, int b);
  // Marks a generator whose star is not a generator; star_poly then throws.
  void clear_star(int a);
  // Lists every generator once, smallest first.
  void set_order(const std::vector<int>& increasing);

  std::size_t size() const { return names_.size(); }
  const std::string& name(int id) const { return names_.at(id); }
  std::optional<int> find(std::string_view name) const;
  int star(int id) const { return star_.at(id); }
  bool has_star(int id) const { return star_.at(id) >= 0; }
  int rank(int id) const { return rank_.at(id); }
  std::vector<int> ordered() const;

 private:
  std::vector<std::string> names_;
  std::vector<int> star_;
  std::vector<int> rank_;
};

using Word = std::vector<int>;

/// Degree first, then lexicographic by rank.
bool deglex_less(const Alphabet& a, const Word& x, const Word& y);

struct DeglexLess {
  const Alphabet* alphabet;
  bool operator()(const Word& x, const Word& y) const { return deglex_less(*alphabet, x, y); }
};

/// Noncommutative polynomial: words (generator ids) with Scalar coefficients.
class NCPoly {
 public:
  using Terms = std::map<Word, Scalar>;

  NCPoly() = default;
  NCPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  static NCPoly word(Word w, const Scalar& c = Scalar(1));
  static NCPoly gen(int id) { return word({id}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const Word& w) const;
  std::size_t degree() const;
  void add(const Word& w, const Scalar& c);

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Scalar& c);
  NCPoly operator-() const;
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const Scalar& c) { return a *= c; }
  friend NCPoly operator*(const Scalar& c, NCPoly a) { return a *= c; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return (a - b).is_zero(); }

  template <class F>
  NCPoly map_coefficients(F f) const {
    NCPoly out;
    for (const auto& [w, c] : terms_) out.add(w, f(c));
    return out;
  }

 private:
  Terms terms_;
};

NCPoly commutator(const NCPoly& a, const NCPoly& b);
NCPoly specialize(const NCPoly& p, const Regime& r);

/// Reverses every word, stars each generator and each coefficient.
/// Throws DomainError on a generator without a star partner.
NCPoly star_poly(const Alphabet& a, const Regime& r, const NCPoly& p);

// Grammar-compatible text, terms in increasing degree-lex order, e.g.
// "alpha*delta - (1/t)*(q - 1/q)*beta*gamma".
std::string to_string(const NCPoly& p, const Alphabet& a);
std::string to_string(const Word& w, const Alphabet& a);

}  // namespace qlorentz
