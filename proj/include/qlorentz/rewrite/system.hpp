#pragma once

#include <string>
#include <vector>

#include "qlorentz/rewrite/ncpoly.hpp"

namespace qlorentz {

/// lhs -> rhs with lhs a word of length two and every rhs word smaller.
struct RewriteRule {
  Word lhs;
  NCPoly rhs;
};

class RewriteSystem {
 public:
  RewriteSystem(Alphabet alphabet, Regime regime) : alphabet_(std::move(alphabet)), regime_(std::move(regime)) {}

  const Alphabet& alphabet() const { return alphabet_; }
  const Regime& regime() const { return regime_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }

  // Throws NotOrientable if lhs is not quadratic or some rhs word is not
  // smaller; DuplicateLeading if a rule for lhs exists.
  void add_rule(RewriteRule rule);
  const RewriteRule* find(int a, int b) const;

 private:
  Alphabet alphabet_;
  Regime regime_;
  std::vector<RewriteRule> rules_;
  std::map<std::pair<int, int>, std::size_t> index_;
};

/// Gaussian elimination over the relation set (columns are words in
/// decreasing degree-lex order), then one rule per independent relation
/// with its leading word as lhs. Throws NotOrientable when a leading word
/// is not quadratic (including constant relations).
RewriteSystem orient(const std::vector<NCPoly>& relations, const Alphabet& a, const Regime& r);

/// Leftmost-first reduction, processing words from the largest down.
NCPoly normal_form(const RewriteSystem& sys, const NCPoly& p);
bool is_normal(const RewriteSystem& sys, const Word& w);

struct Obstruction {
  Word overlap;
  NCPoly difference;  // (rule on the left pair) minus (rule on the right pair)
};

/// Reduces every overlap abc of rules ab -> ., bc -> . both ways and
/// returns the nonzero differences.
std::vector<Obstruction> check_confluence(const RewriteSystem& sys);

std::size_t count_normal_words(const RewriteSystem& sys, std::size_t degree);

std::string to_string(const RewriteRule& r, const Alphabet& a);

}  // namespace qlorentz
