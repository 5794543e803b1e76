#include "qlorentz/rewrite/system.hpp"

#include <algorithm>
#include <set>

#include "qlorentz/errors.hpp"
#include "qlorentz/tensor/linalg.hpp"

namespace qlorentz {

void RewriteSystem::add_rule(RewriteRule rule) {
  if (rule.lhs.size() != 2)
    throw NotOrientable("rule lhs '" + to_string(rule.lhs, alphabet_) + "' is not a word of length two");
  for (const auto& [w, c] : rule.rhs.terms())
    if (!deglex_less(alphabet_, w, rule.lhs))
      throw NotOrientable("rule " + to_string(rule, alphabet_) + " does not decrease in degree-lex order");
  const std::pair key{rule.lhs[0], rule.lhs[1]};
  if (index_.contains(key)) throw DuplicateLeading("two rules for " + to_string(rule.lhs, alphabet_));
  index_.emplace(key, rules_.size());
  rules_.push_back(std::move(rule));
}

const RewriteRule* RewriteSystem::find(int a, int b) const {
  auto it = index_.find({a, b});
  return it == index_.end() ? nullptr : &rules_[it->second];
}

RewriteSystem orient(const std::vector<NCPoly>& relations, const Alphabet& a, const Regime& r) {
  std::set<Word, DeglexLess> words(DeglexLess{&a});
  for (const auto& rel : relations)
    for (const auto& [w, c] : rel.terms()) words.insert(w);
  const std::vector<Word> columns(words.rbegin(), words.rend());
  ScalarMatrix m;
  for (const auto& rel : relations) {
    ScalarRow row(columns.size());
    for (std::size_t k = 0; k < columns.size(); ++k) row[k] = specialize(rel.coeff(columns[k]), r);
    m.push_back(std::move(row));
  }
  const Echelon e = row_reduce(std::move(m));
  RewriteSystem sys(a, r);
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    const Word& lead = columns[e.pivots[i]];
    if (lead.size() != 2)
      throw NotOrientable("relation with leading word '" + (lead.empty() ? std::string("1") : to_string(lead, a)) +
                          "' cannot be oriented into a quadratic rule");
    NCPoly rhs;
    for (std::size_t k = e.pivots[i] + 1; k < columns.size(); ++k) rhs.add(columns[k], -e.rows[i][k]);
    sys.add_rule({lead, std::move(rhs)});
  }
  return sys;
}

namespace {

// Position of the leftmost reducible pair, or -1.
int reducible_at(const RewriteSystem& sys, const Word& w) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    if (sys.find(w[k], w[k + 1])) return static_cast<int>(k);
  return -1;
}

}  // namespace

bool is_normal(const RewriteSystem& sys, const Word& w) { return reducible_at(sys, w) < 0; }

NCPoly normal_form(const RewriteSystem& sys, const NCPoly& p) {
  // Rewriting only produces smaller words, so taking the largest pending
  // word each time visits every word at most once.
  std::map<Word, Scalar, DeglexLess> pending(DeglexLess{&sys.alphabet()});
  auto push = [&](const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = pending.emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) pending.erase(it);
  };
  for (const auto& [w, c] : p.terms()) push(w, c);
  NCPoly out;
  while (!pending.empty()) {
    auto last = std::prev(pending.end());
    const Word w = last->first;
    const Scalar c = last->second;
    pending.erase(last);
    const int k = reducible_at(sys, w);
    if (k < 0) {
      out.add(w, c);
      continue;
    }
    const RewriteRule* rule = sys.find(w[k], w[k + 1]);
    for (const auto& [rw, rc] : rule->rhs.terms()) {
      Word next(w.begin(), w.begin() + k);
      next.insert(next.end(), rw.begin(), rw.end());
      next.insert(next.end(), w.begin() + k + 2, w.end());
      push(next, c * rc);
    }
  }
  return out;
}

std::vector<Obstruction> check_confluence(const RewriteSystem& sys) {
  std::vector<Obstruction> out;
  for (const auto& left : sys.rules()) {
    for (const auto& right : sys.rules()) {
      if (left.lhs[1] != right.lhs[0]) continue;
      const int a = left.lhs[0], b = left.lhs[1], c = right.lhs[1];
      const NCPoly one = normal_form(sys, left.rhs * NCPoly::gen(c));
      const NCPoly two = normal_form(sys, NCPoly::gen(a) * right.rhs);
      NCPoly diff = one - two;
      if (!diff.is_zero()) out.push_back({Word{a, b, c}, std::move(diff)});
    }
  }
  return out;
}

std::size_t count_normal_words(const RewriteSystem& sys, std::size_t degree) {
  const std::size_t n = sys.alphabet().size();
  if (degree == 0) return 1;
  std::vector<std::size_t> ending(n, 1);
  for (std::size_t d = 1; d < degree; ++d) {
    std::vector<std::size_t> next(n, 0);
    for (std::size_t prev = 0; prev < n; ++prev)
      for (std::size_t g = 0; g < n; ++g)
        if (!sys.find(static_cast<int>(prev), static_cast<int>(g))) next[g] += ending[prev];
    ending = std::move(next);
  }
  std::size_t total = 0;
  for (auto v : ending) total += v;
  return total;
}

std::string to_string(const RewriteRule& r, const Alphabet& a) {
  return to_string(r.lhs, a) + " -> " + to_string(r.rhs, a);
}

}  // namespace qlorentz
