#include "qlorentz/rewrite/ncpoly.hpp"

#include <algorithm>

#include "qlorentz/errors.hpp"

namespace qlorentz {

int Alphabet::add(std::string name) {
  if (find(name)) throw DomainError("generator '" + name + "' declared twice");
  const int id = static_cast<int>(names_.size());
  names_.push_back(std::move(name));
  star_.push_back(id);
  rank_.push_back(id);
  return id;
}

void Alphabet::set_star(int a, int b) {
  star_.at(a) = b;
  star_.at(b) = a;
}

void Alphabet::set_order(const std::vector<int>& increasing) {
  if (increasing.size() != names_.size()) throw DomainError("ordering must list every generator once");
  std::vector<int> rank(names_.size(), -1);
  for (std::size_t k = 0; k < increasing.size(); ++k) {
    if (rank.at(increasing[k]) != -1) throw DomainError("ordering lists a generator twice");
    rank[increasing[k]] = static_cast<int>(k);
  }
  rank_ = std::move(rank);
}

void Alphabet::clear_star(int a) { star_.at(a) = -1; }

std::optional<int> Alphabet::find(std::string_view name) const {
  for (std::size_t k = 0; k < names_.size(); ++k)
    if (names_[k] == name) return static_cast<int>(k);
  return std::nullopt;
}

std::vector<int> Alphabet::ordered() const {
  std::vector<int> ids(names_.size());
  for (std::size_t k = 0; k < ids.size(); ++k) ids[rank_[k]] = static_cast<int>(k);
  return ids;
}

bool deglex_less(const Alphabet& a, const Word& x, const Word& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == y[k]) continue;
    return a.rank(x[k]) < a.rank(y[k]);
  }
  return false;
}

NCPoly::NCPoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Word{}, c);
}

NCPoly NCPoly::word(Word w, const Scalar& c) {
  NCPoly p;
  p.add(w, c);
  return p;
}

Scalar NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

std::size_t NCPoly::degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.size());
  return d;
}

void NCPoly::add(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

NCPoly NCPoly::operator-() const { return *this * Scalar(-1); }

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  }
  return out;
}

NCPoly commutator(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }

NCPoly specialize(const NCPoly& p, const Regime& r) {
  return p.map_coefficients([&](const Scalar& c) { return specialize(c, r); });
}

NCPoly star_poly(const Alphabet& a, const Regime& r, const NCPoly& p) {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    Word s(w.rbegin(), w.rend());
    for (int& g : s) {
      if (!a.has_star(g)) throw DomainError("generator '" + a.name(g) + "' has no star partner");
      g = a.star(g);
    }
    out.add(s, star(c, r));
  }
  return out;
}

std::string to_string(const Word& w, const Alphabet& a) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += "*";
    out += a.name(w[k]);
  }
  return out;
}

namespace {

// Sign of the first printed term of the numerator (highest total degree).
bool prints_negative(const Scalar& c) {
  const auto& terms = c.num().terms();
  if (terms.empty()) return false;
  auto lead = std::max_element(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    if (x.first.total_degree() != y.first.total_degree()) return x.first.total_degree() < y.first.total_degree();
    return x.first < y.first;
  });
  const GaussianRational& g = lead->second;
  return g.is_real() ? sgn(g.re()) < 0 : sgn(g.re()) < 0 || (sgn(g.re()) == 0 && sgn(g.im()) < 0);
}

bool has_top_level_sum(const std::string& s) {
  int depth = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const char ch = s[k];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && k > 0 && (ch == '+' || ch == '-') && s[k - 1] == ' ') return true;
  }
  return false;
}

}  // namespace

std::string to_string(const NCPoly& p, const Alphabet& a) {
  if (p.is_zero()) return "0";
  std::vector<const NCPoly::Terms::value_type*> order;
  for (const auto& t : p.terms()) order.push_back(&t);
  std::sort(order.begin(), order.end(), [&](auto* x, auto* y) { return deglex_less(a, x->first, y->first); });
  std::string out;
  bool first = true;
  for (const auto* t : order) {
    const auto& [w, c] = *t;
    const bool negative = prints_negative(c);
    std::string coeff = (negative ? -c : c).to_string();
    std::string body;
    if (w.empty()) {
      body = has_top_level_sum(coeff) && !first ? "(" + coeff + ")" : coeff;
    } else {
      if (has_top_level_sum(coeff)) coeff = "(" + coeff + ")";
      body = coeff == "1" ? to_string(w, a) : coeff + "*" + to_string(w, a);
    }
    if (first)
      out = negative ? "-" + (has_top_level_sum(body) ? "(" + body + ")" : body) : body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace qlorentz
