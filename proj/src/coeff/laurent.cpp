#include "qlorentz/coeff/laurent.hpp"

#include <algorithm>
#include <limits>

namespace qlorentz {

namespace {

const char* const kAtomNames[kAtomCount] = {"q", "qb", "t"};

std::string power_text(const char* name, int half_exponent) {
  // half_exponent > 0
  std::string out = name;
  if (half_exponent % 2 == 0) {
    if (half_exponent != 2) out += "^" + std::to_string(half_exponent / 2);
  } else {
    out += "^(" + std::to_string(half_exponent) + "/2)";
  }
  return out;
}

}  // namespace

std::string LaurentMono::to_string() const {
  std::string num;
  std::string den;
  int den_count = 0;
  for (std::size_t a = 0; a < kAtomCount; ++a) {
    if (exp[a] > 0) {
      if (!num.empty()) num += "*";
      num += power_text(kAtomNames[a], exp[a]);
    } else if (exp[a] < 0) {
      if (!den.empty()) den += "*";
      den += power_text(kAtomNames[a], -exp[a]);
      ++den_count;
    }
  }
  if (den.empty()) return num;
  if (num.empty()) num = "1";
  if (den_count > 1) den = "(" + den + ")";
  return num + "/" + den;
}

LaurentPoly::LaurentPoly(GaussianRational c) {
  if (!c.is_zero()) terms_.emplace_back(LaurentMono{}, std::move(c));
}

LaurentPoly LaurentPoly::monomial(const LaurentMono& m, GaussianRational c) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.emplace_back(m, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

GaussianRational LaurentPoly::constant_term() const {
  for (const auto& [m, c] : terms_)
    if (m.is_one()) return c;
  return {};
}

LaurentMono LaurentPoly::min_exponents() const {
  if (terms_.empty()) return {};
  LaurentMono m;
  m.exp.fill(std::numeric_limits<int>::max());
  for (const auto& t : terms_)
    for (std::size_t a = 0; a < kAtomCount; ++a) m.exp[a] = std::min(m.exp[a], t.first.exp[a]);
  return m;
}

namespace {

template <class Combine>
std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& a,
                                     const std::vector<LaurentPoly::Term>& b, Combine combine,
                                     bool negate_b) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, negate_b ? -j->second : j->second);
      ++j;
    } else {
      GaussianRational c = i->second;
      combine(c, j->second);
      if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge(terms_, o.terms_, [](GaussianRational& c, const GaussianRational& d) { c += d; }, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, [](GaussianRational& c, const GaussianRational& d) { c -= d; }, true);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial()) return b.scaled(a.terms_[0].second, a.terms_[0].first);
  if (b.is_monomial()) return a.scaled(b.terms_[0].second, b.terms_[0].first);
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) terms.emplace_back(ma * mb, ca * cb);
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

LaurentPoly LaurentPoly::scaled(const GaussianRational& c, const LaurentMono& m) const {
  if (c.is_zero()) return {};
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  // multiplying every monomial by m preserves the order
  for (const auto& [mono, coeff] : terms_) p.terms_.emplace_back(mono * m, coeff * c);
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::star() const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [m, c] : terms_) terms.emplace_back(m.swapped(), c.conj());
  return from_terms(std::move(terms));
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return LaurentPoly{};
  if (d.is_monomial()) return scaled(d.terms_[0].second.inverse(), d.terms_[0].first.inverse());
  // Shift both into the polynomial ring; monomials are units so this is
  // harmless. With a single divisor, lex-order division leaves remainder 0
  // iff d divides.
  LaurentMono shift_num = min_exponents();
  LaurentMono shift_den = d.min_exponents();
  LaurentPoly rem = scaled(1, shift_num.inverse());
  LaurentPoly div = d.scaled(1, shift_den.inverse());
  const auto& [lead_mono, lead_coeff] = div.leading();
  GaussianRational lead_inv = lead_coeff.inverse();
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const auto& [m, c] = rem.leading();
    if (!m.divisible_by(lead_mono)) return std::nullopt;
    LaurentMono qm = m / lead_mono;
    GaussianRational qc = c * lead_inv;
    rem -= div.scaled(qc, qm);
    quotient.emplace_back(qm, std::move(qc));
  }
  return from_terms(std::move(quotient)).scaled(1, shift_num / shift_den);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // highest total degree first reads naturally: "q - 1/q"
  std::vector<const Term*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
    if (a->first.total_degree() != b->first.total_degree())
      return a->first.total_degree() > b->first.total_degree();
    return b->first < a->first;
  });
  bool first = true;
  for (const Term* t : order) {
    const auto& [m, c] = *t;
    std::string mono = m.to_string();
    bool negative = c.is_real() && sgn(c.re()) < 0;
    GaussianRational mag = negative ? -c : c;
    std::string coeff;
    if (!mag.is_one()) {
      coeff = mag.to_string();
      if (!mag.is_real() && sgn(mag.re()) != 0) coeff = "(" + coeff + ")";
    }
    std::string body;
    if (mono.empty()) {
      body = coeff.empty() ? "1" : coeff;
    } else if (coeff.empty()) {
      body = mono;
    } else {
      body = coeff + "*" + (mono.find('/') != std::string::npos ? "(" + mono + ")" : mono);
    }
    if (first) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

}  // namespace qlorentz
