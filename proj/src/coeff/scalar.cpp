#include "qlorentz/coeff/scalar.hpp"

#include <algorithm>

#include "qlorentz/errors.hpp"

namespace qlorentz {

namespace {

// p = unit * normalized, where unit is a monomial c*m and normalized has no
// monomial content and leading coefficient 1.
std::pair<LaurentPoly, LaurentPoly> normalize(const LaurentPoly& p) {
  LaurentMono content = p.min_exponents();
  LaurentPoly shifted = p.scaled(1, content.inverse());
  GaussianRational lead = shifted.leading().second;
  LaurentPoly normalized = shifted.scaled(lead.inverse());
  return {LaurentPoly::monomial(content, lead), normalized};
}

LaurentPoly monomial_inverse(const LaurentPoly& unit) {
  const auto& [m, c] = unit.terms().front();
  return LaurentPoly::monomial(m.inverse(), c.inverse());
}

}  // namespace

bool is_zero(const Scalar& s) { return s.is_zero(); }

Scalar Scalar::fraction(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZero("zero denominator");
  return Scalar(num) / Scalar(den);
}

LaurentPoly Scalar::den() const {
  LaurentPoly d(1);
  for (const auto& f : den_) d = d * f.poly.pow(f.power);
  return d;
}

void Scalar::add_factor(std::vector<Factor>& den, const LaurentPoly& f, int power) {
  for (auto& g : den) {
    if (g.poly == f) {
      g.power += power;
      return;
    }
  }
  den.push_back({f, power});
}

LaurentPoly Scalar::split(LaurentPoly p, const std::vector<Factor>& candidates, std::vector<Factor>& out) {
  auto [unit, f] = normalize(p);
  for (const auto& g : candidates) {
    if (f.is_monomial()) break;
    while (f.size() >= g.poly.size()) {
      auto quotient = f.divide_exact(g.poly);
      if (!quotient) break;
      f = std::move(*quotient);
      add_factor(out, g.poly, 1);
    }
  }
  if (!f.is_monomial()) {
    auto [u2, f2] = normalize(f);
    unit = unit * u2;
    add_factor(out, f2, 1);
  } else {
    unit = unit * f;
  }
  return unit;
}

void Scalar::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto& f : den_) {
    while (f.power > 0 && num_.size() >= f.poly.size()) {
      auto quotient = num_.divide_exact(f.poly);
      if (!quotient) break;
      num_ = std::move(*quotient);
      --f.power;
    }
  }
  std::erase_if(den_, [](const Factor& f) { return f.power == 0; });
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    cancel();
    return *this;
  }
  std::vector<Factor> common = den_;
  for (const auto& g : o.den_) {
    auto it = std::find_if(common.begin(), common.end(), [&](const Factor& f) { return f.poly == g.poly; });
    if (it == common.end())
      common.push_back(g);
    else
      it->power = std::max(it->power, g.power);
  }
  auto lift = [&common](const LaurentPoly& num, const std::vector<Factor>& den) {
    LaurentPoly out = num;
    for (const auto& f : common) {
      int have = 0;
      for (const auto& g : den)
        if (g.poly == f.poly) have = g.power;
      if (f.power > have) out = out * f.poly.pow(f.power - have);
    }
    return out;
  };
  num_ = lift(num_, den_) + lift(o.num_, o.den_);
  den_ = std::move(common);
  cancel();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero() || o.is_zero()) return *this = Scalar();
  num_ = num_ * o.num_;
  for (const auto& g : o.den_) add_factor(den_, g.poly, g.power);
  if (!den_.empty()) cancel();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero Scalar");
  if (is_zero()) return *this;
  LaurentPoly num = num_;
  for (const auto& g : o.den_) num = num * g.poly.pow(g.power);
  std::vector<Factor> candidates = den_;
  for (const auto& g : o.den_) candidates.push_back(g);
  std::vector<Factor> fresh;
  LaurentPoly unit = split(o.num_, candidates, fresh);
  num_ = num * monomial_inverse(unit);
  for (const auto& f : fresh) add_factor(den_, f.poly, f.power);
  cancel();
  return *this;
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_); }

Scalar Scalar::inverse() const { return Scalar(1) / *this; }

Scalar Scalar::pow(int e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned n = e < 0 ? -e : e;
  Scalar result(1);
  while (n != 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n != 0) base *= base;
  }
  return result;
}

Scalar Scalar::star_generic() const {
  Scalar result(num_.star());
  for (const auto& f : den_) result /= Scalar(f.poly.star().pow(f.power));
  return result;
}

namespace {

// Monomial shared by every term, restricted to atoms whose exponent is the
// same in all terms.
LaurentMono shared_monomial(const LaurentPoly& p) {
  LaurentMono m = p.terms().front().first;
  for (std::size_t a = 0; a < kAtomCount; ++a)
    for (const auto& t : p.terms())
      if (t.first.exp[a] != m.exp[a]) {
        m.exp[a] = 0;
        break;
      }
  return m;
}

std::string numerator_text(const LaurentPoly& p) {
  if (p.size() <= 1) return p.to_string();
  LaurentMono m = shared_monomial(p);
  if (m.is_one()) return p.to_string();
  std::string mono = m.to_string();
  if (mono.find('/') != std::string::npos) mono = "(" + mono + ")";
  return mono + "*(" + p.scaled(1, m.inverse()).to_string() + ")";
}

}  // namespace

std::string Scalar::to_string() const {
  if (den_.empty()) return numerator_text(num_);
  std::string den;
  for (const auto& f : den_) {
    if (!den.empty()) den += "*";
    den += "(" + f.poly.to_string() + ")";
    if (f.power != 1) den += "^" + std::to_string(f.power);
  }
  if (den_.size() > 1 || den_[0].power != 1) den = "(" + den + ")";
  return "(" + num_.to_string() + ")/" + den;
}

}  // namespace qlorentz
