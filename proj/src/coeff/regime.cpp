#include "qlorentz/coeff/regime.hpp"

#include <cmath>
#include <vector>

#include "qlorentz/errors.hpp"

namespace qlorentz {

Substitution& Substitution::set(Atom a, GaussianRational c, LaurentMono m) {
  if (c.is_zero()) throw DivisionByZero("atom substituted by zero");
  image_[static_cast<std::size_t>(a)] = Image{std::move(c), m};
  return *this;
}

bool Substitution::is_identity() const {
  for (const auto& img : image_)
    if (img) return false;
  return true;
}

Substitution Substitution::flip(Atom a) {
  Substitution s;
  s.set(a, -1, LaurentMono::atom(a));
  return s;
}

Substitution Substitution::classical() {
  Substitution s;
  s.set(Atom::Q, 1).set(Atom::QBar, 1).set(Atom::T, 1);
  return s;
}

LaurentPoly Substitution::apply(const LaurentPoly& p) const {
  if (is_identity()) return p;
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [mono, coeff] : p.terms()) {
    LaurentMono m;
    GaussianRational c = coeff;
    for (std::size_t a = 0; a < kAtomCount; ++a) {
      int e = mono.exp[a];
      if (e == 0) continue;
      if (const auto& img = image_[a]) {
        if (!img->first.is_one()) c *= img->first.pow(e);
        for (std::size_t b = 0; b < kAtomCount; ++b) m.exp[b] += e * img->second.exp[b];
      } else {
        m.exp[a] += e;
      }
    }
    terms.emplace_back(m, std::move(c));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

Scalar Substitution::apply(const Scalar& s) const {
  if (is_identity()) return s;
  Scalar result(apply(s.num()));
  for (const auto& f : s.den_factors()) {
    LaurentPoly image = apply(f.poly);
    if (image.is_zero()) throw DivisionByZero("denominator vanishes under substitution");
    result /= Scalar(image.pow(f.power));
  }
  return result;
}

Regime::Regime(Kind kind, int epsilon) : kind_(kind), epsilon_(epsilon) {
  switch (kind_) {
    case Kind::Generic:
      break;
    case Kind::UnitCircle:
      substitution_.set(Atom::QBar, 1, LaurentMono::atom(Atom::Q, -1));
      break;
    case Kind::RealQ:
      substitution_.set(Atom::QBar, 1, LaurentMono::atom(Atom::Q));
      break;
    case Kind::Case2:
      substitution_.set(Atom::QBar, 1, LaurentMono::atom(Atom::Q)).set(Atom::T, 1, LaurentMono::atom(Atom::Q));
      break;
    case Kind::Classical:
      substitution_ = Substitution::classical();
      break;
  }
}

Regime Regime::case2(int epsilon) {
  if (epsilon != 1 && epsilon != -1) throw MissingParameter("case 2 requires epsilon = +1 or -1");
  return Regime(Kind::Case2, epsilon);
}

Regime Regime::parse(std::string_view name) {
  if (name == "generic") return generic();
  if (name == "unit-circle") return unit_circle();
  if (name == "real-q") return real_q();
  if (name == "case2+") return case2(1);
  if (name == "case2-") return case2(-1);
  if (name == "classical") return classical();
  throw DomainError("unknown regime '" + std::string(name) + "'");
}

std::string Regime::name() const {
  switch (kind_) {
    case Kind::Generic:
      return "generic";
    case Kind::UnitCircle:
      return "unit-circle";
    case Kind::RealQ:
      return "real-q";
    case Kind::Case2:
      return epsilon_ > 0 ? "case2+" : "case2-";
    case Kind::Classical:
      return "classical";
  }
  return "?";
}

Scalar specialize(const Scalar& s, const Regime& r) { return r.substitution().apply(s); }

Scalar star(const Scalar& s, const Regime& r) {
  return specialize(specialize(s, r).star_generic(), r);
}

NumericPoint numeric_point(std::complex<double> q, double t, const Regime& r) {
  constexpr double kTol = 1e-12;
  const std::complex<double> i(0.0, 1.0);
  if (std::abs(q) < kTol || std::abs(q - i) < kTol || std::abs(q + i) < kTol)
    throw DomainError("q must avoid 0, i and -i");
  if (!(t > 0.0)) throw DomainError("t must be positive");
  switch (r.kind()) {
    case Regime::Kind::UnitCircle:
      if (std::abs(std::abs(q) - 1.0) > kTol) throw DomainError("unit-circle regime needs |q| = 1");
      break;
    case Regime::Kind::RealQ:
    case Regime::Kind::Case2:
      if (std::abs(q.imag()) > kTol || q.real() <= 0.0) throw DomainError("regime needs real positive q");
      break;
    default:
      break;
  }
  NumericPoint p;
  if (r.kind() == Regime::Kind::Classical) return p;
  p.q_half = std::sqrt(q);
  p.qb_half = std::conj(p.q_half);
  p.t_half = std::sqrt(t);
  return p;
}

namespace {

std::complex<double> ipow(std::complex<double> z, int e) {
  if (e < 0) return 1.0 / ipow(z, -e);
  std::complex<double> r(1.0, 0.0);
  while (e != 0) {
    if (e & 1) r *= z;
    e >>= 1;
    if (e != 0) z *= z;
  }
  return r;
}

std::pair<std::complex<double>, double> evaluate_poly(const LaurentPoly& p, const NumericPoint& pt) {
  std::complex<double> sum(0.0, 0.0);
  double scale = 0.0;
  for (const auto& [m, c] : p.terms()) {
    std::complex<double> term =
        c.to_complex() * ipow(pt.q_half, m.exp[0]) * ipow(pt.qb_half, m.exp[1]) * ipow(pt.t_half, m.exp[2]);
    sum += term;
    scale += std::abs(term);
  }
  return {sum, scale};
}

}  // namespace

std::complex<double> evaluate(const Scalar& s, const NumericPoint& p) {
  std::complex<double> value = evaluate_poly(s.num(), p).first;
  for (const auto& f : s.den_factors()) {
    auto [d, scale] = evaluate_poly(f.poly, p);
    if (std::abs(d) <= 1e-13 * scale) throw DivisionByZero("denominator vanishes at sample point");
    value /= ipow(d, f.power);
  }
  return value;
}

std::complex<double> eval_numeric(const Scalar& s, std::complex<double> q, double t, const Regime& r) {
  return evaluate(specialize(s, r), numeric_point(q, t, r));
}

}  // namespace qlorentz
