#include "qlorentz/algebras/minkowski.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "qlorentz/errors.hpp"
#include "qlorentz/intertwiners/operators.hpp"

namespace qlorentz {

using namespace gen;

namespace {

NCPoly g(int id) { return NCPoly::gen(id); }

const Signature kUBUB{Leg::U, Leg::B, Leg::U, Leg::B};

std::string describe(const std::vector<Obstruction>& obs, const Alphabet& a) {
  std::string out;
  for (const auto& o : obs) {
    if (!out.empty()) out += "; ";
    out += to_string(o.overlap, a) + ": " + to_string(o.difference, a);
  }
  return out;
}

CheckReport make(std::string id, const Regime& r, bool ok, const std::string& residual, const Stopwatch& sw,
                 std::string detail = "") {
  CheckReport rep = new_report(std::move(id), r, ok);
  if (!ok) rep.residual = residual;
  rep.detail = std::move(detail);
  rep.elapsed_ms = sw.ms();
  return rep;
}

}  // namespace

std::string to_string(RelationSource s) { return s == RelationSource::Derived ? "derived" : "table"; }

NCPoly quadratic_form(const ScalarRow& f, int offset) {
  if (f.size() != 16) throw DomainError("quadratic form needs 16 coefficients");
  NCPoly p;
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) p.add({offset + j, offset + k}, f[4 * j + k]);
  return p;
}

ScalarMatrix coefficient_matrix(const std::vector<NCPoly>& relations) {
  ScalarMatrix m;
  for (const auto& rel : relations) {
    ScalarRow row(16);
    for (const auto& [w, c] : rel.terms()) {
      if (w.size() != 2 || !is_x(w[0]) || !is_x(w[1]))
        throw DomainError("relation is not a quadratic form in alpha..delta");
      row[4 * w[0] + w[1]] = c;
    }
    m.push_back(std::move(row));
  }
  return m;
}

std::vector<NCPoly> derived_relations(const Regime& r) {
  const Operators& o = operators(r);
  const TMap blocks = kron(o.Pp, o.Q) + kron(o.P, o.Qp);
  const TMap xinv23 = place(o.Xinv, {1, 2}, kUBUB);
  std::vector<NCPoly> out;
  for (const auto& f : annihilator_basis(blocks)) out.push_back(quadratic_form(row_of(compose(f, xinv23))));
  return out;
}

std::vector<NCPoly> table_relations(const Regime& r) {
  const Scalar q = Scalar::q(), qb = Scalar::qb(), t = Scalar::t(), eps(r.epsilon());
  const NCPoly a = g(kAlpha), b = g(kBeta), c = g(kGamma), d = g(kDelta);
  std::vector<NCPoly> rels;
  switch (r.kind()) {
    case Regime::Kind::UnitCircle:
      rels = {a * b - t * q * b * a,
              a * c - q / t * c * a,
              b * d - t * q * d * b,
              c * d - q / t * d * c,
              b * c - c * b,
              commutator(a, d) - (q - q.inverse()) / t * b * c};
      break;
    case Regime::Kind::RealQ:
      rels = {b * a - q / t * a * b,
              c * a - t / q * a * c,
              d * c - q * t * c * d,
              d * b - (q * t).inverse() * b * d,
              d * a - a * d,
              commutator(b, c) - t * (q - q.inverse()) * a * d};
      break;
    case Regime::Kind::Classical:
      for (int j = 0; j < 4; ++j)
        for (int k = j + 1; k < 4; ++k) rels.push_back(commutator(g(j), g(k)));
      break;
    case Regime::Kind::Generic:
    case Regime::Kind::Case2: {
      const Scalar m2 = q * qb;
      rels = {qb * (a * b - eps * b * d) - t * b * a,
              qb * t * c * d - d * c,
              m2 * t * a * d + qb * (c * b - eps * d * d) - q * b * c - t * d * a,
              q * (c * a - eps * d * c) - t * a * c,
              q * t * d * b - b * d,
              m2 * t * d * a + q * (c * b - eps * d * d) - qb * b * c - t * a * d};
      break;
    }
  }
  for (auto& rel : rels) rel = specialize(rel, r);
  return rels;
}

MinkowskiAlgebra minkowski_system(const Regime& r, RelationSource source) {
  auto derived = derived_relations(r);
  auto table = table_relations(r);
  const ScalarMatrix md = coefficient_matrix(derived), mt = coefficient_matrix(table);
  const std::size_t rd = rank(md), rt = rank(mt);
  if (rd != 6 || rt != 6 || !same_row_space(md, mt))
    throw SpanMismatch("relation spaces differ in regime " + r.name() + " (derived rank " + std::to_string(rd) +
                       ", table rank " + std::to_string(rt) + ")");
  auto& rels = source == RelationSource::Derived ? derived : table;
  RewriteSystem sys = orient(rels, minkowski_alphabet(r), r);
  return {r, source, std::move(rels), std::move(sys)};
}

const MinkowskiAlgebra& minkowski(const Regime& r) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<MinkowskiAlgebra>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[r.name()];
  if (!slot) slot = std::make_unique<MinkowskiAlgebra>(minkowski_system(r));
  return *slot;
}

std::vector<RewriteRule> primed_rules(const RewriteSystem& sys) {
  std::vector<RewriteRule> out;
  for (const auto& rule : sys.rules()) {
    NCPoly rhs;
    for (const auto& [w, c] : rule.rhs.terms()) {
      Word s = w;
      for (int& id : s) id = xp(id);
      rhs.add(s, c);
    }
    out.push_back({{xp(rule.lhs[0]), xp(rule.lhs[1])}, std::move(rhs)});
  }
  return out;
}

Reports relation_checks(const Regime& r) {
  Reports out;
  const bool generic = r.kind() == Regime::Kind::Generic;
  {
    Stopwatch sw;
    std::string why;
    try {
      minkowski_system(r, RelationSource::Derived);
    } catch (const SpanMismatch& e) {
      why = e.what();
    }
    out.push_back(make("relations.span-equality", r, why.empty(), why, sw, "6 independent relations"));
  }
  const MinkowskiAlgebra& alg = minkowski(r);
  const Alphabet& a = alg.system.alphabet();
  if (!generic) {
    Stopwatch sw;
    const Operators& o = operators(r);
    const bool real = r.kind() == Regime::Kind::RealQ || r.kind() == Regime::Kind::Case2;
    const TMap& R = real ? o.Rminus : o.Rplus;
    const bool ok = same_row_space(to_matrix(R - TMap::identity(kUBUB)), to_matrix(o.Pminus));
    out.push_back(make("relations.rhat-equivalence", r, ok, "row spaces differ", sw,
                       real ? "Pminus x x = 0 iff Rhat- x x = x x" : "Pminus x x = 0 iff Rhat+ x x = x x"));
  }
  {
    Stopwatch sw;
    const auto obs = check_confluence(alg.system);
    CheckReport rep = make("relations.confluence", r, obs.empty(), describe(obs, a), sw);
    if (generic) {
      rep.negative_control = true;
      rep.passed = !obs.empty();
      rep.residual = obs.empty() ? std::optional<std::string>("unexpected zero") : describe(obs, a);
    }
    out.push_back(rep);
  }
  if (!generic) {
    Stopwatch sw;
    const std::size_t expected[] = {1, 4, 10, 20, 35};
    std::string counts;
    bool ok = true;
    for (std::size_t d = 0; d < 5; ++d) {
      const std::size_t n = count_normal_words(alg.system, d);
      counts += (d ? "," : "") + std::to_string(n);
      ok = ok && n == expected[d];
    }
    out.push_back(make("relations.normal-word-count", r, ok, "counts " + counts, sw, "degrees 0..4: " + counts));
  }
  if (!generic) {
    Stopwatch sw;
    std::vector<NCPoly> starred;
    for (const auto& rel : alg.relations) starred.push_back(star_poly(a, r, rel));
    const bool ok = row_space_contains(coefficient_matrix(alg.relations), coefficient_matrix(starred));
    out.push_back(make("relations.star-closed", r, ok, "a starred relation leaves the span", sw));
  }
  if (r.kind() == Regime::Kind::Classical) {
    Stopwatch sw;
    std::string bad;
    for (int j = 0; j < 4 && bad.empty(); ++j)
      for (int k = 0; k < 4 && bad.empty(); ++k) {
        NCPoly nf = normal_form(alg.system, commutator(g(j), g(k)));
        if (!nf.is_zero()) bad = "[" + a.name(j) + "," + a.name(k) + "] -> " + to_string(nf, a);
      }
    out.push_back(make("relations.commutative", r, bad.empty(), bad, sw));
  }
  if (r.kind() == Regime::Kind::UnitCircle) out.push_back(mz_presentation_check());
  return out;
}

PbwObstruction pbw_obstruction_generic() {
  const Regime r = Regime::generic();
  const RewriteSystem& sys = minkowski(r).system;
  const Scalar q = Scalar::q(), qb = Scalar::qb();
  const Scalar c = q * (qb * qb + Scalar(1));
  const RewriteRule* ba = sys.find(kBeta, kAlpha);
  const RewriteRule* cb = sys.find(kGamma, kBeta);
  if (!ba || !cb) throw DomainError("generic system lacks the beta*alpha or gamma*beta rule");
  PbwObstruction out;
  out.inner_first = normal_form(sys, c * g(kGamma) * ba->rhs);
  out.outer_first = normal_form(sys, c * cb->rhs * g(kAlpha));
  const NCPoly diff = out.inner_first - out.outer_first;
  out.at_aad = diff.coeff({kAlpha, kAlpha, kDelta});
  out.at_abg = diff.coeff({kAlpha, kBeta, kGamma});
  return out;
}

Reports pbw_checks() {
  const Regime gen = Regime::generic();
  Reports out;
  Stopwatch sw;
  const PbwObstruction ob = pbw_obstruction_generic();
  const Alphabet a = minkowski_alphabet(gen);
  const NCPoly diff = ob.inner_first - ob.outer_first;
  const std::string values = "alpha*alpha*delta: " + ob.at_aad.to_string() + "; alpha*beta*gamma: " + ob.at_abg.to_string();
  {
    CheckReport rep = make("pbw.obstruction-nonzero", gen, !ob.at_aad.is_zero() && !ob.at_abg.is_zero(),
                           "unexpected zero", sw, values);
    rep.negative_control = true;
    if (rep.passed) rep.residual = values;
    out.push_back(rep);
  }
  {
    bool ok = true;
    for (const auto& [w, c] : diff.terms())
      ok = ok && (w == Word{kAlpha, kAlpha, kDelta} || w == Word{kAlpha, kBeta, kGamma});
    out.push_back(make("pbw.obstruction-support", gen, ok, "difference: " + to_string(diff, a), sw));
  }

  const Scalar q = Scalar::q(), qb = Scalar::qb();
  const Scalar locus = (Scalar(1) - (q * qb).pow(2)) * (qb * qb - q * q);
  Substitution minus_q;
  minus_q.set(Atom::QBar, GaussianRational::i(), LaurentMono::atom(Atom::Q));
  const std::vector<std::pair<std::string, std::function<Scalar(const Scalar&)>>> loci{
      {"unit-circle", [](const Scalar& s) { return specialize(s, Regime::unit_circle()); }},
      {"real-q", [](const Scalar& s) { return specialize(s, Regime::real_q()); }},
      {"qb=-q", [&](const Scalar& s) { return minus_q.apply(s); }}};
  {
    // Dividing out the locus must leave a factor that is finite and nonzero
    // on every locus, so the zero set is exactly the locus.
    std::string bad;
    for (const auto& [name, value] : {std::pair{"alpha*alpha*delta", ob.at_aad}, std::pair{"alpha*beta*gamma", ob.at_abg}}) {
      const Scalar rest = value / locus;
      for (const auto& [where, f] : loci) {
        try {
          if (f(rest).is_zero()) bad = std::string(name) + " cofactor vanishes at " + where;
        } catch (const DivisionByZero&) {
          bad = std::string(name) + " cofactor has a pole at " + where;
        }
      }
    }
    out.push_back(make("pbw.obstruction-factors", gen, bad.empty(), bad, sw,
                       "cofactor at alpha*alpha*delta: " + (ob.at_aad / locus).to_string()));
  }
  {
    std::string bad;
    for (const auto& [where, f] : loci)
      for (const auto& [name, value] : {std::pair{"alpha*alpha*delta", ob.at_aad}, std::pair{"alpha*beta*gamma", ob.at_abg}})
        if (!f(value).is_zero()) bad = std::string(name) + " survives at " + where;
    out.push_back(make("pbw.obstruction-vanishes", gen, bad.empty(), bad, sw, "unit-circle, real-q, qb=-q"));
  }
  {
    const Scalar ratio = ob.at_abg / ob.at_aad;
    const bool ok = ratio.den_factors().empty() && ratio.num().terms().size() == 1;
    out.push_back(make("pbw.same-vanishing-locus", gen, ok, "ratio " + ratio.to_string() + " is not a monomial", sw,
                       "ratio " + ratio.to_string()));
  }
  return out;
}

NCPoly minkowski_length(const Regime& r) {
  const Operators& o = operators(r);
  const TMap ep_bar = compose(bar_conjugate(o.Ep, r), flip<Scalar>(Leg::B, Leg::B));
  const TMap f = compose(kron(o.Ep, ep_bar), place(o.Xinv, {1, 2}, kUBUB));
  return quadratic_form(row_of(f));
}

NCPoly mz_length(const Regime& r) {
  const Alphabet a = minkowski_alphabet(r);
  const Scalar z = specialize(Scalar::q() / Scalar::t(), r);
  const Scalar zb = star(z, r);
  const Scalar half = Scalar::rational(1, 2);
  return g(kAlpha) * g(kDelta) * (half / z) + g(kDelta) * g(kAlpha) * (half / zb) -
         star_poly(a, r, g(kGamma)) * g(kGamma);
}

Reports length_checks(const Regime& r) {
  Reports out;
  if (r.kind() == Regime::Kind::Generic) return out;
  const MinkowskiAlgebra& alg = minkowski(r);
  const Alphabet& a = alg.system.alphabet();
  const NCPoly ell = normal_form(alg.system, minkowski_length(r));
  {
    Stopwatch sw;
    std::string bad;
    for (int j = 0; j < 4 && bad.empty(); ++j) {
      NCPoly c = normal_form(alg.system, commutator(ell, g(j)));
      if (!c.is_zero()) bad = "[l," + a.name(j) + "] -> " + to_string(c, a);
    }
    out.push_back(make("length.central", r, bad.empty(), bad, sw, "l = " + to_string(ell, a)));
  }
  {
    Stopwatch sw;
    NCPoly s = normal_form(alg.system, star_poly(a, r, ell));
    out.push_back(make("length.star-fixed", r, s == ell, "star(l) - l = " + to_string(s - ell, a), sw));
  }
  auto proportional = [&](const std::string& id, const NCPoly& target) {
    Stopwatch sw;
    const NCPoly nt = normal_form(alg.system, target);
    if (nt.is_zero() || ell.is_zero()) {
      out.push_back(make(id, r, false, "zero form", sw));
      return;
    }
    const auto& [w, tc] = *nt.terms().begin();
    const Scalar c = ell.coeff(w) / tc;
    const bool ok = !c.is_zero() && ell == nt * c;
    out.push_back(make(id, r, ok, "not proportional: " + to_string(ell - nt * c, a), sw, "c = " + c.to_string()));
  };
  if (r.kind() == Regime::Kind::UnitCircle) proportional("length.proportional", mz_length(r));
  if (r.kind() == Regime::Kind::Classical)
    proportional("length.classical-form", g(kAlpha) * g(kDelta) - g(kBeta) * g(kGamma));
  return out;
}

std::vector<NCPoly> mz_relations(const Regime& r) {
  const Alphabet a = minkowski_alphabet(r);
  const Scalar z = specialize(Scalar::q() / Scalar::t(), r);
  const Scalar zb = star(z, r);
  const NCPoly al = g(kAlpha), ga = g(kGamma), de = g(kDelta);
  const NCPoly ga_star = star_poly(a, r, ga);
  std::vector<NCPoly> rels{al * ga - z * ga * al, ga * de - z * de * ga,
                           commutator(al, de) - (z - zb) * ga_star * ga};
  const std::size_t n = rels.size();
  for (std::size_t k = 0; k < n; ++k) rels.push_back(star_poly(a, r, rels[k]));
  rels.push_back(ga_star * ga - ga * ga_star);
  return rels;
}

CheckReport mz_presentation_check() {
  const Regime r = Regime::unit_circle();
  Stopwatch sw;
  const ScalarMatrix mz = coefficient_matrix(mz_relations(r));
  const ScalarMatrix table = coefficient_matrix(table_relations(r));
  const bool ok = rank(mz) == 6 && same_row_space(mz, table);
  return make("relations.mz-presentation", r, ok, "z-presentation spans a different space (rank " +
              std::to_string(rank(mz)) + ")", sw);
}

}  // namespace qlorentz
