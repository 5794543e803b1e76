#include "qlorentz/algebras/braided.hpp"

#include <algorithm>

#include "qlorentz/errors.hpp"
#include "qlorentz/intertwiners/checks.hpp"

namespace qlorentz {

using namespace gen;

namespace {

const Signature kUBUB{Leg::U, Leg::B, Leg::U, Leg::B};

NCPoly g(int id) { return NCPoly::gen(id); }

void add_copies(RewriteSystem& sys, const Regime& r, const Scalar& sigma) {
  const RewriteSystem& mink = minkowski(r).system;
  for (const auto& rule : mink.rules()) sys.add_rule(rule);
  for (auto& rule : primed_rules(mink)) sys.add_rule(std::move(rule));
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) sys.add_rule({{xp(j), x(k)}, NCPoly::word({x(k), xp(j)}, sigma)});
}

std::size_t h_degree(const Word& w) { return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), is_h)); }

std::string first_term(const NCPoly& p, const Alphabet& a) {
  const auto& [w, c] = *p.terms().begin();
  return to_string(w, a) + " with coefficient " + c.to_string();
}

}  // namespace

RewriteSystem braiding_system(const Regime& r, const Scalar& sigma) {
  RewriteSystem sys(full_alphabet(r), r);
  add_copies(sys, r, specialize(sigma, r));
  return sys;
}

RewriteSystem braided_system(const Regime& r, const Scalar& sigma) {
  RewriteSystem sys = braiding_system(r, sigma);
  const TMap& W = operators(r).W[0];
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k)
      for (int l = 0; l < 4; ++l) {
        NCPoly rhs;
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) rhs.add({h(a, l), x(b)}, W(4 * j + k, 4 * a + b));
        sys.add_rule({{x(j), h(k, l)}, std::move(rhs)});
        sys.add_rule({{xp(j), h(k, l)}, NCPoly::word({h(k, l), xp(j)})});
      }
  return sys;
}

const std::vector<std::string>& delta_certificates() {
  static const std::vector<std::string> ids{"crossed.xh-matrix.first", "delta.pminus-morphism"};
  return ids;
}

CheckReport pminus_morphism(const Regime& r) {
  Stopwatch sw;
  const Operators& o = operators(r);
  const Scalar q = Scalar::q();
  const TMap p = compose(o.E, o.Ep) * specialize(Scalar(-1) / (q + q.inverse()), r);
  const TMap pp = TMap::identity(p.in_sig()) - p;
  const TMap block = kron(pp, tau_conjugate(p, r)) + kron(p, tau_conjugate(pp, r));
  const TMap rebuilt = chain<Scalar>(kUBUB, {{&o.Xinv, {1, 2}}, {&block, {0, 1, 2, 3}}, {&o.X, {1, 2}}});
  return expect_equal("delta.pminus-morphism", r, rebuilt, o.Pminus, 0.0, sw);
}

Reports delta_certificate_checks(const Regime& r) {
  Reports out;
  for (auto& rep : crossed_identities(exact_context(r), Variant::First))
    if (rep.check_id == "crossed.xh-matrix.first") out.push_back(std::move(rep));
  out.push_back(pminus_morphism(r));
  return out;
}

CheckReport braided_delta_check(const Regime& r, const Scalar& sigma_in, const Reports& certificates,
                                std::string id) {
  for (const auto& need : delta_certificates()) {
    const bool ok = std::any_of(certificates.begin(), certificates.end(), [&](const CheckReport& c) {
      return c.check_id == need && c.regime == r.name() && c.passed;
    });
    if (!ok) throw OracleUnverified("substitution not certified: " + need + " in regime " + r.name());
  }
  Stopwatch sw;
  const Scalar sigma = specialize(sigma_in, r);
  const Operators& o = operators(r);
  const TMap& P = o.Pminus;
  const TMap shifted = compose(P, o.W[0] + TMap::identity(kUBUB) * sigma);
  const RewriteSystem sys = braided_system(r, sigma);
  const Alphabet& a = sys.alphabet();
  RewriteSystem commute(a, r);
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 16; ++k) commute.add_rule({{xp(j), h(k / 4, k % 4)}, NCPoly::word({h(k / 4, k % 4), xp(j)})});

  std::array<NCPoly, 4> dx;
  for (int j = 0; j < 4; ++j) {
    dx[j] = g(x(j));
    for (int l = 0; l < 4; ++l) dx[j] += g(h(j, l)) * g(xp(l));
  }

  CheckReport rep = new_report(std::move(id), r);
  int rows = 0;
  std::string failure, script_error;
  for (int i = 0; i < 16 && script_error.empty(); ++i) {
    bool zero_row = true;
    for (int c = 0; c < 16; ++c) zero_row = zero_row && P(i, c).is_zero();
    if (zero_row) continue;
    ++rows;
    std::array<NCPoly, 3> part;
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        const Scalar& c = P(i, 4 * j + k);
        if (c.is_zero()) continue;
        const NCPoly term = dx[j] * dx[k];
        for (const auto& [w, v] : term.terms()) part[h_degree(w)].add(w, c * v);
      }
    const std::string row = "row " + std::to_string(i) + ", ";

    const NCPoly xx = normal_form(sys, part[0]);
    if (!xx.is_zero() && failure.empty()) failure = row + "x x part: " + first_term(xx, a);

    // Pminus h_1 h_2 x'_1 x'_2 => h_1 h_2 Pminus x'_1 x'_2
    NCPoly pattern, substituted;
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
          for (int m = 0; m < 4; ++m) {
            pattern.add({h(j, l), h(k, m), xp(l), xp(m)}, P(i, 4 * j + k));
            substituted.add({h(i / 4, j), h(i % 4, k), xp(l), xp(m)}, P(4 * j + k, 4 * l + m));
          }
    if (normal_form(commute, part[2]) != pattern) script_error = row + "h h part does not match Pminus h_1 h_2";
    const NCPoly hh = normal_form(sys, substituted);
    if (!hh.is_zero() && failure.empty()) failure = row + "h h part: " + first_term(hh, a);

    NCPoly predicted;
    for (int b = 0; b < 16; ++b)
      for (int c = 0; c < 4; ++c) predicted.add({h(b / 4, c), x(b % 4), xp(c)}, shifted(i, b));
    const NCPoly linear = normal_form(sys, part[1]);
    if (linear != predicted) script_error = row + "linear part differs from Pminus (W + sigma)";
    if (!linear.is_zero() && failure.empty()) failure = row + "linear part: " + first_term(linear, a);
  }
  rep.detail = std::to_string(rows) + " rows reduced, sigma = " + sigma.to_string();
  if (!script_error.empty()) failure = script_error;
  rep.passed = failure.empty();
  if (!rep.passed) rep.residual = failure;
  rep.elapsed_ms = sw.ms();
  return rep;
}

Reports delta_checks(const Regime& r) {
  Reports out;
  const bool uc = r.kind() == Regime::Kind::UnitCircle;
  if (!uc && r.kind() != Regime::Kind::Classical) return out;
  const Reports certs = delta_certificate_checks(r);
  out.push_back(certs.back());
  const Scalar sigma = uc ? Scalar::q(-1) : Scalar(1);
  out.push_back(braided_delta_check(r, sigma, certs));
  if (uc) {
    CheckReport neg = braided_delta_check(r, Scalar(1), certs, "delta.sigma-one-breaks");
    neg.negative_control = true;
    neg.passed = neg.residual.has_value() && neg.residual->find("linear part:") != std::string::npos;
    if (!neg.residual) neg.residual = "unexpected zero";
    out.push_back(neg);
  }
  {
    Stopwatch sw;
    const RewriteSystem sys = braiding_system(r, sigma);
    const auto obs = check_confluence(sys);
    CheckReport rep = new_report("delta.braiding-confluence", r, obs.empty());
    if (!obs.empty()) rep.residual = to_string(obs.front().overlap, sys.alphabet()) + ": " +
                                     to_string(obs.front().difference, sys.alphabet());
    rep.elapsed_ms = sw.ms();
    out.push_back(rep);
  }
  return out;
}

}  // namespace qlorentz
