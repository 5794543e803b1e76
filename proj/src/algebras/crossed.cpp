#include "qlorentz/algebras/crossed.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace qlorentz {

using namespace gen;

namespace {

CheckReport make(std::string id, const Regime& r, bool ok, const std::string& residual, const Stopwatch& sw) {
  CheckReport rep = new_report(std::move(id), r, ok);
  if (!ok) rep.residual = residual;
  rep.elapsed_ms = sw.ms();
  return rep;
}

// x^{AB} y^C_D -> sum m[(A,B,C),(E,K,L)] y^E_D x^{KL} for y = u or ub.
void add_cross_rules(RewriteSystem& sys, const TMap& m, int (*y)(int, int)) {
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          NCPoly rhs;
          for (int e = 0; e < 2; ++e)
            for (int k = 0; k < 2; ++k)
              for (int l = 0; l < 2; ++l) rhs.add({y(e, d), x(k, l)}, m(4 * a + 2 * b + c, 4 * e + 2 * k + l));
          sys.add_rule({{x(a, b), y(c, d)}, std::move(rhs)});
        }
}

bool mixed_shape(const Word& w) {
  // (u|ub)* x*
  std::size_t k = 0;
  while (k < w.size() && (is_u(w[k]) || is_ub(w[k]))) ++k;
  for (; k < w.size(); ++k)
    if (!is_x(w[k])) return false;
  return true;
}

}  // namespace

RewriteSystem crossed_system(const Regime& r, const TMap& T, const TMap& Tp) {
  RewriteSystem sys(full_alphabet(r), r);
  for (const auto& rule : minkowski(r).system.rules()) sys.add_rule(rule);
  add_cross_rules(sys, T, u);
  add_cross_rules(sys, Tp, ub);
  return sys;
}

RewriteSystem crossed_system(const Regime& r, Variant v) {
  const Operators& o = operators(r);
  return crossed_system(r, o.T[index(v)], o.Tp[index(v)]);
}

const RewriteSystem& crossed(const Regime& r, Variant v) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, std::unique_ptr<RewriteSystem>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{r.name(), static_cast<int>(index(v))}];
  if (!slot) slot = std::make_unique<RewriteSystem>(crossed_system(r, v));
  return *slot;
}

NCPoly crossed_reduce(const NCPoly& p, const Regime& r, Variant v) { return normal_form(crossed(r, v), p); }

NCPoly crossed_star(const NCPoly& p, const RewriteSystem& sys) {
  return normal_form(sys, star_poly(sys.alphabet(), sys.regime(), p));
}

NCPoly crossed_star(const NCPoly& p, const Regime& r, Variant v) { return crossed_star(p, crossed(r, v)); }

std::optional<std::string> star_involution_residual(const RewriteSystem& sys) {
  const Alphabet& a = sys.alphabet();
  for (int y = u(0, 0); y <= ub(1, 1); ++y)
    for (int j = 0; j < 4; ++j) {
      const NCPoly p = NCPoly::word({y, x(j)});
      const NCPoly back = crossed_star(crossed_star(p, sys), sys);
      if (back != p) return to_string(p, a) + " -> " + to_string(back, a);
    }
  return std::nullopt;
}

Reports crossed_checks(const Regime& r, Variant v) {
  Reports out;
  const std::string suffix = "." + to_string(v);
  const RewriteSystem& sys = crossed(r, v);
  const Alphabet& a = sys.alphabet();
  std::vector<int> ys;
  for (int k = 0; k < 4; ++k) ys.push_back(u(k / 2, k % 2));
  for (int k = 0; k < 4; ++k) ys.push_back(ub(k / 2, k % 2));
  {
    Stopwatch sw;
    const std::string bad = star_involution_residual(sys).value_or("");
    out.push_back(make("crossed.star-involution" + suffix, r, bad.empty(), bad, sw));
  }
  {
    Stopwatch sw;
    std::string bad;
    for (int y : ys)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4 && bad.empty(); ++k) {
          const NCPoly p = NCPoly::word({x(j), x(k), y});
          const NCPoly nf = crossed_reduce(p, r, v);
          for (const auto& [w, c] : nf.terms())
            if (!mixed_shape(w) || !is_normal(sys, w)) bad = to_string(p, a) + " leaves " + to_string(w, a);
        }
    out.push_back(make("crossed.reduce-shape" + suffix, r, bad.empty(), bad, sw));
  }
  if (r.kind() == Regime::Kind::Classical) {
    Stopwatch sw;
    std::string bad;
    for (int y : ys)
      for (int j = 0; j < 4 && bad.empty(); ++j) {
        const NCPoly nf = crossed_reduce(NCPoly::word({x(j), y}), r, v);
        if (nf != NCPoly::word({y, x(j)})) bad = a.name(x(j)) + "*" + a.name(y) + " -> " + to_string(nf, a);
      }
    out.push_back(make("crossed.classical-commute" + suffix, r, bad.empty(), bad, sw));
  }
  return out;
}

}  // namespace qlorentz
