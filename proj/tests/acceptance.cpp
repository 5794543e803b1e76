// One line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "qlorentz/algebras/braided.hpp"
#include "qlorentz/algebras/crossed.hpp"
#include "qlorentz/algebras/minkowski.hpp"
#include "qlorentz/cli/suites.hpp"
#include "qlorentz/intertwiners/checks.hpp"
#include "qlorentz/rewrite/system.hpp"

using namespace qlorentz;

namespace {

constexpr double kNumericTol = 1e-9;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  // Every report passes and every required id is present.
  void require(const Reports& reps, std::initializer_list<std::string> ids = {}) {
    std::set<std::string> seen;
    for (const auto& r : reps) {
      seen.insert(r.check_id);
      if (!r.passed) fail(r.regime + ": " + r.check_id + " failed" + (r.residual ? " (" + *r.residual + ")" : ""));
    }
    for (const auto& id : ids)
      if (!seen.count(id)) fail("missing " + id);
  }
};

const std::vector<Regime>& all_regimes() {
  static const std::vector<Regime> rs{Regime::generic(), Regime::unit_circle(), Regime::real_q(),
                                      Regime::case2(1),  Regime::case2(-1),     Regime::classical()};
  return rs;
}

int failures = 0;

void criterion(int n, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && s > limit_s) o.fail("took " + std::to_string(s) + " s");
  if (!o.ok) ++failures;
  std::printf("[%s] %2d %-28s %8.3f s", o.ok ? "PASS" : "FAIL", n, name, s);
  if (limit_s > 0) std::printf(" (limit %g s)", limit_s);
  if (!o.detail.empty()) std::printf("  %s", o.detail.c_str());
  std::printf("\n");
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const Regime generic = Regime::generic(), uc = Regime::unit_circle(), realq = Regime::real_q();

  criterion(1, "elementary-moves", 1.0, [&] {
    Outcome o;
    o.require(run_suite(generic, Suite::Moves),
              {"move.m-through-x", "move.k-through-x", "move.k-past-x-pair", "move.k-past-xinv-pair",
               "move.m-past-x-pair", "move.m-past-xinv-pair", "move.m-past-x-pair.perturbed-x"});
    return o;
  });

  criterion(2, "braid-equation", 10.0, [&] {
    Outcome o;
    for (const auto& r : all_regimes())
      o.require(braid(exact_context(r)), {"braid.rhat-plus", "braid.rhat-minus", "braid.rhat-plus-inverse",
                                          "braid.rhat-minus-inverse", "braid.inverses"});
    return o;
  });

  criterion(3, "spectral", 0, [&] {
    Outcome o;
    const std::initializer_list<std::string> common{"spectral.decomposition", "spectral.pminus-idempotent",
                                                    "spectral.pminus-trace", "spectral.projections"};
    o.require(run_suite(generic, Suite::Spectral), common);
    o.require(run_suite(uc, Suite::Spectral), {"spectral.unit-circle-decomposition", "spectral.what-eigenstructure"});
    for (const auto& r : {realq, Regime::case2(1), Regime::case2(-1)})
      o.require(run_suite(r, Suite::Spectral), {"spectral.real-q-decomposition"});
    return o;
  });

  criterion(4, "selection-rule", 0, [&] {
    Outcome o;
    o.require(pbw_checks(), {"pbw.obstruction-nonzero", "pbw.obstruction-factors", "pbw.obstruction-vanishes",
                             "pbw.same-vanishing-locus"});
    const PbwObstruction ob = pbw_obstruction_generic();
    if (ob.at_aad.is_zero()) o.fail("obstruction at alpha*alpha*delta is zero");
    o.detail = "ratio of coefficients " + (ob.at_abg / ob.at_aad).to_string();
    return o;
  });

  criterion(5, "confluence-pbw", 0, [&] {
    Outcome o;
    for (const auto& r : {uc, realq, Regime::case2(1), Regime::case2(-1)}) {
      const RewriteSystem& sys = minkowski(r).system;
      if (!check_confluence(sys).empty()) o.fail(r.name() + ": obstruction found");
      const std::size_t expect[] = {1, 4, 10, 20, 35};
      for (std::size_t d = 0; d <= 4; ++d)
        if (count_normal_words(sys, d) != expect[d]) o.fail(r.name() + ": wrong count in degree " + std::to_string(d));
    }
    return o;
  });

  criterion(6, "relation-integrity", 0, [&] {
    Outcome o;
    for (const auto& r : all_regimes()) {
      Reports reps;
      for (auto& rep : relation_checks(r))
        if (rep.check_id == "relations.span-equality") reps.push_back(rep);
      o.require(reps, {"relations.span-equality"});
    }
    return o;
  });

  criterion(7, "crossed-product", 0, [&] {
    Outcome o;
    for (const auto& r : all_regimes())
      o.require(run_suite(r, Suite::Crossed),
                {"crossed.sse.first", "crossed.sse.second", "crossed.tte.first", "crossed.tte.second",
                 "crossed.sse.non-solution", "crossed.x-t-tprime.first", "crossed.x-t-tprime.second",
                 "crossed.rhat-t-t-plus.first", "crossed.rhat-t-t-minus.second", "crossed.xh-matrix.first",
                 "crossed.xh-matrix.second", "crossed.star-involution.first", "crossed.star-involution.second"});
    return o;
  });

  criterion(8, "braided-compatibility", 0, [&] {
    Outcome o;
    o.require(run_suite(uc, Suite::Compat), {"compat.sigma-inverse-q", "compat.sigma-one-nonzero",
                                             "compat.sigma-one-root-locus"});
    o.require(run_suite(uc, Suite::Delta),
              {"delta.preserves-relations", "delta.sigma-one-breaks", "delta.pminus-morphism"});
    o.require(run_suite(realq, Suite::Compat), {"compat.no-single-sigma", "compat.candidate-sigmas-fail"});
    return o;
  });

  criterion(9, "minkowski-length", 0, [&] {
    Outcome o;
    const Reports reps = run_suite(uc, Suite::Length);
    o.require(reps, {"length.central", "length.star-fixed", "length.proportional"});
    for (const auto& r : reps)
      if (r.check_id == "length.proportional" && o.ok) o.detail = r.detail;
    return o;
  });

  criterion(10, "classical-limit", 0, [&] {
    Outcome o;
    const Regime cl = Regime::classical();
    o.require(classical_limit(), {"classical.flips", "classical.antisymmetrizers"});
    o.require(run_suite(cl, Suite::All),
              {"relations.commutative", "crossed.classical-commute.first", "crossed.classical-commute.second",
               "compat.classical-sigma-one", "delta.preserves-relations", "length.classical-form"});
    return o;
  });

  criterion(11, "numeric-cross-check", 60.0, [&] {
    Outcome o;
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> angle(0.15, 1.42);
    std::bernoulli_distribution coin;
    std::size_t checks = 0;
    for (int k = 0; k < 5; ++k) {
      const double theta = (coin(rng) ? 1.0 : -1.0) * angle(rng) + (coin(rng) ? 3.141592653589793 : 0.0);
      for (double t : {0.5, 2.0}) {
        const Reports reps = run_numeric(uc, numeric_point(std::polar(1.0, theta), t, uc), kNumericTol);
        checks += reps.size();
        o.require(reps);
      }
    }
    // the whole exact suite in every regime, for the wall-clock bound
    for (const auto& r : all_regimes()) o.require(run_suite(r, Suite::All));
    if (o.ok) o.detail = std::to_string(checks) + " numeric checks below 1e-9";
    return o;
  });

  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of 11 criteria failed, %.3f s total\n", failures, total);
  return failures == 0 ? 0 : 1;
}
