#include <cmath>
#include <random>

#include "doctest.h"
#include "qlorentz/errors.hpp"
#include "qlorentz/intertwiners/checks.hpp"
#include "qlorentz/tensor/linalg.hpp"

using namespace qlorentz;

namespace {

const Scalar q = Scalar::q();
const Scalar t = Scalar::t();

void require_all_pass(const Reports& reps) {
  REQUIRE(!reps.empty());
  for (const auto& r : reps) {
    INFO(r.check_id << " [" << r.regime << "] " << r.residual.value_or("") << " " << r.detail);
    CHECK(r.passed);
  }
}

std::vector<Regime> all_regimes() {
  return {Regime::generic(), Regime::unit_circle(), Regime::real_q(), Regime::case2(1), Regime::case2(-1),
          Regime::classical()};
}

}  // namespace

TEST_CASE("named operators") {
  const Regime gen = Regime::generic();
  TMap E = build("E", gen);
  CHECK(E.in_sig().empty());
  CHECK(E(1, 0) == Scalar(1));
  CHECK(E(2, 0) == -q);
  CHECK(E(0, 0).is_zero());
  CHECK(E(3, 0).is_zero());

  TMap X = build("X", gen);
  CHECK(X.in_sig() == Signature{Leg::U, Leg::B});
  CHECK(X.out_sig() == Signature{Leg::B, Leg::U});
  // e2 (x) e1bar -> t^-1 e1bar (x) e2
  CHECK(X(1, 2) == t.inverse());
  CHECK(substitute(X, Substitution().set(Atom::T, GaussianRational(1))) == flip<Scalar>(Leg::U, Leg::B));
  // case 2: e2 (x) e2bar -> e2bar (x) e2 + eps e1bar (x) e1
  TMap X2 = build("X", Regime::case2(-1));
  CHECK(X2(3, 3) == Scalar(1));
  CHECK(X2(0, 3) == Scalar(-1));

  CHECK(compose(build("X", gen), build("X^-1", gen)) == TMap::identity({Leg::B, Leg::U}));
  CHECK(compose(build("M", gen), E) == E * (-q.inverse()));
  CHECK(build("T", gen).in_sig() == Signature{Leg::U, Leg::U, Leg::B});
  CHECK(build("T", gen).out_sig() == Signature{Leg::U, Leg::B, Leg::U});
  CHECK(build("T'", gen).in_sig() == Signature{Leg::B, Leg::U, Leg::B});
  CHECK(build("T'", gen).out_sig() == Signature{Leg::U, Leg::B, Leg::B});
  CHECK(build("S", gen, Variant::Second) == build("M^-1", gen) * Scalar::atom(Atom::Q, 1));
  CHECK(build("What", Regime::unit_circle()) == build("Rhat-", Regime::unit_circle()) * q.inverse());
  CHECK(build("What", Regime::real_q()) == build("Rhat-", Regime::real_q()));
  for (const auto& name : operator_names()) CHECK_NOTHROW(build(name, gen));
  CHECK_THROWS_AS(build("Y", gen), UnknownName);
  CHECK_THROWS_AS(Regime::case2(0), MissingParameter);
}

TEST_CASE("Rhat against an index-sum oracle") {
  // Rhat+ = X_23 (M_12 K_34) X^-1_23 assembled entry by entry at a numeric
  // point from the matrices themselves.
  const Regime gen = Regime::generic();
  const NumericPoint p = numeric_point({0.3, 1.1}, 0.7, gen);
  const NumOperators o = numeric_operators(gen, p);
  auto at = [](const NumMap& m, int r0, int r1, int c0, int c1) { return m(2 * r0 + r1, 2 * c0 + c1); };
  double worst = 0;
  for (int out = 0; out < 16; ++out) {
    for (int in = 0; in < 16; ++in) {
      const int a = in >> 3 & 1, b = in >> 2 & 1, c = in >> 1 & 1, d = in & 1;
      const int A = out >> 3 & 1, B = out >> 2 & 1, C = out >> 1 & 1, D = out & 1;
      std::complex<double> sum = 0;
      // X^-1: (b, c) -> (u, v); M: (a, u) -> (A, m); K: (v, d) -> (k, D);
      // X: (m, k) -> (B, C).
      for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v)
          for (int m2 = 0; m2 < 2; ++m2)
            for (int k1 = 0; k1 < 2; ++k1)
              sum += at(o.X, B, C, m2, k1) * at(o.M, A, m2, a, u) * at(o.K, k1, D, v, d) * at(o.Xinv, u, v, b, c);
      worst = std::max(worst, std::abs(sum - o.Rplus(out, in)));
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("elementary moves") {
  for (const Regime& r : all_regimes()) {
    INFO(r.name());
    require_all_pass(elementary_moves(exact_context(r)));
  }
  for (const Regime& r : {Regime::generic(), Regime::unit_circle(), Regime::real_q()}) {
    CheckReport neg = moves_negative_control(exact_context(r));
    CHECK(neg.passed);
    CHECK(neg.negative_control);
    CHECK(neg.residual.has_value());
  }
}

TEST_CASE("braid equation") { require_all_pass(braid(exact_context(Regime::generic()))); }

TEST_CASE("spectral") {
  for (const Regime& r : all_regimes()) {
    INFO(r.name());
    require_all_pass(spectral(exact_context(r)));
  }
}

TEST_CASE("translation compatibility") {
  for (const Regime& r : all_regimes()) {
    INFO(r.name());
    require_all_pass(translation_compat(r));
  }
  require_all_pass(classical_limit());
}

TEST_CASE("crossed identities") {
  for (const Regime& r : all_regimes()) {
    INFO(r.name());
    auto c = exact_context(r);
    require_all_pass(crossed_identities(c, Variant::First));
    require_all_pass(crossed_identities(c, Variant::Second));
    require_all_pass({x_e_shuttle(c), sse_negative_control(c), x_normalization(r), s_uniqueness(r)});
  }
}

TEST_CASE("braid check detects a perturbed matrix") {
  const Regime gen = Regime::generic();
  Operators bad = operators(gen);
  bad.Rplus(0, 5) += Scalar(1);
  Reports reps = braid(ExactContext{bad, gen, 0.0, [](const Scalar& s) { return s; }});
  CHECK_FALSE(reps[0].passed);
  CHECK(reps[0].residual.has_value());
  CHECK(reps[1].passed);
}

TEST_CASE("translation report details") {
  bool saw_locus = false;
  for (const auto& r : translation_compat(Regime::generic())) {
    if (r.check_id != "compat.sigma-one-root-locus") continue;
    saw_locus = true;
    CHECK(r.detail.find("divisible by q^2 - 1") != std::string::npos);
  }
  CHECK(saw_locus);
  auto j = to_json(s_uniqueness(Regime::generic()));
  CHECK(j["status"] == "pass");
  CHECK(j["check_id"] == "crossed.s-uniqueness");
  CHECK(j.contains("elapsed_ms"));
  CHECK_FALSE(j.contains("residual"));
}

TEST_CASE("numeric evaluation of the identities") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> angle(0.2, 3.0);
  const Regime uc = Regime::unit_circle();
  for (int k = 0; k < 3; ++k) {
    for (double tv : {0.5, 2.0}) {
      const NumericPoint p = numeric_point(std::polar(1.0, angle(rng)), tv, uc);
      const NumOperators o = numeric_operators(uc, p);
      const NumericContext c = numeric_context(o, uc, p, 1e-9);
      require_all_pass(elementary_moves(c));
      require_all_pass(braid(c));
      require_all_pass(spectral(c));
      require_all_pass(crossed_identities(c, Variant::First));
      require_all_pass(crossed_identities(c, Variant::Second));
      require_all_pass({x_e_shuttle(c), braided_sigma(c), sse_negative_control(c), moves_negative_control(c)});
    }
  }
}

TEST_CASE("half-power sign choices leave the checks unchanged") {
  // q^{1/2} and qb^{1/2} are conjugates, so their signs flip together.
  const Regime gen = Regime::generic();
  const Substitution both = Substitution()
                                .set(Atom::Q, GaussianRational(-1), LaurentMono::atom(Atom::Q, 1))
                                .set(Atom::QBar, GaussianRational(-1), LaurentMono::atom(Atom::QBar, 1));
  for (const Substitution& s : {both, Substitution::flip(Atom::T)}) {
    const Operators flipped = operators(gen).transform([&](const TMap& m) { return substitute(m, s); });
    const ExactContext c{flipped, gen, 0.0, [](const Scalar& x) { return x; }};
    require_all_pass(elementary_moves(c));
    require_all_pass(crossed_identities(c, Variant::First));
    require_all_pass(crossed_identities(c, Variant::Second));
    require_all_pass({x_e_shuttle(c), moves_negative_control(c), sse_negative_control(c)});
  }
}

TEST_CASE("vector components") {
  const Regime gen = Regime::generic();
  const Operators& o = operators(gen);
  const TMap id = TMap::identity({Leg::U, Leg::B});
  CHECK(vector_components(id, o) == id);
  const TMap pm = vector_components(o.Pminus, o);
  CHECK(compose(pm, pm) == pm);
  CHECK(trace(pm) == Scalar(6));
  CHECK_THROWS_AS(vector_components(o.M, o), SignatureMismatch);

  // h = u (x) conj(u) for a unitary u has real Pauli components.
  const NumericPoint p = numeric_point({1.0, 0.0}, 1.0, gen);
  const NumOperators no = numeric_operators(gen, p);
  std::mt19937 rng(9);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 5; ++trial) {
    std::complex<double> a(g(rng), g(rng)), b(g(rng), g(rng));
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    a /= n;
    b /= n;
    NumMap u({Leg::U}, {Leg::U});
    u(0, 0) = a, u(0, 1) = -std::conj(b), u(1, 0) = b, u(1, 1) = std::conj(a);
    NumMap ub({Leg::B}, {Leg::B});
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) ub(r, c) = std::conj(u(r, c));
    const NumMap h = vector_components(kron(u, ub), no);
    double imag = 0;
    for (const auto& e : h.entries()) imag = std::max(imag, std::abs(e.imag()));
    CHECK(imag < 1e-12);
  }
}
