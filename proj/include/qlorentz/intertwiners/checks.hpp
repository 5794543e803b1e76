#pragma once

#include <functional>
#include <map>
#include <tuple>

#include "qlorentz/intertwiners/operators.hpp"
#include "qlorentz/intertwiners/report.hpp"

namespace qlorentz {

/// Everything a matrix-identity check needs: the operators, the regime, the
/// comparison tolerance (ignored in exact arithmetic) and a way to turn a
/// symbolic coefficient into an entry value.
template <class T>
struct CheckContext {
  const BasicOperators<T>& ops;
  Regime regime;
  double tol = 0.0;
  std::function<T(const Scalar&)> lift;
};

using ExactContext = CheckContext<Scalar>;
using NumericContext = CheckContext<std::complex<double>>;

ExactContext exact_context(const Regime& r);
NumericContext numeric_context(const NumOperators& ops, const Regime& r, const NumericPoint& p, double tol);

namespace detail {

inline const Signature& sig(std::string_view legs) {
  static thread_local std::map<std::string, Signature, std::less<>> cache;
  auto it = cache.find(legs);
  if (it != cache.end()) return it->second;
  Signature s;
  for (char c : legs) s.push_back(c == 'U' ? Leg::U : Leg::B);
  return cache.emplace(std::string(legs), s).first->second;
}

// Inserts a vector (map from the empty signature) at output positions.
template <class T>
BasicTMap<T> insert(const BasicTMap<T>& v, std::initializer_list<int> out, const Signature& ambient) {
  static const std::vector<int> none;
  return place(v, std::span<const int>(none), ambient, std::span<const int>(out.begin(), out.size()));
}

// X_23 (A_12 B_34) X^-1_23 on (U,B,U,B).
template <class T>
BasicTMap<T> conj_x(const BasicOperators<T>& o, const BasicTMap<T>& a, const BasicTMap<T>& b) {
  return chain<T>(sig("UBUB"), {{&o.Xinv, {1, 2}}, {&a, {0, 1}}, {&b, {2, 3}}, {&o.X, {1, 2}}});
}

// Exchange of the two (U,B) pairs of (U,B,U,B).
template <class T>
BasicTMap<T> bold_flip() {
  static const BasicTMap<T> bu = flip<T>(Leg::B, Leg::U);
  static const BasicTMap<T> uu = flip<T>(Leg::U, Leg::U);
  static const BasicTMap<T> bb = flip<T>(Leg::B, Leg::B);
  static const BasicTMap<T> ub = flip<T>(Leg::U, Leg::B);
  return chain<T>(sig("UBUB"), {{&bu, {1, 2}}, {&uu, {0, 1}}, {&bb, {2, 3}}, {&ub, {1, 2}}});
}

// Merges several sub-identities into one report; the first failure wins.
inline CheckReport merge(std::string id, const Regime& r, const Reports& parts, const Stopwatch& sw) {
  CheckReport out = new_report(std::move(id), r, true);
  for (const auto& p : parts) {
    if (!p.passed && out.passed) {
      out.passed = false;
      out.residual = p.check_id + ": " + p.residual.value_or("unexpected zero");
    }
  }
  out.elapsed_ms = sw.ms();
  return out;
}

}  // namespace detail

/// The six local moves of X, X^-1, M and K^{+-1} that make the braid
/// equation for Rhat hold. Moves involving K are checked for both signs.
template <class T>
Reports elementary_moves(const CheckContext<T>& c) {
  using detail::sig;
  const auto& o = c.ops;
  const auto& R = c.regime;
  Reports out;
  {
    Stopwatch sw;
    auto lhs = chain<T>(sig("UBU"), {{&o.X, {0, 1}}, {&o.M, {1, 2}}, {&o.Xinv, {0, 1}}});
    auto rhs = chain<T>(sig("UBU"), {{&o.Xinv, {1, 2}}, {&o.M, {0, 1}}, {&o.X, {1, 2}}});
    out.push_back(expect_equal("move.m-through-x", R, lhs, rhs, c.tol, sw));
  }
  {
    Stopwatch sw;
    Reports parts;
    for (const auto* k : {&o.K, &o.Kinv}) {
      auto lhs = chain<T>(sig("BBU"), {{k, {0, 1}}, {&o.Xinv, {1, 2}}, {&o.Xinv, {0, 1}}});
      auto rhs = chain<T>(sig("BBU"), {{&o.Xinv, {1, 2}}, {&o.Xinv, {0, 1}}, {k, {1, 2}}});
      parts.push_back(expect_equal(k == &o.K ? "K" : "K^-1", R, lhs, rhs, c.tol, sw));
    }
    out.push_back(detail::merge("move.k-past-xinv-pair", R, parts, sw));
  }
  {
    Stopwatch sw;
    Reports parts;
    for (const auto* k : {&o.K, &o.Kinv}) {
      auto lhs = chain<T>(sig("UBB"), {{&o.X, {0, 1}}, {&o.X, {1, 2}}, {k, {0, 1}}});
      auto rhs = chain<T>(sig("UBB"), {{k, {1, 2}}, {&o.X, {0, 1}}, {&o.X, {1, 2}}});
      parts.push_back(expect_equal(k == &o.K ? "K" : "K^-1", R, lhs, rhs, c.tol, sw));
    }
    out.push_back(detail::merge("move.k-past-x-pair", R, parts, sw));
  }
  {
    Stopwatch sw;
    auto lhs = chain<T>(sig("BUU"), {{&o.Xinv, {0, 1}}, {&o.Xinv, {1, 2}}, {&o.M, {0, 1}}});
    auto rhs = chain<T>(sig("BUU"), {{&o.M, {1, 2}}, {&o.Xinv, {0, 1}}, {&o.Xinv, {1, 2}}});
    out.push_back(expect_equal("move.m-past-xinv-pair", R, lhs, rhs, c.tol, sw));
  }
  {
    Stopwatch sw;
    auto lhs = chain<T>(sig("UUB"), {{&o.M, {0, 1}}, {&o.X, {1, 2}}, {&o.X, {0, 1}}});
    auto rhs = chain<T>(sig("UUB"), {{&o.X, {1, 2}}, {&o.X, {0, 1}}, {&o.M, {1, 2}}});
    out.push_back(expect_equal("move.m-past-x-pair", R, lhs, rhs, c.tol, sw));
  }
  {
    Stopwatch sw;
    Reports parts;
    for (const auto* k : {&o.K, &o.Kinv}) {
      auto lhs = chain<T>(sig("BUB"), {{&o.Xinv, {0, 1}}, {k, {1, 2}}, {&o.X, {0, 1}}});
      auto rhs = chain<T>(sig("BUB"), {{&o.X, {1, 2}}, {k, {0, 1}}, {&o.Xinv, {1, 2}}});
      parts.push_back(expect_equal(k == &o.K ? "K" : "K^-1", R, lhs, rhs, c.tol, sw));
    }
    out.push_back(detail::merge("move.k-through-x", R, parts, sw));
  }
  return out;
}

/// X with a spurious e2 (x) e2bar -> e1bar (x) e1 term must break the
/// M-past-X-pair move whenever t and q are independent.
template <class T>
CheckReport moves_negative_control(const CheckContext<T>& c) {
  using detail::sig;
  Stopwatch sw;
  auto bad = c.ops.X;
  bad(0, 3) += T(1);
  auto lhs = chain<T>(sig("UUB"), {{&c.ops.M, {0, 1}}, {&bad, {1, 2}}, {&bad, {0, 1}}});
  auto rhs = chain<T>(sig("UUB"), {{&bad, {1, 2}}, {&bad, {0, 1}}, {&c.ops.M, {1, 2}}});
  return expect_different("move.m-past-x-pair.perturbed-x", c.regime, lhs, rhs, c.tol, sw);
}

/// Braid equation on three (U,B) pairs for Rhat+-, their inverses, and the
/// Yang-Baxter form with R = tau Rhat.
template <class T>
Reports braid(const CheckContext<T>& c) {
  using detail::sig;
  const auto& o = c.ops;
  const Signature& six = sig("UBUBUB");
  const std::vector<int> b12 = bold({0, 1}), b23 = bold({1, 2}), b13 = bold({0, 2});
  Reports out;
  const std::array<std::pair<const char*, const BasicTMap<T>*>, 4> mats{
      {{"plus", &o.Rplus}, {"minus", &o.Rminus}, {"plus-inverse", &o.Rplus_inv}, {"minus-inverse", &o.Rminus_inv}}};
  for (const auto& [name, r] : mats) {
    Stopwatch sw;
    auto lhs = chain<T>(six, {{r, b12}, {r, b23}, {r, b12}});
    auto rhs = chain<T>(six, {{r, b23}, {r, b12}, {r, b23}});
    out.push_back(expect_equal(std::string("braid.rhat-") + name, c.regime, lhs, rhs, c.tol, sw));
  }
  const BasicTMap<T> tau = detail::bold_flip<T>();
  for (const auto& [name, r] : {mats[0], mats[1]}) {
    Stopwatch sw;
    const BasicTMap<T> R = compose(tau, *r);
    auto lhs = chain<T>(six, {{&R, b23}, {&R, b13}, {&R, b12}});
    auto rhs = chain<T>(six, {{&R, b12}, {&R, b13}, {&R, b23}});
    out.push_back(expect_equal(std::string("braid.yang-baxter-") + name, c.regime, lhs, rhs, c.tol, sw));
  }
  {
    Stopwatch sw;
    const auto id = BasicTMap<T>::identity(sig("UBUB"));
    Reports parts{expect_equal("plus", c.regime, compose(o.Rplus, o.Rplus_inv), id, c.tol, sw),
                  expect_equal("minus", c.regime, compose(o.Rminus, o.Rminus_inv), id, c.tol, sw)};
    out.push_back(detail::merge("braid.inverses", c.regime, parts, sw));
  }
  return out;
}

/// Spectral decompositions of Rhat+-, idempotents, and (on the unit circle)
/// the eigen-structure of the x-h matrix W.
template <class T>
Reports spectral(const CheckContext<T>& c) {
  using detail::conj_x;
  using detail::sig;
  const auto& o = c.ops;
  const auto& R = c.regime;
  const T q = c.lift(Scalar::q()), qi = c.lift(Scalar::q(-1));
  const T qb = c.lift(Scalar::qb()), qbi = c.lift(Scalar::qb(-1));
  const T one(1);
  Reports out;

  const auto pq = conj_x(o, o.Pp, o.Qp);    // P' (x) Q'
  const auto PQ = conj_x(o, o.P, o.Q);      // P (x) Q
  const auto pQ = conj_x(o, o.Pp, o.Q);     // P' (x) Q
  const auto Pq = conj_x(o, o.P, o.Qp);     // P (x) Q'
  {
    Stopwatch sw;
    auto plus = pq * (q * qb) + PQ * (qi * qbi) - pQ * (q * qbi) - Pq * (qi * qb);
    auto minus = pq * (q * qbi) + PQ * (qi * qb) - pQ * (q * qb) - Pq * (qi * qbi);
    Reports parts{expect_equal("plus", R, o.Rplus, plus, c.tol, sw),
                  expect_equal("minus", R, o.Rminus, minus, c.tol, sw)};
    out.push_back(detail::merge("spectral.decomposition", R, parts, sw));
  }
  const T q2 = q * q, qi2 = qi * qi;
  if (R.kind() == Regime::Kind::RealQ || R.kind() == Regime::Kind::Case2) {
    Stopwatch sw;
    auto plus = pq * q2 + PQ * qi2 - pQ - Pq;
    auto minus = pq + PQ - pQ * q2 - Pq * qi2;
    Reports parts{expect_equal("plus", R, o.Rplus, plus, c.tol, sw),
                  expect_equal("minus", R, o.Rminus, minus, c.tol, sw)};
    out.push_back(detail::merge("spectral.real-q-decomposition", R, parts, sw));
  }
  if (R.kind() == Regime::Kind::UnitCircle) {
    Stopwatch sw;
    auto plus = pq + PQ - pQ * q2 - Pq * qi2;
    auto minus = pq * q2 + PQ * qi2 - pQ - Pq;
    Reports parts{expect_equal("plus", R, o.Rplus, plus, c.tol, sw),
                  expect_equal("minus", R, o.Rminus, minus, c.tol, sw)};
    out.push_back(detail::merge("spectral.unit-circle-decomposition", R, parts, sw));
  }
  {
    Stopwatch sw;
    Reports parts{
        expect_equal("K", R, o.K, o.Qp * qb - o.Q * qbi, c.tol, sw),
        expect_equal("M M^-1", R, compose(o.M, o.Minv), BasicTMap<T>::identity(sig("UU")), c.tol, sw),
        expect_equal("K K^-1", R, compose(o.K, o.Kinv), BasicTMap<T>::identity(sig("BB")), c.tol, sw),
        expect_equal("X X^-1", R, compose(o.X, o.Xinv), BasicTMap<T>::identity(sig("BU")), c.tol, sw),
        expect_equal("X^-1 X", R, compose(o.Xinv, o.X), BasicTMap<T>::identity(sig("UB")), c.tol, sw),
        expect_equal("M E", R, compose(o.M, o.E), o.E * (-qi), c.tol, sw)};
    out.push_back(detail::merge("spectral.building-blocks", R, parts, sw));
  }
  {
    Stopwatch sw;
    Reports parts;
    for (const auto& [name, p, rank] : {std::tuple{"P", &o.P, 1}, std::tuple{"P'", &o.Pp, 3},
                                        std::tuple{"Q", &o.Q, 1}, std::tuple{"Q'", &o.Qp, 3}}) {
      parts.push_back(expect_equal(name, R, compose(*p, *p), *p, c.tol, sw));
      parts.push_back(expect_true(std::string("trace ") + name, R, near(trace(*p), T(rank), c.tol), "", sw));
    }
    out.push_back(detail::merge("spectral.projections", R, parts, sw));
  }
  {
    Stopwatch sw;
    out.push_back(expect_equal("spectral.pminus-idempotent", R, compose(o.Pminus, o.Pminus), o.Pminus, c.tol, sw));
  }
  {
    Stopwatch sw;
    const T tr = trace(o.Pminus);
    out.push_back(expect_true("spectral.pminus-trace", R, near(tr, T(6), c.tol), "", sw));
  }
  if (R.kind() == Regime::Kind::UnitCircle) {
    Stopwatch sw;
    const auto& W = o.W[0];
    const auto id = BasicTMap<T>::identity(sig("UBUB"));
    const std::array<std::tuple<const char*, const BasicTMap<T>*, T, int>, 3> spaces{
        {{"q", &pq, q, 9}, {"q^-3", &PQ, qi2 * qi, 1}, {"-q^-1", &o.Pminus, -qi, 6}}};
    Reports parts;
    BasicTMap<T> sum(id.in_sig(), id.out_sig());
    for (const auto& [name, p, lambda, mult] : spaces) {
      parts.push_back(expect_equal(std::string("W on ") + name, R, compose(W, *p), *p * lambda, c.tol, sw));
      parts.push_back(expect_true(std::string("multiplicity ") + name, R, near(trace(*p), T(mult), c.tol), "", sw));
      parts.push_back(expect_equal(std::string("idempotent ") + name, R, compose(*p, *p), *p, c.tol, sw));
      sum += *p;
    }
    parts.push_back(expect_equal("completeness", R, sum, id, c.tol, sw));
    out.push_back(detail::merge("spectral.what-eigenstructure", R, parts, sw));
  }
  return out;
}

/// S_12 S_23 E_12 for an arbitrary S on (U,U); E_23 is the target.
template <class T>
BasicTMap<T> sse_lhs(const BasicOperators<T>& o, const BasicTMap<T>& S) {
  using detail::sig;
  const auto e12 = detail::insert(o.E, {0, 1}, sig("U"));
  return compose(place(S, {0, 1}, sig("UUU")), compose(place(S, {1, 2}, sig("UUU")), e12));
}

template <class T>
BasicTMap<T> xh_matrix(const BasicOperators<T>& o, const BasicTMap<T>& S, const BasicTMap<T>& S_inv,
                       const Regime& r) {
  using detail::sig;
  const BasicTMap<T> sbar = tau_conjugate(S_inv, r);
  return chain<T>(sig("UBUB"), {{&o.Xinv, {1, 2}}, {&sbar, {2, 3}}, {&S, {0, 1}}, {&o.X, {1, 2}}});
}

/// Identities behind the crossed product of the Lorentz and Minkowski
/// algebras for one choice of S.
template <class T>
Reports crossed_identities(const CheckContext<T>& c, Variant v) {
  using detail::insert;
  using detail::sig;
  const auto& o = c.ops;
  const auto& R = c.regime;
  const std::size_t k = index(v);
  const std::string suffix = "." + to_string(v);
  const auto& S = o.S[k];
  const auto& Tm = o.T[k];
  const auto& Tp = o.Tp[k];
  Reports out;
  {
    Stopwatch sw;
    out.push_back(expect_equal("crossed.sse" + suffix, R, sse_lhs(o, S), insert(o.E, {1, 2}, sig("U")), c.tol, sw));
  }
  {
    Stopwatch sw;
    const auto e12 = insert(o.E, {0, 1}, sig("UB"));
    auto lhs = compose(place(Tm, {0, 1, 2}, sig("UUBU")), compose(place(Tm, {1, 2, 3}, sig("UUUB")), e12));
    out.push_back(expect_equal("crossed.tte" + suffix, R, lhs, insert(o.E, {2, 3}, sig("UB")), c.tol, sw));
  }
  {
    Stopwatch sw;
    auto lhs = chain<T>(sig("UBUB"), {{&Tp, {1, 2, 3}}, {&Tm, {0, 1, 2}}, {&o.Xn, {2, 3}}});
    auto rhs = chain<T>(sig("UBUB"), {{&o.Xn, {0, 1}}, {&Tm, {1, 2, 3}}, {&Tp, {0, 1, 2}}});
    out.push_back(expect_equal("crossed.x-t-tprime" + suffix, R, lhs, rhs, c.tol, sw));
  }
  for (const auto& [name, rhat] : {std::pair{"plus", &o.Rplus}, std::pair{"minus", &o.Rminus}}) {
    Stopwatch sw;
    auto lhs = chain<T>(sig("UUBUB"), {{&Tm, {0, 1, 2}}, {&Tm, {2, 3, 4}}, {rhat, {0, 1, 2, 3}}});
    auto rhs = chain<T>(sig("UUBUB"), {{rhat, {1, 2, 3, 4}}, {&Tm, {0, 1, 2}}, {&Tm, {2, 3, 4}}});
    out.push_back(expect_equal(std::string("crossed.rhat-t-t-") + name + suffix, R, lhs, rhs, c.tol, sw));
  }
  {
    Stopwatch sw;
    out.push_back(expect_equal("crossed.xh-matrix" + suffix, R, xh_matrix(o, S, o.S_inv[k], R), o.W[k], c.tol, sw));
  }
  return out;
}

/// X_12 X_23 E_12 = E_23 for the normalized X.
template <class T>
CheckReport x_e_shuttle(const CheckContext<T>& c) {
  using detail::sig;
  Stopwatch sw;
  const auto& o = c.ops;
  const auto e12 = detail::insert(o.E, {0, 1}, sig("B"));
  auto lhs = compose(place(o.Xn, {0, 1}, sig("UBU")), compose(place(o.Xn, {1, 2}, sig("UUB")), e12));
  return expect_equal("crossed.x-e-shuttle", c.regime, lhs, detail::insert(o.E, {1, 2}, sig("B")), c.tol, sw);
}

/// S = I + 2 E E' is not one of the admissible matrices in any regime
/// (I + E E' would become the flip at q = 1): SSE must fail.
template <class T>
CheckReport sse_negative_control(const CheckContext<T>& c) {
  using detail::sig;
  Stopwatch sw;
  const auto& o = c.ops;
  const auto S = BasicTMap<T>::identity(sig("UU")) + compose(o.E, o.Ep) * T(2);
  return expect_different("crossed.sse.non-solution", c.regime, sse_lhs(o, S), detail::insert(o.E, {1, 2}, sig("U")),
                          c.tol, sw);
}

/// P^-(W + sigma) = 0 with sigma = 1/q, on the unit circle.
template <class T>
CheckReport braided_sigma(const CheckContext<T>& c) {
  Stopwatch sw;
  const auto& o = c.ops;
  const auto id = BasicTMap<T>::identity(o.Pminus.in_sig());
  const auto lhs = compose(o.Pminus, o.W[0] + id * c.lift(Scalar::q(-1)));
  return expect_equal("compat.sigma-inverse-q", c.regime, lhs, BasicTMap<T>(lhs.in_sig(), lhs.out_sig()), c.tol, sw);
}

// Exact-only checks.

/// Xn = t^{1/2} X (case 1) or q^{1/2} X (case 2).
CheckReport x_normalization(const Regime& r);

/// S = a I + b E E' solves SSE exactly for S = +-q^{-1/2} M and
/// S = +-q^{1/2} M^-1 and nothing else.
CheckReport s_uniqueness(const Regime& r);

/// Regime-dependent translation-compatibility checks: the sigma = 1/q
/// identity and the failure of sigma = 1 on the unit circle (with its
/// vanishing locus q^2 = 1 over both square-root branches), the absence of
/// any sigma for real q, and sigma = 1 in the classical limit.
Reports translation_compat(const Regime& r);

/// At q = t = 1 every braiding matrix is a flip and the projections are
/// the classical antisymmetrizers.
Reports classical_limit();

}  // namespace qlorentz
