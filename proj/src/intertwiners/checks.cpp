#include "qlorentz/intertwiners/checks.hpp"

#include <sstream>

#include "qlorentz/tensor/linalg.hpp"

namespace qlorentz {
namespace {

LaurentMono half_mono(Atom a, int k) { return LaurentMono::atom(a, k); }

// Substitution moving to the other square-root branch on the unit circle:
// qb^{1/2} -> -q^{-1/2}.
Substitution other_unit_circle_branch() {
  return Substitution().set(Atom::QBar, GaussianRational(-1), half_mono(Atom::Q, -1));
}

CheckReport sigma_one_root_locus() {
  Stopwatch sw;
  const Regime uc = Regime::unit_circle();
  const Operators& g = operators(Regime::generic());
  const TMap id = TMap::identity(g.Pminus.in_sig());
  const TMap generic = compose(g.Pminus, g.W[0] + id);
  const TMap plus = substitute(generic, uc.substitution());
  const TMap minus = substitute(generic, other_unit_circle_branch());
  const LaurentPoly q2m1 = LaurentPoly::atom(Atom::Q, 4) - LaurentPoly(1);
  const LaurentPoly qm1 = LaurentPoly::atom(Atom::Q, 2) - LaurentPoly(1);
  const Substitution at_one = Substitution().set(Atom::Q, GaussianRational(1));
  const Substitution at_minus_one = Substitution().set(Atom::Q, GaussianRational::i());

  Reports parts;
  const Scalar factor = Scalar(1) - Scalar::q(-1);
  parts.push_back(expect_equal("factorization", uc, plus, operators(uc).Pminus * factor, 0.0, sw));
  bool single_divisible_by_q2m1 = true;
  std::size_t entries = 0;
  for (std::size_t row = 0; row < plus.rows(); ++row) {
    for (std::size_t col = 0; col < plus.cols(); ++col) {
      const Scalar& a = plus(row, col);
      const Scalar& b = minus(row, col);
      if (a.is_zero() && b.is_zero()) continue;
      ++entries;
      std::ostringstream where;
      where << "entry (" << row << "," << col << ")";
      bool ok = true;
      try {
        ok = at_one.apply(a).is_zero() && at_minus_one.apply(b).is_zero();
      } catch (const DivisionByZero&) {
        ok = false;
      }
      parts.push_back(expect_true(where.str() + " vanishes at its root", uc, ok, where.str(), sw));
      const Scalar prod = a * b;
      parts.push_back(expect_true(where.str() + " branch product divisible by q^2 - 1", uc,
                                  prod.num().divide_exact(q2m1).has_value(), prod.to_string(), sw));
      parts.push_back(expect_true(where.str() + " divisible by q - 1", uc, a.num().divide_exact(qm1).has_value(),
                                  a.to_string(), sw));
      if (!a.num().divide_exact(q2m1)) single_divisible_by_q2m1 = false;
    }
  }
  parts.push_back(expect_true("nonzero", uc, entries > 0, "residual vanished identically", sw));
  CheckReport rep = detail::merge("compat.sigma-one-root-locus", uc, parts, sw);
  std::ostringstream d;
  d << "P^-(W + 1) = (1 - 1/q) P^- on the branch qb^(1/2) = q^(-1/2) and (1 + 1/q) P^- on qb^(1/2) = -q^(-1/2); "
    << entries << " nonzero entries; entrywise product of the branches divisible by q^2 - 1; single-branch entries "
    << (single_divisible_by_q2m1 ? "also" : "only") << " divisible by " << (single_divisible_by_q2m1 ? "q^2 - 1" : "q - 1");
  rep.detail = d.str();
  return rep;
}

Reports no_single_sigma(const Regime& r) {
  const Operators& o = operators(r);
  const TMap id = TMap::identity(o.Pminus.in_sig());
  const TMap PW = compose(o.Pminus, o.W[0]);
  Reports out;
  {
    Stopwatch sw;
    auto nz = first_nonzero(o.Pminus);
    const Scalar sigma = -PW(nz->row, nz->col) / nz->value;
    const TMap res = PW + o.Pminus * sigma;
    CheckReport rep = expect_different("compat.no-single-sigma", r, res, TMap(res.in_sig(), res.out_sig()), 0.0, sw);
    rep.detail = "sigma forced by entry (" + std::to_string(nz->row) + "," + std::to_string(nz->col) +
                 ") is " + sigma.to_string() + "; P^-(W + sigma) stays nonzero";
    out.push_back(std::move(rep));
  }
  {
    Stopwatch sw;
    Reports parts;
    for (const auto& [name, s] : {std::pair{"1", Scalar(1)}, std::pair{"q", Scalar::q()},
                                  std::pair{"1/q", Scalar::q(-1)}}) {
      const Scalar sigma = specialize(s, r);
      const TMap res = compose(o.Pminus, o.W[0] + id * sigma);
      parts.push_back(expect_different(std::string("sigma = ") + name, r, res, TMap(res.in_sig(), res.out_sig()),
                                       0.0, sw));
    }
    CheckReport rep = detail::merge("compat.candidate-sigmas-fail", r, parts, sw);
    rep.negative_control = true;
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace

ExactContext exact_context(const Regime& r) {
  return ExactContext{operators(r), r, 0.0, [r](const Scalar& s) { return specialize(s, r); }};
}

NumericContext numeric_context(const NumOperators& ops, const Regime& r, const NumericPoint& p, double tol) {
  return NumericContext{ops, r, tol, [r, p](const Scalar& s) { return evaluate(specialize(s, r), p); }};
}

CheckReport x_normalization(const Regime& r) {
  Stopwatch sw;
  const Operators& o = operators(r);
  const bool case2 = r.kind() == Regime::Kind::Case2;
  const Scalar lambda = specialize(Scalar::atom(case2 ? Atom::Q : Atom::T, 1), r);
  CheckReport rep = expect_equal("crossed.x-normalization", r, o.Xn, o.X * lambda, 0.0, sw);
  rep.detail = std::string("normalized X = ") + (case2 ? "q^(1/2)" : "t^(1/2)") + " * rescaled X";
  return rep;
}

CheckReport s_uniqueness(const Regime& r) {
  Stopwatch sw;
  const Operators& o = operators(r);
  const Signature uuu{Leg::U, Leg::U, Leg::U};
  const TMap N = compose(o.E, o.Ep);
  const TMap e12 = detail::insert(o.E, {0, 1}, {Leg::U});
  const TMap e23 = detail::insert(o.E, {1, 2}, {Leg::U});
  const TMap n12 = place(N, {0, 1}, uuu), n23 = place(N, {1, 2}, uuu);
  // S_12 S_23 E_12 = a^2 V1 + ab V2 + b^2 V3.
  const std::array<TMap, 3> V{e12, compose(n12, e12) + compose(n23, e12), compose(n12, compose(n23, e12))};
  ScalarMatrix system;
  for (std::size_t k = 0; k < e23.rows(); ++k) system.push_back({V[0](k, 0), V[1](k, 0), V[2](k, 0), e23(k, 0)});

  const Echelon ech = row_reduce(system);
  const bool consistent = ech.pivots.empty() || ech.pivots.back() < 3;
  ScalarMatrix coeffs;
  for (const auto& row : system) coeffs.push_back({row[0], row[1], row[2]});
  const ScalarMatrix kernel = nullspace(coeffs, 3);
  ScalarRow y0(3);
  for (std::size_t i = 0; i < ech.rows.size(); ++i)
    if (ech.pivots[i] < 3) y0[ech.pivots[i]] = ech.rows[i][3];

  auto solves = [&](const ScalarRow& y) {
    for (const auto& row : system)
      if (!(row[0] * y[0] + row[1] * y[1] + row[2] * y[2] == row[3])) return false;
    return y[1] * y[1] == y[0] * y[2];
  };
  const Scalar q = specialize(Scalar::q(), r), qi = specialize(Scalar::q(-1), r);
  const ScalarRow first{q, 1, qi}, second{qi, 1, q};

  std::ostringstream d;
  bool ok = consistent && solves(first) && solves(second);
  if (!consistent) d << "linear system inconsistent; ";
  if (kernel.size() != 1) {
    ok = false;
    d << "solution line has dimension " << kernel.size() << "; ";
  } else {
    const ScalarRow& n = kernel[0];
    const Scalar A = n[1] * n[1] - n[0] * n[2];
    const Scalar B = Scalar(2) * y0[1] * n[1] - y0[0] * n[2] - y0[2] * n[0];
    const Scalar C = y0[1] * y0[1] - y0[0] * y0[2];
    if (A.is_zero()) {
      ok = false;
      d << "conic degenerates on the solution line; ";
    } else if (first == second && !(B * B - Scalar(4) * A * C).is_zero()) {
      ok = false;
      d << "second root not accounted for; ";
    }
  }
  d << "(a^2, ab, b^2) in {(q, 1, 1/q), (1/q, 1, q)}, i.e. S = +-q^(-1/2) M or S = +-q^(1/2) M^-1";
  return expect_true("crossed.s-uniqueness", r, ok, d.str(), sw);
}

Reports translation_compat(const Regime& r) {
  Reports out;
  const auto kind = r.kind();
  if (kind == Regime::Kind::UnitCircle || kind == Regime::Kind::Generic) {
    const Regime uc = Regime::unit_circle();
    const Operators& o = operators(uc);
    out.push_back(braided_sigma(exact_context(uc)));
    Stopwatch sw;
    const TMap res = compose(o.Pminus, o.W[0] + TMap::identity(o.Pminus.in_sig()));
    out.push_back(expect_different("compat.sigma-one-nonzero", uc, res, TMap(res.in_sig(), res.out_sig()), 0.0, sw));
    out.push_back(sigma_one_root_locus());
  }
  if (kind == Regime::Kind::RealQ || kind == Regime::Kind::Generic) {
    for (auto& rep : no_single_sigma(Regime::real_q())) out.push_back(std::move(rep));
  }
  if (kind == Regime::Kind::Case2) {
    for (auto& rep : no_single_sigma(r)) out.push_back(std::move(rep));
  }
  if (kind == Regime::Kind::Classical || kind == Regime::Kind::Generic) {
    Stopwatch sw;
    const Regime cl = Regime::classical();
    const Operators& o = operators(cl);
    const TMap res = compose(o.Pminus, o.W[0] + TMap::identity(o.Pminus.in_sig()));
    out.push_back(expect_equal("compat.classical-sigma-one", cl, res, TMap(res.in_sig(), res.out_sig()), 0.0, sw));
  }
  return out;
}

Reports classical_limit() {
  const Regime cl = Regime::classical();
  const Operators& o = operators(cl);
  const ExactContext c = exact_context(cl);
  const TMap bold_tau = detail::bold_flip<Scalar>();
  const TMap id4 = TMap::identity(bold_tau.in_sig());
  Reports out;
  {
    Stopwatch sw;
    Reports parts{expect_equal("X", cl, o.X, flip<Scalar>(Leg::U, Leg::B), 0.0, sw),
                  expect_equal("Xn", cl, o.Xn, flip<Scalar>(Leg::U, Leg::B), 0.0, sw),
                  expect_equal("M", cl, o.M, flip<Scalar>(Leg::U, Leg::U), 0.0, sw),
                  expect_equal("K", cl, o.K, flip<Scalar>(Leg::B, Leg::B), 0.0, sw),
                  expect_equal("Rhat+", cl, o.Rplus, bold_tau, 0.0, sw),
                  expect_equal("Rhat-", cl, o.Rminus, bold_tau, 0.0, sw),
                  expect_equal("Rhat+^-1", cl, o.Rplus_inv, bold_tau, 0.0, sw),
                  expect_equal("Rhat-^-1", cl, o.Rminus_inv, bold_tau, 0.0, sw),
                  expect_equal("W first", cl, o.W[0], bold_tau, 0.0, sw),
                  expect_equal("W second", cl, o.W[1], bold_tau, 0.0, sw)};
    out.push_back(detail::merge("classical.flips", cl, parts, sw));
  }
  {
    Stopwatch sw;
    const Scalar half = Scalar::rational(1, 2);
    const TMap antisym4 = (id4 - bold_tau) * half;
    Reports parts{
        expect_equal("P", cl, o.P, (TMap::identity(o.P.in_sig()) - flip<Scalar>(Leg::U, Leg::U)) * half, 0.0, sw),
        expect_equal("Q", cl, o.Q, (TMap::identity(o.Q.in_sig()) - flip<Scalar>(Leg::B, Leg::B)) * half, 0.0, sw),
        expect_equal("Pminus", cl, o.Pminus, antisym4, 0.0, sw),
        expect_equal("Pminus in vector components", cl, vector_components(o.Pminus, o), antisym4, 0.0, sw)};
    out.push_back(detail::merge("classical.antisymmetrizers", cl, parts, sw));
  }
  return out;
}

}  // namespace qlorentz
