#include "qlorentz/intertwiners/operators.hpp"

#include <map>
#include <mutex>

#include "qlorentz/tensor/linalg.hpp"

namespace qlorentz {
namespace {

const Signature kUU{Leg::U, Leg::U};
const Signature kUB{Leg::U, Leg::B};
const Signature kBU{Leg::B, Leg::U};
const Signature kUBUB{Leg::U, Leg::B, Leg::U, Leg::B};

constexpr std::size_t idx(std::size_t a, std::size_t b) { return 2 * a + b; }

Scalar half(Atom a, int k) { return Scalar::atom(a, k); }

TMap conj_by_x(const TMap& x, const TMap& x_inv, const TMap& a, const TMap& b) {
  return chain<Scalar>(kUBUB, {{&x_inv, {1, 2}}, {&a, {0, 1}}, {&b, {2, 3}}, {&x, {1, 2}}});
}

Operators build_generic(int eps, bool case2) {
  const Regime gen = Regime::generic();
  const Scalar q = Scalar::q(), t = Scalar::t();
  Operators o;

  o.E = TMap({}, kUU);
  o.E(idx(0, 1), 0) = 1;
  o.E(idx(1, 0), 0) = -q;
  o.Ep = TMap(kUU, {});
  o.Ep(0, idx(1, 0)) = 1;
  o.Ep(0, idx(0, 1)) = -q.inverse();

  o.X = TMap(kUB, kBU);
  o.X(idx(0, 0), idx(0, 0)) = 1;
  o.X(idx(1, 1), idx(1, 1)) = 1;
  o.X(idx(1, 0), idx(0, 1)) = t.inverse();
  o.X(idx(0, 1), idx(1, 0)) = t.inverse();
  o.X(idx(0, 0), idx(1, 1)) = eps;
  o.Xinv = TMap(kBU, kUB);
  o.Xinv(idx(0, 0), idx(0, 0)) = 1;
  o.Xinv(idx(1, 1), idx(1, 1)) = 1;
  o.Xinv(idx(1, 0), idx(0, 1)) = t;
  o.Xinv(idx(0, 1), idx(1, 0)) = t;
  o.Xinv(idx(0, 0), idx(1, 1)) = -eps;

  const Scalar up = case2 ? half(Atom::Q, 1) : half(Atom::T, 1);
  const Scalar down = up.inverse();
  o.Xn = TMap(kUB, kBU);
  o.Xn(idx(0, 0), idx(0, 0)) = up;
  o.Xn(idx(1, 1), idx(1, 1)) = up;
  o.Xn(idx(1, 0), idx(0, 1)) = down;
  o.Xn(idx(0, 1), idx(1, 0)) = down;
  if (eps != 0) o.Xn(idx(0, 0), idx(1, 1)) = Scalar(eps) * up;
  o.Xn_inv = inverse(o.Xn);

  const TMap I = TMap::identity(kUU);
  o.P = compose(o.E, o.Ep) * (-(q + q.inverse()).inverse());
  o.Pp = I - o.P;
  o.M = o.Pp * q - o.P * q.inverse();
  o.Minv = o.Pp * q.inverse() - o.P * q;
  o.Q = tau_conjugate(o.P, gen);
  o.Qp = TMap::identity(o.Q.in_sig()) - o.Q;
  o.K = tau_conjugate(o.M, gen);
  o.Kinv = tau_conjugate(o.Minv, gen);

  o.Rplus = conj_by_x(o.X, o.Xinv, o.M, o.K);
  o.Rminus = conj_by_x(o.X, o.Xinv, o.M, o.Kinv);
  o.Rplus_inv = conj_by_x(o.X, o.Xinv, o.Minv, o.Kinv);
  o.Rminus_inv = conj_by_x(o.X, o.Xinv, o.Minv, o.K);
  o.Pminus = conj_by_x(o.X, o.Xinv, o.Pp, o.Q) + conj_by_x(o.X, o.Xinv, o.P, o.Qp);

  const Scalar i = Scalar::i();
  const std::array<std::array<std::array<Scalar, 2>, 2>, 4> sigma{{
      {{{1, 0}, {0, 1}}},
      {{{0, 1}, {1, 0}}},
      {{{0, -i}, {i, 0}}},
      {{{1, 0}, {0, -1}}},
  }};
  o.pauli = TMap(kUB, kUB);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) o.pauli(idx(a, b), j) = sigma[j][a][b];
  o.pauli_inv = inverse(o.pauli);

  const Scalar qh = half(Atom::Q, 1);
  o.S[0] = o.M * qh.inverse();
  o.S_inv[0] = o.Minv * qh;
  o.S[1] = o.Minv * qh;
  o.S_inv[1] = o.M * qh.inverse();
  const Scalar ratio = half(Atom::QBar, 1) * half(Atom::Q, -1);
  o.W[0] = o.Rminus * ratio;
  o.W[1] = o.Rminus_inv * ratio.inverse();
  const Signature uub{Leg::U, Leg::U, Leg::B};
  const Signature bub{Leg::B, Leg::U, Leg::B};
  for (std::size_t v = 0; v < 2; ++v) {
    o.T[v] = chain<Scalar>(uub, {{&o.S[v], {0, 1}}, {&o.Xn, {1, 2}}});
    const TMap sbar = tau_conjugate(o.S_inv[v], gen);
    o.Tp[v] = chain<Scalar>(bub, {{&o.Xn_inv, {0, 1}}, {&sbar, {1, 2}}});
  }
  return o;
}

}  // namespace

std::string to_string(Variant v) { return v == Variant::First ? "first" : "second"; }

const Operators& operators(const Regime& r) {
  static std::mutex mu;
  static std::map<std::string, Operators> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(r.name());
  if (it != cache.end()) return it->second;
  Operators generic = build_generic(r.epsilon(), r.kind() == Regime::Kind::Case2);
  Operators o = generic.transform([&](const TMap& m) { return specialize(m, r); });
  return cache.emplace(r.name(), std::move(o)).first->second;
}

NumOperators numeric_operators(const Regime& r, const NumericPoint& p) {
  return operators(r).transform([&](const TMap& m) { return evaluate(m, p); });
}

const std::vector<std::string>& operator_names() {
  static const std::vector<std::string> names{
      "E",      "E'",     "X",       "X^-1",    "Xn",     "Xn^-1", "P",  "P'", "Q",    "Q'",
      "M",      "M^-1",   "K",       "K^-1",    "Rhat+",  "Rhat-", "Rhat+^-1", "Rhat-^-1",
      "Pminus", "S",      "T",       "T'",      "What",   "PauliBasis"};
  return names;
}

TMap build(std::string_view name, const Regime& r, Variant v) {
  const Operators& o = operators(r);
  const std::size_t k = index(v);
  const std::map<std::string_view, const TMap*> table{
      {"E", &o.E},           {"E'", &o.Ep},        {"X", &o.X},
      {"X^-1", &o.Xinv},     {"Xn", &o.Xn},        {"Xn^-1", &o.Xn_inv},
      {"P", &o.P},           {"P'", &o.Pp},        {"Q", &o.Q},
      {"Q'", &o.Qp},         {"M", &o.M},          {"M^-1", &o.Minv},
      {"K", &o.K},           {"K^-1", &o.Kinv},    {"Rhat+", &o.Rplus},
      {"Rhat-", &o.Rminus},  {"Rhat+^-1", &o.Rplus_inv}, {"Rhat-^-1", &o.Rminus_inv},
      {"Pminus", &o.Pminus}, {"S", &o.S[k]},       {"T", &o.T[k]},
      {"T'", &o.Tp[k]},      {"What", &o.W[k]},    {"PauliBasis", &o.pauli}};
  auto it = table.find(name);
  if (it == table.end()) throw UnknownName("unknown operator '" + std::string(name) + "'");
  return *it->second;
}

}  // namespace qlorentz
