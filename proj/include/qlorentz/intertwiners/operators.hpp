#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "qlorentz/tensor/tmap.hpp"

namespace qlorentz {

/// The two admissible cross-relation matrices S = q^{-1/2} M (First) and
/// S = q^{1/2} M^{-1} (Second).
enum class Variant { First, Second };

inline std::size_t index(Variant v) { return v == Variant::First ? 0 : 1; }
std::string to_string(Variant v);

/// Every named matrix for one regime, with entries of type T.
///
/// X is the rescaled matrix (unit coefficients on the diagonal terms);
/// Xn is the normalized one, t^{1/2} X in case 1 and q^{1/2} X in case 2,
/// which is the normalization under which X_12 X_23 E_12 = E_23 and hence
/// the one used to build T and T'.
template <class Entry>
struct BasicOperators {
  using Map = BasicTMap<Entry>;

  Map E, Ep;                    // () -> (U,U), (U,U) -> ()
  Map X, Xinv, Xn, Xn_inv;      // (U,B) -> (B,U) and back
  Map P, Pp, M, Minv;           // on (U,U)
  Map Q, Qp, K, Kinv;           // on (B,B)
  Map Rplus, Rminus;            // on (U,B,U,B)
  Map Rplus_inv, Rminus_inv;
  Map Pminus;
  Map pauli, pauli_inv;         // columns: sigma_0..sigma_3 as (U,B) vectors
  std::array<Map, 2> S, S_inv;  // on (U,U)
  std::array<Map, 2> T;         // (U,U,B) -> (U,B,U)
  std::array<Map, 2> Tp;        // (B,U,B) -> (U,B,B)
  std::array<Map, 2> W;         // x-h commutation matrix as prescribed, on (U,B,U,B)

  template <class F>
  auto transform(F f) const {
    using U = typename decltype(f(E))::value_type;
    BasicOperators<U> o;
    o.E = f(E), o.Ep = f(Ep), o.X = f(X), o.Xinv = f(Xinv), o.Xn = f(Xn), o.Xn_inv = f(Xn_inv);
    o.P = f(P), o.Pp = f(Pp), o.M = f(M), o.Minv = f(Minv);
    o.Q = f(Q), o.Qp = f(Qp), o.K = f(K), o.Kinv = f(Kinv);
    o.Rplus = f(Rplus), o.Rminus = f(Rminus), o.Rplus_inv = f(Rplus_inv), o.Rminus_inv = f(Rminus_inv);
    o.Pminus = f(Pminus), o.pauli = f(pauli), o.pauli_inv = f(pauli_inv);
    for (std::size_t v = 0; v < 2; ++v) {
      o.S[v] = f(S[v]), o.S_inv[v] = f(S_inv[v]), o.T[v] = f(T[v]), o.Tp[v] = f(Tp[v]), o.W[v] = f(W[v]);
    }
    return o;
  }
};

using Operators = BasicOperators<Scalar>;
using NumOperators = BasicOperators<std::complex<double>>;

/// Exact operators with entries specialized to the regime. Cached per regime.
const Operators& operators(const Regime& r);

NumOperators numeric_operators(const Regime& r, const NumericPoint& p);

/// Named lookup: E, E', X, X^-1, Xn, Xn^-1, P, P', Q, Q', M, M^-1, K, K^-1,
/// Rhat+, Rhat-, Rhat+^-1, Rhat-^-1, Pminus, S, T, T', What, PauliBasis.
/// S, T, T', What honour the variant. Throws UnknownName.
TMap build(std::string_view name, const Regime& r, Variant v = Variant::First);
const std::vector<std::string>& operator_names();

/// Components in the Pauli basis: C^-1 op C on every (U,B) pair of legs.
template <class T>
BasicTMap<T> vector_components(const BasicTMap<T>& op, const BasicOperators<T>& ops) {
  const Signature& in = op.in_sig();
  if (in != op.out_sig() || in.size() % 2 != 0)
    throw SignatureMismatch("vector_components needs a map on (U,B)^k, got " + to_string(in));
  for (std::size_t k = 0; k < in.size(); k += 2)
    if (in[k] != Leg::U || in[k + 1] != Leg::B)
      throw SignatureMismatch("vector_components needs a map on (U,B)^k, got " + to_string(in));
  BasicTMap<T> acc = op;
  for (std::size_t k = 0; k < in.size(); k += 2) {
    const int a = static_cast<int>(k), b = a + 1;
    acc = compose(place(ops.pauli_inv, {a, b}, in), compose(acc, place(ops.pauli, {a, b}, in)));
  }
  return acc;
}

}  // namespace qlorentz
