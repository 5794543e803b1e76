#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlorentz/coeff/regime.hpp"
#include "qlorentz/errors.hpp"

namespace qlorentz {

/// Leg type: C^2 (Unbarred) or its complex conjugate (Barred).
enum class Leg : std::uint8_t { U, B };
using Signature = std::vector<Leg>;

inline Leg bar(Leg l) { return l == Leg::U ? Leg::B : Leg::U; }
Signature bar(const Signature& s);
std::string to_string(const Signature& s);

inline bool is_zero(const std::complex<double>& z) { return z == 0.0; }

/// Linear map between tensor products of typed two-dimensional legs.
///
/// Dense row-major matrix with 2^|out| rows and 2^|in| columns. A basis
/// index reads the legs left to right as binary digits, leg value 1 -> bit 0
/// and value 2 -> bit 1, so two legs enumerate 11, 12, 21, 22.
template <class T>
class BasicTMap {
 public:
  using value_type = T;

  BasicTMap() = default;
  BasicTMap(Signature in, Signature out)
      : in_(std::move(in)), out_(std::move(out)), entries_(rows() * cols()) {}

  static BasicTMap identity(const Signature& sig) {
    BasicTMap m(sig, sig);
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = T(1);
    return m;
  }

  const Signature& in_sig() const { return in_; }
  const Signature& out_sig() const { return out_; }
  std::size_t rows() const { return std::size_t{1} << out_.size(); }
  std::size_t cols() const { return std::size_t{1} << in_.size(); }
  bool is_square() const { return in_ == out_; }

  T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols() + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols() + c]; }
  const std::vector<T>& entries() const { return entries_; }

  template <class F>
  auto map(F f) const -> BasicTMap<decltype(f(std::declval<const T&>()))> {
    BasicTMap<decltype(f(std::declval<const T&>()))> out(in_, out_);
    for (std::size_t r = 0; r < rows(); ++r)
      for (std::size_t c = 0; c < cols(); ++c)
        if (!is_zero((*this)(r, c))) out(r, c) = f((*this)(r, c));
    return out;
  }

  BasicTMap& operator+=(const BasicTMap& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < entries_.size(); ++k)
      if (!is_zero(o.entries_[k])) entries_[k] += o.entries_[k];
    return *this;
  }
  BasicTMap& operator-=(const BasicTMap& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < entries_.size(); ++k)
      if (!is_zero(o.entries_[k])) entries_[k] -= o.entries_[k];
    return *this;
  }
  BasicTMap& operator*=(const T& s) {
    for (auto& e : entries_)
      if (!is_zero(e)) e *= s;
    return *this;
  }
  friend BasicTMap operator+(BasicTMap a, const BasicTMap& b) { return a += b; }
  friend BasicTMap operator-(BasicTMap a, const BasicTMap& b) { return a -= b; }
  friend BasicTMap operator*(BasicTMap a, const T& s) { return a *= s; }
  friend BasicTMap operator*(const T& s, BasicTMap a) { return a *= s; }

  friend bool operator==(const BasicTMap& a, const BasicTMap& b) {
    if (a.in_ != b.in_ || a.out_ != b.out_) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
      if (!(a.entries_[k] == b.entries_[k])) return false;
    return true;
  }

 private:
  void check_same_shape(const BasicTMap& o) const {
    if (in_ != o.in_ || out_ != o.out_)
      throw SignatureMismatch("cannot add maps " + to_string(in_) + "->" + to_string(out_) + " and " +
                              to_string(o.in_) + "->" + to_string(o.out_));
  }

  Signature in_;
  Signature out_;
  std::vector<T> entries_;
};

using TMap = BasicTMap<Scalar>;
using NumMap = BasicTMap<std::complex<double>>;

namespace detail {

inline std::size_t bit(std::size_t index, std::size_t leg, std::size_t legs) {
  return (index >> (legs - 1 - leg)) & 1U;
}

}  // namespace detail

/// f o g. Requires g.out_sig == f.in_sig.
template <class T>
BasicTMap<T> compose(const BasicTMap<T>& f, const BasicTMap<T>& g) {
  if (g.out_sig() != f.in_sig())
    throw SignatureMismatch("compose: " + to_string(g.out_sig()) + " does not feed " + to_string(f.in_sig()));
  BasicTMap<T> out(g.in_sig(), f.out_sig());
  for (std::size_t k = 0; k < g.rows(); ++k) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      const T& gv = g(k, c);
      if (is_zero(gv)) continue;
      for (std::size_t r = 0; r < f.rows(); ++r) {
        const T& fv = f(r, k);
        if (is_zero(fv)) continue;
        out(r, c) += fv * gv;
      }
    }
  }
  return out;
}

/// Embeds `op` into a larger tensor product.
///
/// `in_legs[j]` is the ambient position feeding op's j-th input leg (any
/// order, need not be adjacent). `out_legs[j]` is the position of op's j-th
/// output leg in the result; it defaults to `in_legs` when op preserves the
/// leg count. Untouched ambient legs keep their relative order in the
/// remaining output positions.
template <class T>
BasicTMap<T> place(const BasicTMap<T>& op, std::span<const int> in_legs, const Signature& ambient,
                   std::optional<std::span<const int>> out_legs = std::nullopt) {
  const std::size_t n_in = ambient.size();
  if (in_legs.size() != op.in_sig().size())
    throw ArityMismatch("place: " + std::to_string(in_legs.size()) + " positions for " +
                        std::to_string(op.in_sig().size()) + " input legs");
  std::vector<bool> used(n_in, false);
  for (std::size_t j = 0; j < in_legs.size(); ++j) {
    int p = in_legs[j];
    if (p < 0 || static_cast<std::size_t>(p) >= n_in || used[p])
      throw ArityMismatch("place: bad or repeated leg position " + std::to_string(p));
    used[p] = true;
    if (ambient[p] != op.in_sig()[j])
      throw TypeMismatch("place: ambient leg " + std::to_string(p) + " has type " + to_string({ambient[p]}) +
                         ", operator expects " + to_string({op.in_sig()[j]}));
  }
  std::vector<int> out_pos;
  if (out_legs) {
    out_pos.assign(out_legs->begin(), out_legs->end());
  } else {
    if (op.in_sig().size() != op.out_sig().size())
      throw ArityMismatch("place: output positions required when the leg count changes");
    out_pos.assign(in_legs.begin(), in_legs.end());
  }
  if (out_pos.size() != op.out_sig().size()) throw ArityMismatch("place: wrong number of output positions");
  const std::size_t n_out = n_in - in_legs.size() + out_pos.size();
  std::vector<int> out_owner(n_out, -1);
  for (std::size_t j = 0; j < out_pos.size(); ++j) {
    int p = out_pos[j];
    if (p < 0 || static_cast<std::size_t>(p) >= n_out || out_owner[p] != -1)
      throw ArityMismatch("place: bad or repeated output position " + std::to_string(p));
    out_owner[p] = static_cast<int>(j);
  }
  std::vector<int> rest_in;
  for (std::size_t p = 0; p < n_in; ++p)
    if (!used[p]) rest_in.push_back(static_cast<int>(p));
  std::vector<int> rest_out;
  for (std::size_t p = 0; p < n_out; ++p)
    if (out_owner[p] == -1) rest_out.push_back(static_cast<int>(p));

  Signature out_sig(n_out);
  for (std::size_t j = 0; j < out_pos.size(); ++j) out_sig[out_pos[j]] = op.out_sig()[j];
  for (std::size_t j = 0; j < rest_in.size(); ++j) out_sig[rest_out[j]] = ambient[rest_in[j]];

  BasicTMap<T> result(ambient, out_sig);
  const std::size_t k_in = in_legs.size();
  const std::size_t k_out = out_pos.size();
  for (std::size_t index = 0; index < result.cols(); ++index) {
    std::size_t col = 0;
    for (std::size_t j = 0; j < k_in; ++j) col = (col << 1U) | detail::bit(index, in_legs[j], n_in);
    std::size_t base = 0;
    for (std::size_t j = 0; j < rest_in.size(); ++j)
      base |= detail::bit(index, rest_in[j], n_in) << (n_out - 1 - rest_out[j]);
    for (std::size_t r = 0; r < op.rows(); ++r) {
      const T& v = op(r, col);
      if (is_zero(v)) continue;
      std::size_t row = base;
      for (std::size_t j = 0; j < k_out; ++j) row |= detail::bit(r, j, k_out) << (n_out - 1 - out_pos[j]);
      result(row, index) = v;
    }
  }
  return result;
}

template <class T>
BasicTMap<T> place(const BasicTMap<T>& op, std::initializer_list<int> in_legs, const Signature& ambient) {
  return place(op, std::span<const int>(in_legs.begin(), in_legs.size()), ambient);
}

/// a (x) b, legs of a first.
template <class T>
BasicTMap<T> kron(const BasicTMap<T>& a, const BasicTMap<T>& b) {
  Signature in = a.in_sig();
  in.insert(in.end(), b.in_sig().begin(), b.in_sig().end());
  Signature out = a.out_sig();
  out.insert(out.end(), b.out_sig().begin(), b.out_sig().end());
  BasicTMap<T> m(in, out);
  for (std::size_t ra = 0; ra < a.rows(); ++ra)
    for (std::size_t ca = 0; ca < a.cols(); ++ca) {
      if (is_zero(a(ra, ca))) continue;
      for (std::size_t rb = 0; rb < b.rows(); ++rb)
        for (std::size_t cb = 0; cb < b.cols(); ++cb) {
          if (is_zero(b(rb, cb))) continue;
          m(ra * b.rows() + rb, ca * b.cols() + cb) = a(ra, ca) * b(rb, cb);
        }
    }
  return m;
}

/// The flip tau : (a, b) -> (b, a).
template <class T>
BasicTMap<T> flip(Leg a, Leg b) {
  BasicTMap<T> m({a, b}, {b, a});
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) m(2 * y + x, 2 * x + y) = T(1);
  return m;
}

/// One step of an operator chain: `op` placed on `legs` of the current space.
template <class T>
struct Step {
  const BasicTMap<T>* op;
  std::vector<int> legs;
};

/// Applies the steps in order (first listed acts first) starting from the
/// identity on `input`, inferring every intermediate signature.
template <class T>
BasicTMap<T> chain(const Signature& input, std::initializer_list<Step<T>> steps) {
  BasicTMap<T> acc = BasicTMap<T>::identity(input);
  for (const auto& s : steps) acc = compose(place(*s.op, std::span<const int>(s.legs), acc.out_sig()), acc);
  return acc;
}

// Bold (vector) leg k -> spinor legs 2k, 2k+1.
std::vector<int> bold(std::initializer_list<int> vector_legs);

// Scalar-specific operations.

TMap specialize(const TMap& m, const Regime& r);
TMap substitute(const TMap& m, const Substitution& s);

/// Stars every entry and toggles every leg type.
TMap bar_conjugate(const TMap& f, const Regime& r);

/// tau o bar(f) o tau for a map with two input and two output legs.
TMap tau_conjugate(const TMap& f, const Regime& r);

// Numeric counterparts: entries are complex-conjugated, which matches the
// exact star whenever the evaluation point has qb^{1/2} = conj(q^{1/2}).
NumMap bar_conjugate(const NumMap& f, const Regime& r);
NumMap tau_conjugate(const NumMap& f, const Regime& r);

template <class T>
T trace(const BasicTMap<T>& m) {
  if (!m.is_square()) throw SignatureMismatch("trace of a non-square map");
  T s{};
  for (std::size_t k = 0; k < m.rows(); ++k) s += m(k, k);
  return s;
}
bool is_zero(const TMap& m);

struct Residual {
  std::size_t row = 0;
  std::size_t col = 0;
  Scalar value;
  std::string describe() const;
};

std::optional<Residual> first_nonzero(const TMap& m);

NumMap evaluate(const TMap& m, const NumericPoint& p);
double max_norm(const NumMap& m);

}  // namespace qlorentz
