#include "qlorentz/tensor/tmap.hpp"

#include <cmath>
#include <sstream>

namespace qlorentz {

Signature bar(const Signature& s) {
  Signature out;
  out.reserve(s.size());
  for (Leg l : s) out.push_back(bar(l));
  return out;
}

std::string to_string(const Signature& s) {
  std::string out = "(";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += s[k] == Leg::U ? "U" : "B";
  }
  return out + ")";
}

std::vector<int> bold(std::initializer_list<int> vector_legs) {
  std::vector<int> out;
  for (int v : vector_legs) {
    out.push_back(2 * v);
    out.push_back(2 * v + 1);
  }
  return out;
}

TMap specialize(const TMap& m, const Regime& r) {
  return m.map([&](const Scalar& s) { return specialize(s, r); });
}

TMap substitute(const TMap& m, const Substitution& s) {
  return m.map([&](const Scalar& x) { return s.apply(x); });
}

TMap bar_conjugate(const TMap& f, const Regime& r) {
  TMap out(bar(f.in_sig()), bar(f.out_sig()));
  for (std::size_t row = 0; row < f.rows(); ++row)
    for (std::size_t col = 0; col < f.cols(); ++col)
      if (!f(row, col).is_zero()) out(row, col) = star(f(row, col), r);
  return out;
}


NumMap bar_conjugate(const NumMap& f, const Regime&) {
  NumMap out(bar(f.in_sig()), bar(f.out_sig()));
  for (std::size_t row = 0; row < f.rows(); ++row)
    for (std::size_t col = 0; col < f.cols(); ++col) out(row, col) = std::conj(f(row, col));
  return out;
}

namespace {

template <class T>
BasicTMap<T> tau_conjugate_impl(const BasicTMap<T>& f, const Regime& r) {
  if (f.in_sig().size() != 2 || f.out_sig().size() != 2)
    throw ArityMismatch("tau_conjugate needs two input and two output legs, got " + to_string(f.in_sig()) + "->" +
                        to_string(f.out_sig()));
  BasicTMap<T> fb = bar_conjugate(f, r);
  const Signature& in = fb.in_sig();
  const Signature& out = fb.out_sig();
  return compose(flip<T>(out[0], out[1]), compose(fb, flip<T>(in[1], in[0])));
}

}  // namespace

NumMap tau_conjugate(const NumMap& f, const Regime& r) { return tau_conjugate_impl(f, r); }
TMap tau_conjugate(const TMap& f, const Regime& r) { return tau_conjugate_impl(f, r); }

bool is_zero(const TMap& m) { return !first_nonzero(m).has_value(); }

std::optional<Residual> first_nonzero(const TMap& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return Residual{r, c, m(r, c)};
  return std::nullopt;
}

std::string Residual::describe() const {
  std::ostringstream os;
  os << "entry (" << row << "," << col << ") = " << value.to_string();
  return os.str();
}

NumMap evaluate(const TMap& m, const NumericPoint& p) {
  return m.map([&](const Scalar& s) { return evaluate(s, p); });
}

double max_norm(const NumMap& m) {
  double best = 0.0;
  for (const auto& e : m.entries()) best = std::max(best, std::abs(e));
  return best;
}

}  // namespace qlorentz
