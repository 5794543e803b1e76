#include "qlorentz/algebras/symbols.hpp"

#include <string>

namespace qlorentz {

std::vector<int> minkowski_order(const Regime& r) {
  using namespace gen;
  if (r.kind() == Regime::Kind::RealQ || r.kind() == Regime::Kind::Case2) return {kBeta, kAlpha, kDelta, kGamma};
  return {kAlpha, kBeta, kGamma, kDelta};
}

namespace {

const char* const kNames[] = {"alpha", "beta", "gamma", "delta"};

void add_x(Alphabet& a, const char* suffix) {
  for (const char* n : kNames) a.add(std::string(n) + suffix);
}

}  // namespace

Alphabet minkowski_alphabet(const Regime& r) {
  using namespace gen;
  Alphabet a;
  add_x(a, "");
  a.set_star(kBeta, kGamma);
  a.set_order(minkowski_order(r));
  return a;
}

Alphabet full_alphabet(const Regime& r) {
  using namespace gen;
  Alphabet a;
  add_x(a, "");
  add_x(a, "'");
  auto idx = [](int k) { return "[" + std::to_string(k / 2 + 1) + "," + std::to_string(k % 2 + 1) + "]"; };
  for (int k = 0; k < 4; ++k) a.add("u" + idx(k));
  for (int k = 0; k < 4; ++k) a.add("ub" + idx(k));
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) a.add("h[" + std::to_string(j) + "," + std::to_string(k) + "]");
  a.set_star(x(kBeta), x(kGamma));
  a.set_star(xp(kBeta), xp(kGamma));
  for (int k = 0; k < 4; ++k) a.set_star(u(k / 2, k % 2), ub(k / 2, k % 2));
  for (int k = 0; k < 16; ++k) a.clear_star(h(k / 4, k % 4));

  std::vector<int> order;
  for (int k = 0; k < 4; ++k) order.push_back(u(k / 2, k % 2));
  for (int k = 0; k < 4; ++k) order.push_back(ub(k / 2, k % 2));
  for (int k = 0; k < 16; ++k) order.push_back(h(k / 4, k % 4));
  const auto mink = minkowski_order(r);
  for (int j : mink) order.push_back(x(j));
  for (int j : mink) order.push_back(xp(j));
  a.set_order(order);
  return a;
}

}  // namespace qlorentz
