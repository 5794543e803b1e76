#pragma once

#include "qlorentz/rewrite/ncpoly.hpp"

namespace qlorentz::gen {

// Shared generator ids. Spinor indices A, B are 0-based here and 1-based in
// names ("u[1,2]"); vector index j = 2A + B, so x(0..3) = alpha..delta.
inline constexpr int kAlpha = 0, kBeta = 1, kGamma = 2, kDelta = 3;
inline constexpr int kCount = 32;

constexpr int x(int j) { return j; }
constexpr int x(int a, int b) { return 2 * a + b; }
constexpr int xp(int j) { return 4 + j; }
constexpr int u(int a, int b) { return 8 + 2 * a + b; }
constexpr int ub(int a, int b) { return 12 + 2 * a + b; }
constexpr int h(int j, int k) { return 16 + 4 * j + k; }

inline bool is_x(int id) { return id >= 0 && id < 4; }
inline bool is_xp(int id) { return id >= 4 && id < 8; }
inline bool is_u(int id) { return id >= 8 && id < 12; }
inline bool is_ub(int id) { return id >= 12 && id < 16; }
inline bool is_h(int id) { return id >= 16 && id < 32; }

}  // namespace qlorentz::gen

namespace qlorentz {

/// alpha < beta < gamma < delta except for real q and case 2, which use
/// beta < alpha < delta < gamma.
std::vector<int> minkowski_order(const Regime& r);

/// Only alpha..delta (ids 0..3).
Alphabet minkowski_alphabet(const Regime& r);

/// All 32 generators: x, x', u, ub, h, ordered u < ub < h < x < x' with the
/// Minkowski order inside both x copies. h has no star partner.
Alphabet full_alphabet(const Regime& r);

}  // namespace qlorentz
