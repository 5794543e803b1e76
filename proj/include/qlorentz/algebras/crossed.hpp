#pragma once

#include "qlorentz/algebras/minkowski.hpp"
#include "qlorentz/intertwiners/operators.hpp"

namespace qlorentz {

/// Minkowski rules on x plus the cross relations
///   x^{AB} u^C_D  -> T^{ABC}_{EKL}  u^E_D  x^{KL}
///   x^{AB} ub^C_D -> T'^{ABC}_{EKL} ub^E_D x^{KL}
/// over the full alphabet. u and ub words are left free.
RewriteSystem crossed_system(const Regime& r, Variant v);
RewriteSystem crossed_system(const Regime& r, const TMap& T, const TMap& Tp);
const RewriteSystem& crossed(const Regime& r, Variant v);

NCPoly crossed_reduce(const NCPoly& p, const Regime& r, Variant v);

/// The star of the crossed product: star the word, then move x back to the
/// right.
NCPoly crossed_star(const NCPoly& p, const Regime& r, Variant v);
NCPoly crossed_star(const NCPoly& p, const RewriteSystem& sys);

/// First pair (u or ub, x) on which applying the star twice does not return
/// the input.
std::optional<std::string> star_involution_residual(const RewriteSystem& sys);

Reports crossed_checks(const Regime& r, Variant v);

}  // namespace qlorentz
