#pragma once

#include <string>
#include <vector>

#include "qlorentz/algebras/minkowski.hpp"
#include "qlorentz/intertwiners/operators.hpp"

namespace qlorentz {

/// Two copies of Minkowski space and free h symbols with
///   x'^j x^k    -> sigma x^k x'^j
///   x^j h^k_l   -> W^{jk}_{ab} h^a_l x^b
///   x'^j h^k_l  -> h^k_l x'^j
/// W is the first-variant x-h commutation matrix.
RewriteSystem braided_system(const Regime& r, const Scalar& sigma);

/// Only the x, x' rules: both Minkowski copies and the braiding.
RewriteSystem braiding_system(const Regime& r, const Scalar& sigma);

/// Intertwiner checks whose passing justifies the steps of the Delta script:
/// the x-h rule and Pminus h_1 h_2 = h_1 h_2 Pminus.
const std::vector<std::string>& delta_certificates();
Reports delta_certificate_checks(const Regime& r);

/// Pminus rebuilt from E, E', their conjugates and X; equality with the
/// stored Pminus shows it is assembled from morphisms of u and ub.
CheckReport pminus_morphism(const Regime& r);

/// Expands Pminus Delta x_1 Delta x_2 with Delta x = x + h x' and reduces it
/// row by row: the x x part by the Minkowski rules, the h h part after the
/// substitution Pminus h_1 h_2 => h_1 h_2 Pminus, the linear part by the
/// x-h and x'-x rules. Passes when everything reduces to 0. Throws
/// OracleUnverified unless every delta_certificates() id passed for r.
CheckReport braided_delta_check(const Regime& r, const Scalar& sigma, const Reports& certificates,
                                std::string id = "delta.preserves-relations");

Reports delta_checks(const Regime& r);

}  // namespace qlorentz
