#pragma once

#include <string>
#include <vector>

#include "qlorentz/algebras/symbols.hpp"
#include "qlorentz/intertwiners/report.hpp"
#include "qlorentz/rewrite/system.hpp"
#include "qlorentz/tensor/linalg.hpp"

namespace qlorentz {

enum class RelationSource { Derived, Table };
std::string to_string(RelationSource s);

/// sum_{j,k} f[4j+k] x_j x_k with x_j = generator offset + j.
NCPoly quadratic_form(const ScalarRow& f, int offset = 0);

/// Rows of coefficients over the 16 words x_j x_k (column 4j+k). Throws
/// DomainError on anything that is not a quadratic form in alpha..delta.
ScalarMatrix coefficient_matrix(const std::vector<NCPoly>& relations);

/// Kernel functionals of P'_12 Q_34 + P_12 Q'_34, composed with X^-1_23 and
/// read off x_12 x_34.
std::vector<NCPoly> derived_relations(const Regime& r);

/// The tabulated relations: the epsilon-dependent six in general, the
/// explicit unit-circle and real-q tables, and commutators at q = t = 1.
std::vector<NCPoly> table_relations(const Regime& r);

struct MinkowskiAlgebra {
  Regime regime;
  RelationSource source;
  std::vector<NCPoly> relations;
  RewriteSystem system;
};

/// Builds from the requested source after checking that the other source
/// spans the same space; throws SpanMismatch otherwise.
MinkowskiAlgebra minkowski_system(const Regime& r, RelationSource source = RelationSource::Table);

/// Cached table-sourced algebra.
const MinkowskiAlgebra& minkowski(const Regime& r);

/// Relations over the primed copy (generator ids shifted to x').
std::vector<RewriteRule> primed_rules(const RewriteSystem& sys);

Reports relation_checks(const Regime& r);

// Two reductions of q(qb^2+1) gamma*beta*alpha in the generic algebra:
// gamma*(beta*alpha) first and (gamma*beta)*alpha first.
struct PbwObstruction {
  NCPoly inner_first, outer_first;
  Scalar at_aad, at_abg;  // inner_first minus outer_first at these words
};

PbwObstruction pbw_obstruction_generic();
Reports pbw_checks();

/// E'_12 (tau E'bar)_34 X^-1_23 x_12 x_34, not reduced.
NCPoly minkowski_length(const Regime& r);
/// alpha delta/(2z) + delta alpha/(2 zbar) - gamma* gamma with z = q/t.
NCPoly mz_length(const Regime& r);
Reports length_checks(const Regime& r);

/// The M_z relations with beta replaced by gamma*, closed under star.
std::vector<NCPoly> mz_relations(const Regime& r);
CheckReport mz_presentation_check();

}  // namespace qlorentz
