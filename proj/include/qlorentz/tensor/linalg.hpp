#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qlorentz/tensor/tmap.hpp"

namespace qlorentz {

using ScalarRow = std::vector<Scalar>;
using ScalarMatrix = std::vector<ScalarRow>;

/// Reduced row echelon form. Pivots are taken on the first nonzero entry in
/// column order; zero rows are dropped.
struct Echelon {
  ScalarMatrix rows;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return rows.size(); }
};

Echelon row_reduce(ScalarMatrix m);
std::size_t rank(const ScalarMatrix& m);
// Basis of {v : m v = 0}.
ScalarMatrix nullspace(const ScalarMatrix& m, std::size_t columns);
bool same_row_space(const ScalarMatrix& a, const ScalarMatrix& b);
// True when every row of `a` lies in the row space of `b`.
bool row_space_contains(const ScalarMatrix& b, const ScalarMatrix& a);
std::optional<ScalarMatrix> inverse(const ScalarMatrix& m);

ScalarMatrix to_matrix(const TMap& m);
ScalarRow row_of(const TMap& functional);

std::size_t rank(const TMap& m);
// Throws DomainError when m is not square or singular.
TMap inverse(const TMap& m);

/// Functionals (maps to the empty signature) spanning the row space of p,
/// one per independent row.
std::vector<TMap> annihilator_basis(const TMap& p);

}  // namespace qlorentz
