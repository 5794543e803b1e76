#include "qlorentz/tensor/linalg.hpp"

#include <utility>

namespace qlorentz {

Echelon row_reduce(ScalarMatrix m) {
  Echelon e;
  const std::size_t ncols = m.empty() ? 0 : m.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < m.size(); ++col) {
    std::size_t p = r;
    while (p < m.size() && m[p][col].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const Scalar inv = m[r][col].inverse();
    for (std::size_t c = col; c < ncols; ++c)
      if (!m[r][c].is_zero()) m[r][c] *= inv;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k == r || m[k][col].is_zero()) continue;
      const Scalar f = m[k][col];
      for (std::size_t c = col; c < ncols; ++c)
        if (!m[r][c].is_zero()) m[k][c] -= f * m[r][c];
    }
    e.pivots.push_back(col);
    ++r;
  }
  m.resize(r);
  e.rows = std::move(m);
  return e;
}

std::size_t rank(const ScalarMatrix& m) { return row_reduce(m).rank(); }

ScalarMatrix nullspace(const ScalarMatrix& m, std::size_t columns) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  ScalarMatrix basis;
  for (std::size_t f = 0; f < columns; ++f) {
    if (is_pivot[f]) continue;
    ScalarRow v(columns);
    v[f] = Scalar(1);
    for (std::size_t i = 0; i < e.rows.size(); ++i)
      if (!e.rows[i][f].is_zero()) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool row_space_contains(const ScalarMatrix& b, const ScalarMatrix& a) {
  ScalarMatrix both = b;
  both.insert(both.end(), a.begin(), a.end());
  return rank(both) == rank(b);
}

bool same_row_space(const ScalarMatrix& a, const ScalarMatrix& b) {
  return rank(a) == rank(b) && row_space_contains(b, a);
}

std::optional<ScalarMatrix> inverse(const ScalarMatrix& m) {
  const std::size_t n = m.size();
  ScalarMatrix aug(n, ScalarRow(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    if (m[r].size() != n) return std::nullopt;
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = m[r][c];
    aug[r][n + r] = Scalar(1);
  }
  Echelon e = row_reduce(std::move(aug));
  if (e.rank() != n || (n > 0 && e.pivots.back() != n - 1)) return std::nullopt;
  ScalarMatrix inv(n, ScalarRow(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv[r][c] = e.rows[r][n + c];
  return inv;
}

ScalarMatrix to_matrix(const TMap& m) {
  ScalarMatrix out(m.rows(), ScalarRow(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

ScalarRow row_of(const TMap& functional) {
  if (!functional.out_sig().empty()) throw SignatureMismatch("row_of expects a functional");
  return to_matrix(functional).front();
}

std::size_t rank(const TMap& m) { return rank(to_matrix(m)); }

TMap inverse(const TMap& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of a non-square map");
  auto inv = inverse(to_matrix(m));
  if (!inv) throw DomainError("map is singular");
  TMap out(m.out_sig(), m.in_sig());
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) = (*inv)[r][c];
  return out;
}

std::vector<TMap> annihilator_basis(const TMap& p) {
  if (!p.is_square()) throw SignatureMismatch("annihilator_basis needs a square map");
  const Echelon e = row_reduce(to_matrix(p));
  std::vector<TMap> out;
  for (const auto& row : e.rows) {
    TMap f(p.in_sig(), {});
    for (std::size_t c = 0; c < row.size(); ++c) f(0, c) = row[c];
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace qlorentz
