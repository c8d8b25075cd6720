#include "kzl/linalg.hpp"

namespace kzl {

std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    Rational inv = Rational(1) / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);  // drop zero rows
  return pivots;
}

int rank(RatMatrix m) { return static_cast<int>(rref(m).size()); }

std::vector<RatRow> kernel_basis(RatMatrix m, int cols) {
  for (auto& row : m)
    if (static_cast<int>(row.size()) != cols) throw Error("ragged matrix");
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatRow> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatRow v(cols, Rational(0));
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_row_span(const RatMatrix& rref_basis, const std::vector<int>& pivots,
                 const RatRow& row) {
  RatRow v = row;
  for (size_t r = 0; r < pivots.size(); ++r) {
    const Rational& f = v[pivots[r]];
    if (f == 0) continue;
    Rational factor = f;
    for (size_t j = 0; j < v.size(); ++j) v[j] -= factor * rref_basis[r][j];
  }
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool span_contains(const RatMatrix& vectors, const RatRow& candidate) {
  RatMatrix m = vectors;
  auto pivots = rref(m);
  return in_row_span(m, pivots, candidate);
}

bool span_subset(const RatMatrix& sub, const RatMatrix& super) {
  RatMatrix m = super;
  auto pivots = rref(m);
  for (const auto& row : sub)
    if (!in_row_span(m, pivots, row)) return false;
  return true;
}

}  // namespace kzl
