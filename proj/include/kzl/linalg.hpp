#ifndef KZL_LINALG_HPP
#define KZL_LINALG_HPP

#include <vector>

#include "kzl/rational.hpp"

namespace kzl {

// Dense exact-rational matrices, just big enough for the degree-one linear
// algebra this library needs. Row-major.
using RatRow = std::vector<Rational>;
using RatMatrix = std::vector<RatRow>;

// Reduced row echelon form in place; returns the pivot columns in order.
std::vector<int> rref(RatMatrix& m);

int rank(RatMatrix m);

// Basis of the right kernel {v : m v = 0}, one vector per free column, in
// reduced echelon form (deterministic).
std::vector<RatRow> kernel_basis(RatMatrix m, int cols);

// True if row lies in the row span of basis (basis must be in RREF).
bool in_row_span(const RatMatrix& rref_basis, const std::vector<int>& pivots,
                 const RatRow& row);

// Span comparison helpers for sets of coefficient vectors.
bool span_contains(const RatMatrix& vectors, const RatRow& candidate);
bool span_subset(const RatMatrix& sub, const RatMatrix& super);

}  // namespace kzl

#endif
