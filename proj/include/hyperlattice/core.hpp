#pragma once

#include <optional>
#include <string>

#include "hyperlattice/types.hpp"

// Corner-sum transforms, partial-sum maps, and validity predicates.
namespace hyperlattice {

// 2-D corner-sum: Sigma(A)_{i,j} = sum of A over the top-left i x j block.
CornerSumMatrix sigma(const Matrix& m);
// Corner-sum of a Latin square, summing symbol values.
CornerSumMatrix sigma(const LatinSquare& l);

// Rectangular variant: (m+1) x (n+1) prefix-sum grid of an m x n matrix,
// returned as a Matrix whose (i+1, j+1) entry is the block sum up to (i, j).
Matrix sigma_rect(const Matrix& m);

// Exact inverse by inclusion-exclusion differencing. Requires a zero 0-row
// and 0-column.
Matrix sigma_inverse(const CornerSumMatrix& c);

// 3-D corner-sum: Xi(A)_{i,j,k} = triple prefix sum over [1..i]x[1..j]x[1..k].
CornerGrid3 xi(const Hypermatrix& a);
CornerGrid3 xi(const LatinSquare& l);

// Exact inverse via the 8-term alternating formula. Requires zero planes at
// index 0 in all three directions.
Hypermatrix xi_inverse(const CornerGrid3& c);

// P(A)_{i,j,k} = sum of A_{a,j,b} over a <= i, b <= k.
Hypermatrix partial_sum_hypermatrix(const Hypermatrix& a);

// Entry (i,j) = sum_k k * A_{i,j,k}: the cell-value array L(A). For a
// permutation hypermatrix this recovers the Latin square.
Matrix latin_like_square(const Hypermatrix& a);

// Sum of the horizontal planes of a corner-sum grid over k in [1..n],
// restricted to indices (i,j) in [0..n]^2.
CornerSumMatrix plane_sum(const CornerGrid3& c);
inline CornerSumMatrix plane_sum(const CornerSumHypermatrix& c) { return plane_sum(c.grid()); }

bool is_latin(const Matrix& grid);
bool is_asm(const Matrix& m);
bool is_permutation_matrix(const Matrix& m);

bool is_ashm(const Hypermatrix& a);
bool is_pashm(const Hypermatrix& a);
bool is_permutation_hypermatrix(const Hypermatrix& a);

bool is_corner_sum_matrix(const CornerSumMatrix& c);
// declared in types.hpp: bool is_corner_sum_hypermatrix(const CornerGrid3&);

// The three 2-D difference conditions characterising ASHM corner-sums: each
// mixed second difference of xi(A) lies in {0,1}.
bool ashm_difference_conditions(const CornerGrid3& c);

// True iff the corner-sum matrix of every plane of a, in all three
// directions, is sandwiched between Sigma(J_n) and Sigma(I_n) entrywise.
// Agrees with is_corner_sum_hypermatrix(xi(a)) on all inputs.
bool is_in_xi_preimage(const Hypermatrix& a);

// Necessary (not sufficient) membership check: all prefix and suffix sums
// along the three line directions lie in [1 - m, m] with
// m = min(i, j, n-i+1, n-j+1) over the two fixed indices.
bool check_partial_sum_bounds(const Hypermatrix& a);

// Lossless round trip between Hypermatrix and CellFormalSum.
CellFormalSum grid_notation(const Hypermatrix& a);
Hypermatrix from_grid_notation(const CellFormalSum& g);

// Compact cell strings, e.g. "1-2+3" for +1 at plane 1, -1 at plane 2,
// +1 at plane 3. Coefficients other than +-1 repeat the term.
std::string format_cell(const std::vector<CellFormalSum::Term>& cell);
std::vector<CellFormalSum::Term> parse_cell(const std::string& text);

// H(L) viewed back as a Latin square; nullopt when a is not a permutation
// hypermatrix.
std::optional<LatinSquare> to_latin_square(const Hypermatrix& a);

}  // namespace hyperlattice
