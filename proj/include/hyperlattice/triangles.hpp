#pragma once

#include <string>
#include <vector>

#include "hyperlattice/types.hpp"

// Monotone hypertriangles and the classical 2-D monotone triangles.
namespace hyperlattice {

// Triangular 3-D array: row (i,k) holds i*k weakly increasing symbols from
// [1..n]. Canonical storage is the multiplicity table mult(i,j,k) = number
// of occurrences of symbol j in row (i,k); the sorted row is a view.
class MonotoneHypertriangle {
public:
    explicit MonotoneHypertriangle(int n)
        : n_(n), mult_(static_cast<size_t>(n) * n * n, 0) {
        require_order(n);
    }

    int order() const { return n_; }
    int& mult(int i, int j, int k) { return mult_[idx(i, j, k)]; }
    int mult(int i, int j, int k) const { return mult_[idx(i, j, k)]; }
    const std::vector<int>& data() const { return mult_; }

    // Row (i,k) expanded to its weakly increasing symbol list.
    std::vector<int> row(int i, int k) const;
    // The m-th symbol of row (i,k), m in [1..i*k].
    int at(int i, int m, int k) const;

    friend bool operator==(const MonotoneHypertriangle&, const MonotoneHypertriangle&) = default;

private:
    size_t idx(int i, int j, int k) const {
        if (i < 1 || i > n_ || j < 1 || j > n_ || k < 1 || k > n_)
            throw std::out_of_range("hypertriangle index");
        return (static_cast<size_t>(i - 1) * n_ + (j - 1)) * n_ + (k - 1);
    }
    int n_;
    std::vector<int> mult_;
};

// The four defining conditions, checked on the multiplicity table. Row and
// plane growth conditions include the transition from the empty row 0 and
// plane 0, which the remaining conditions already imply for valid tables.
bool is_monotone_hypertriangle(const MonotoneHypertriangle& t);

// Delta(a): row (i,k) lists symbol j with multiplicity P(a)_{i,j,k}.
// Throws if P(a) has a negative entry.
MonotoneHypertriangle to_triangle(const Hypermatrix& a);

// Inverse map: rebuild P from the multiplicities and difference along i and
// k. Throws if t is not a valid monotone hypertriangle.
Hypermatrix from_triangle(const MonotoneHypertriangle& t);

// Both interlacing chains, for every entry where the compared index is in
// range. Necessary but not sufficient for monotonicity.
bool check_interlacing(const MonotoneHypertriangle& t);

// Entrywise <= over all row positions. Under the bijection this encodes the
// Bruhat order with the inequality direction reversed relative to
// corner-sum domination.
bool triangle_leq(const MonotoneHypertriangle& a, const MonotoneHypertriangle& b);

// Classical 2-D path, kept separate as an oracle.
// p(A): entry (i,j) = sum of column j of A down to row i. A (0,1)-matrix
// when A is an ASM.
Matrix partial_sum_matrix(const Matrix& a);
// Rows of the monotone triangle of an ASM (row i = positions of ones in
// row i of p(A)).
std::vector<std::vector<int>> monotone_triangle(const Matrix& asm_matrix);
Matrix asm_from_monotone_triangle(const std::vector<std::vector<int>>& rows);
bool is_monotone_triangle(const std::vector<std::vector<int>>& rows, int n);

// Centered triangular text layout, planes left to right.
std::string render_triangle(const MonotoneHypertriangle& t);

}  // namespace hyperlattice
