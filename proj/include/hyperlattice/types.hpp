#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Dense integer array types for the combinatorial objects handled by this
// library. Index convention, used everywhere:
//   - Matrix, Hypermatrix, LatinSquare take 1-based indices in [1..n].
//   - CornerSumMatrix / CornerGrid3 / CornerSumHypermatrix take 0-based
//     indices in [0..n] and store the redundant zero boundary planes, so
//     differencing formulas can index entry (i-1, ...) without branching.
// Internal storage is flat row-major (outermost index first).
namespace hyperlattice {

inline constexpr int kMaxOrder = 64;

inline void require_order(int n) {
    if (n < 1 || n > kMaxOrder)
        throw std::invalid_argument("order must be in [1, " + std::to_string(kMaxOrder) + "]");
}

// Rectangular integer matrix, indices (i,j) in [1..rows]x[1..cols].
class Matrix {
public:
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {
        if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
    }
    explicit Matrix(const std::vector<std::vector<int>>& grid);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    int& at(int i, int j) { return data_[idx(i, j)]; }
    int at(int i, int j) const { return data_[idx(i, j)]; }

    const std::vector<int>& data() const { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    size_t idx(int i, int j) const {
        if (i < 1 || i > rows_ || j < 1 || j > cols_) throw std::out_of_range("matrix index");
        return static_cast<size_t>(i - 1) * cols_ + (j - 1);
    }
    int rows_, cols_;
    std::vector<int> data_;
};

// (n+1)x(n+1) prefix-sum grid with indices in [0..n]. Unvalidated storage;
// the corner-sum matrix invariants are checked by is_corner_sum_matrix.
class CornerSumMatrix {
public:
    explicit CornerSumMatrix(int n)
        : n_(n), data_(static_cast<size_t>(n + 1) * (n + 1), 0) {
        require_order(n);
    }
    explicit CornerSumMatrix(const std::vector<std::vector<int>>& grid);

    int order() const { return n_; }
    int& at(int i, int j) { return data_[idx(i, j)]; }
    int at(int i, int j) const { return data_[idx(i, j)]; }
    const std::vector<int>& data() const { return data_; }

    friend bool operator==(const CornerSumMatrix&, const CornerSumMatrix&) = default;

private:
    size_t idx(int i, int j) const {
        if (i < 0 || i > n_ || j < 0 || j > n_) throw std::out_of_range("corner-sum index");
        return static_cast<size_t>(i) * (n_ + 1) + j;
    }
    int n_;
    std::vector<int> data_;
};

// n x n x n integer array, indices (i,j,k) in [1..n]^3. Unvalidated raw
// storage; object-class predicates (is_ashm, ...) are explicit.
class Hypermatrix {
public:
    explicit Hypermatrix(int n)
        : n_(n), data_(static_cast<size_t>(n) * n * n, 0) {
        require_order(n);
    }

    int order() const { return n_; }
    int& at(int i, int j, int k) { return data_[idx(i, j, k)]; }
    int at(int i, int j, int k) const { return data_[idx(i, j, k)]; }
    const std::vector<int>& data() const { return data_; }
    std::vector<int>& mutable_data() { return data_; }

    // Horizontal plane A_{**k} as a matrix indexed (i,j).
    Matrix plane(int k) const;
    // Plane with the first index fixed, indexed (j,k).
    Matrix row_plane(int i) const;
    // Plane with the second index fixed, indexed (i,k).
    Matrix col_plane(int j) const;

    Hypermatrix& operator+=(const Hypermatrix& o);
    friend Hypermatrix operator+(Hypermatrix a, const Hypermatrix& b) { return a += b; }
    friend bool operator==(const Hypermatrix&, const Hypermatrix&) = default;

private:
    size_t idx(int i, int j, int k) const {
        if (i < 1 || i > n_ || j < 1 || j > n_ || k < 1 || k > n_)
            throw std::out_of_range("hypermatrix index");
        return (static_cast<size_t>(i - 1) * n_ + (j - 1)) * n_ + (k - 1);
    }
    int n_;
    std::vector<int> data_;
};

// (n+1)^3 integer array with indices in [0..n]^3; unvalidated carrier for
// triple prefix sums.
class CornerGrid3 {
public:
    explicit CornerGrid3(int n)
        : n_(n), data_(static_cast<size_t>(n + 1) * (n + 1) * (n + 1), 0) {
        require_order(n);
    }

    int order() const { return n_; }
    int& at(int i, int j, int k) { return data_[idx(i, j, k)]; }
    int at(int i, int j, int k) const { return data_[idx(i, j, k)]; }
    const std::vector<int>& data() const { return data_; }
    std::vector<int>& mutable_data() { return data_; }

    friend bool operator==(const CornerGrid3&, const CornerGrid3&) = default;

private:
    size_t idx(int i, int j, int k) const {
        if (i < 0 || i > n_ || j < 0 || j > n_ || k < 0 || k > n_)
            throw std::out_of_range("corner grid index");
        return (static_cast<size_t>(i) * (n_ + 1) + j) * (n_ + 1) + k;
    }
    int n_;
    std::vector<int> data_;
};

// Validity of the boundary and step constraints is checked in core.cpp.
bool is_corner_sum_hypermatrix(const CornerGrid3& c);

// A CornerGrid3 whose constructor enforces the corner-sum hypermatrix
// invariants; the lattice element type.
class CornerSumHypermatrix {
public:
    explicit CornerSumHypermatrix(CornerGrid3 grid);

    // For enumerators that guarantee validity by construction.
    struct trusted_t {};
    CornerSumHypermatrix(CornerGrid3 grid, trusted_t) : grid_(std::move(grid)) {}

    int order() const { return grid_.order(); }
    int at(int i, int j, int k) const { return grid_.at(i, j, k); }
    const CornerGrid3& grid() const { return grid_; }
    const std::vector<int>& data() const { return grid_.data(); }

    friend bool operator==(const CornerSumHypermatrix&, const CornerSumHypermatrix&) = default;

private:
    CornerGrid3 grid_;
};

// n x n symbol grid over [1..n]; each symbol once per row and column.
// The constructor rejects anything else.
class LatinSquare {
public:
    explicit LatinSquare(Matrix cells);
    explicit LatinSquare(const std::vector<std::vector<int>>& grid) : LatinSquare(Matrix(grid)) {}

    int order() const { return cells_.rows(); }
    int at(int i, int j) const { return cells_.at(i, j); }
    const Matrix& cells() const { return cells_; }

    // Permutation hypermatrix H(L): positions of symbol k form plane k.
    Hypermatrix to_hypermatrix() const;

    friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

private:
    Matrix cells_;
};

// Grid notation: cell (i,j) lists the nonzero entries of the vertical line
// A_{ij*} as signed plane indices, in increasing plane order.
class CellFormalSum {
public:
    struct Term {
        int plane;  // in [1..n]
        int coeff;  // nonzero
        friend bool operator==(const Term&, const Term&) = default;
    };

    explicit CellFormalSum(int n)
        : n_(n), cells_(static_cast<size_t>(n) * n) {
        require_order(n);
    }

    int order() const { return n_; }
    std::vector<Term>& cell(int i, int j) { return cells_[idx(i, j)]; }
    const std::vector<Term>& cell(int i, int j) const { return cells_[idx(i, j)]; }

    friend bool operator==(const CellFormalSum&, const CellFormalSum&) = default;

private:
    size_t idx(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("cell index");
        return static_cast<size_t>(i - 1) * n_ + (j - 1);
    }
    int n_;
    std::vector<std::vector<Term>> cells_;
};

}  // namespace hyperlattice
