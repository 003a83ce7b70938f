#include "hyperlattice/types.hpp"

#include <algorithm>

#include "hyperlattice/core.hpp"

namespace hyperlattice {

Matrix::Matrix(const std::vector<std::vector<int>>& grid)
    : Matrix(static_cast<int>(grid.size()),
             grid.empty() ? 0 : static_cast<int>(grid.front().size())) {
    for (int i = 1; i <= rows_; ++i) {
        if (static_cast<int>(grid[i - 1].size()) != cols_)
            throw std::invalid_argument("ragged matrix rows");
        for (int j = 1; j <= cols_; ++j) at(i, j) = grid[i - 1][j - 1];
    }
}

CornerSumMatrix::CornerSumMatrix(const std::vector<std::vector<int>>& grid)
    : CornerSumMatrix(static_cast<int>(grid.size()) - 1) {
    for (int i = 0; i <= n_; ++i) {
        if (static_cast<int>(grid[i].size()) != n_ + 1)
            throw std::invalid_argument("corner-sum grid must be (n+1)x(n+1)");
        for (int j = 0; j <= n_; ++j) at(i, j) = grid[i][j];
    }
}

Matrix Hypermatrix::plane(int k) const {
    Matrix m(n_, n_);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) m.at(i, j) = at(i, j, k);
    return m;
}

Matrix Hypermatrix::row_plane(int i) const {
    Matrix m(n_, n_);
    for (int j = 1; j <= n_; ++j)
        for (int k = 1; k <= n_; ++k) m.at(j, k) = at(i, j, k);
    return m;
}

Matrix Hypermatrix::col_plane(int j) const {
    Matrix m(n_, n_);
    for (int i = 1; i <= n_; ++i)
        for (int k = 1; k <= n_; ++k) m.at(i, k) = at(i, j, k);
    return m;
}

Hypermatrix& Hypermatrix::operator+=(const Hypermatrix& o) {
    if (o.n_ != n_) throw std::invalid_argument("order mismatch");
    for (size_t t = 0; t < data_.size(); ++t) data_[t] += o.data_[t];
    return *this;
}

CornerSumHypermatrix::CornerSumHypermatrix(CornerGrid3 grid) : grid_(std::move(grid)) {
    if (!is_corner_sum_hypermatrix(grid_))
        throw std::invalid_argument("not a corner-sum hypermatrix");
}

LatinSquare::LatinSquare(Matrix cells) : cells_(std::move(cells)) {
    if (!cells_.square()) throw std::invalid_argument("Latin square must be square");
    require_order(cells_.rows());
    if (!is_latin(cells_)) throw std::invalid_argument("not a Latin square");
}

Hypermatrix LatinSquare::to_hypermatrix() const {
    const int n = order();
    Hypermatrix h(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) h.at(i, j, cells_.at(i, j)) = 1;
    return h;
}

}  // namespace hyperlattice
