#include "hyperlattice/rank.hpp"

#include <numeric>
#include <stdexcept>

#include "hyperlattice/core.hpp"
#include "hyperlattice/lattice.hpp"

namespace hyperlattice {

namespace {

long long pow5_term(int n, long long a5, long long a4, long long a3, long long a2,
                    long long a1_even, long long a1_odd, long long divisor) {
    long long m = n;
    long long num = a5 * m * m * m * m * m + a4 * m * m * m * m + a3 * m * m * m + a2 * m * m +
                    (n % 2 == 0 ? a1_even : a1_odd) * m;
    if (num % divisor != 0) throw std::logic_error("closed form is not integral");
    return num / divisor;
}

long long entry_sum(const CornerGrid3& g) {
    return std::accumulate(g.data().begin(), g.data().end(), 0ll);
}

// (1/2) sum (i-j)^2 (n - L_ij) over the cell-value array.
long long inversion_weight(const Matrix& cells) {
    int n = cells.rows();
    long long s = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            s += static_cast<long long>(i - j) * (i - j) * (n - cells.at(i, j));
    if (s % 2 != 0) throw std::logic_error("inversion weight is not even");
    return s / 2;
}

}  // namespace

long long rho(const Hypermatrix& l) {
    if (!is_in_xi_preimage(l)) throw std::invalid_argument("not in the lattice preimage");
    int n = l.order();
    long long direct = entry_sum(xi(l));
    Matrix cells = latin_like_square(l);
    long long weighted = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            weighted +=
                static_cast<long long>(n - i + 1) * (n - j + 1) * (n - cells.at(i, j) + 1);
    if (direct != weighted) throw std::logic_error("rho paths disagree");
    return direct;
}

long long rho(const CornerSumHypermatrix& c) { return entry_sum(c.grid()); }

long long m_closed_form(int n) {
    require_order(n);
    long long m = pow5_term(n, 69, 180, 170, 60, 16, 1, 480);
    if (m != rho(minimum_element(n))) throw std::logic_error("m(n) disagrees with summation");
    return m;
}

long long rank_of(const Hypermatrix& l) {
    int n = l.order();
    long long r = m_closed_form(n) - rho(l);
    long long alt = pow5_term(n, -11, 20, 10, -20, 16, 1, 480) + inversion_weight(latin_like_square(l));
    if (r != alt) throw std::logic_error("rank paths disagree");
    return r;
}

long long rank_of(const CornerSumHypermatrix& c) { return rank_of(xi_inverse(c.grid())); }

RankProfile rank_profile(const CornerSumHypermatrix& c) {
    return {c.order(), rho(c), rank_of(c)};
}

long long asm_rank(const Matrix& m) {
    if (!is_asm(m)) throw std::invalid_argument("not an alternating sign matrix");
    int n = m.rows();
    long long half = 0, weighted = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            half += static_cast<long long>(i - j) * (i - j) * m.at(i, j);
            weighted += static_cast<long long>(n - i + 1) * (n - j + 1) * m.at(i, j);
        }
    if (half % 2 != 0) throw std::logic_error("asm rank is not even");
    long long rho_id = static_cast<long long>(n) * (n + 1) * (2 * n + 1) / 6;
    if (half / 2 != rho_id - weighted) throw std::logic_error("asm rank paths disagree");
    return half / 2;
}

bool rank_sum_identity_check(const LatinSquare& l) {
    int n = l.order();
    Hypermatrix h = l.to_hypermatrix();
    long long target = static_cast<long long>(n) * n * (n * n - 1) / 12;
    long long sym = 0, row = 0, col = 0;
    for (int t = 1; t <= n; ++t) {
        sym += asm_rank(h.plane(t));
        row += asm_rank(h.row_plane(t));
        col += asm_rank(h.col_plane(t));
    }
    return sym == target && row == target && col == target;
}

bool sigma_sum_identity_check(const Hypermatrix& l) {
    int n = l.order();
    CornerSumMatrix cs = sigma(latin_like_square(l));
    long long total = rho(l) + std::accumulate(cs.data().begin(), cs.data().end(), 0ll);
    return total == static_cast<long long>(n) * n * (n + 1) * (n + 1) * (n + 1) / 4;
}

long long lattice_rank(int n) {
    require_order(n);
    long long r = pow5_term(n, 9, 0, -10, 0, 16, 1, 240);
    long long diff = rho(minimum_element(n)) - rho(maximum_element(n));
    if (r != diff) throw std::logic_error("lattice rank disagrees with the extremal difference");
    return r;
}

}  // namespace hyperlattice
