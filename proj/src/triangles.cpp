#include "hyperlattice/triangles.hpp"

#include <algorithm>
#include <sstream>

#include "hyperlattice/core.hpp"

namespace hyperlattice {

std::vector<int> MonotoneHypertriangle::row(int i, int k) const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(i) * k);
    for (int j = 1; j <= n_; ++j) out.insert(out.end(), mult(i, j, k), j);
    return out;
}

int MonotoneHypertriangle::at(int i, int m, int k) const {
    if (m < 1) throw std::out_of_range("hypertriangle row position");
    for (int j = 1; j <= n_; ++j) {
        m -= mult(i, j, k);
        if (m <= 0) return j;
    }
    throw std::out_of_range("hypertriangle row position");
}

bool is_monotone_hypertriangle(const MonotoneHypertriangle& t) {
    const int n = t.order();
    // Conditions 1 and 2: row sizes and per-symbol multiplicity bounds.
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) {
            int total = 0;
            for (int j = 1; j <= n; ++j) {
                int m = t.mult(i, j, k);
                if (m < std::max(0, i + k - n) || m > std::min(i, k)) return false;
                total += m;
            }
            if (total != i * k) return false;
        }
    // Conditions 3 and 4 on prefix counts Q(i,j,k) = #{entries <= j in row
    // (i,k)}, including the transitions from the empty row 0 and plane 0.
    auto q = [&](int i, int j, int k) {
        if (i == 0 || k == 0) return 0;
        int s = 0;
        for (int x = 1; x <= j; ++x) s += t.mult(i, x, k);
        return s;
    };
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
            for (int i = 1; i <= n; ++i) {
                int d = q(i, j, k) - q(i - 1, j, k);
                if (d < std::max(0, j + k - n) || d > std::min(j, k)) return false;
                d = q(i, j, k) - q(i, j, k - 1);
                if (d < std::max(0, i + j - n) || d > std::min(i, j)) return false;
            }
    return true;
}

MonotoneHypertriangle to_triangle(const Hypermatrix& a) {
    const int n = a.order();
    Hypermatrix p = partial_sum_hypermatrix(a);
    MonotoneHypertriangle t(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (p.at(i, j, k) < 0)
                    throw std::invalid_argument("to_triangle: negative partial sum");
                t.mult(i, j, k) = p.at(i, j, k);
            }
    return t;
}

Hypermatrix from_triangle(const MonotoneHypertriangle& t) {
    if (!is_monotone_hypertriangle(t))
        throw std::invalid_argument("from_triangle: not a monotone hypertriangle");
    const int n = t.order();
    Hypermatrix a(n);
    auto p = [&](int i, int j, int k) { return (i == 0 || k == 0) ? 0 : t.mult(i, j, k); };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                a.at(i, j, k) = p(i, j, k) - p(i - 1, j, k) - p(i, j, k - 1) + p(i - 1, j, k - 1);
    return a;
}

bool check_interlacing(const MonotoneHypertriangle& t) {
    const int n = t.order();
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) {
            std::vector<int> row = t.row(i, k);
            for (int j = 1; j <= i * k; ++j) {
                const int m = row[j - 1];
                if (i < n) {
                    std::vector<int> next = t.row(i + 1, k);
                    int lo = j + std::max(0, m + k - n), hi = j + std::min(m - 1, k);
                    if (lo >= 1 && lo <= static_cast<int>(next.size()) && next[lo - 1] > m)
                        return false;
                    if (hi >= 1 && hi <= static_cast<int>(next.size()) && m > next[hi - 1])
                        return false;
                }
                if (k < n) {
                    std::vector<int> next = t.row(i, k + 1);
                    int lo = j + std::max(0, i + m - n), hi = j + std::min(i, m - 1);
                    if (lo >= 1 && lo <= static_cast<int>(next.size()) && next[lo - 1] > m)
                        return false;
                    if (hi >= 1 && hi <= static_cast<int>(next.size()) && m > next[hi - 1])
                        return false;
                }
            }
        }
    return true;
}

bool triangle_leq(const MonotoneHypertriangle& a, const MonotoneHypertriangle& b) {
    if (a.order() != b.order()) throw std::invalid_argument("triangle_leq: order mismatch");
    const int n = a.order();
    // Entrywise a_{i,j,k} <= b_{i,j,k} over sorted rows is equivalent to
    // prefix counts of a dominating those of b.
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) {
            int qa = 0, qb = 0;
            for (int j = 1; j <= n; ++j) {
                qa += a.mult(i, j, k);
                qb += b.mult(i, j, k);
                if (qa < qb) return false;
            }
        }
    return true;
}

Matrix partial_sum_matrix(const Matrix& a) {
    Matrix p(a.rows(), a.cols());
    for (int j = 1; j <= a.cols(); ++j) {
        int s = 0;
        for (int i = 1; i <= a.rows(); ++i) {
            s += a.at(i, j);
            p.at(i, j) = s;
        }
    }
    return p;
}

std::vector<std::vector<int>> monotone_triangle(const Matrix& asm_matrix) {
    if (!is_asm(asm_matrix)) throw std::invalid_argument("monotone_triangle: not an ASM");
    const int n = asm_matrix.rows();
    Matrix p = partial_sum_matrix(asm_matrix);
    std::vector<std::vector<int>> rows(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (p.at(i, j) == 1) rows[i - 1].push_back(j);
    return rows;
}

Matrix asm_from_monotone_triangle(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    if (!is_monotone_triangle(rows, n))
        throw std::invalid_argument("asm_from_monotone_triangle: not a monotone triangle");
    Matrix p(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j : rows[i - 1]) p.at(i, j) = 1;
    Matrix a(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) a.at(i, j) = p.at(i, j) - (i > 1 ? p.at(i - 1, j) : 0);
    return a;
}

bool is_monotone_triangle(const std::vector<std::vector<int>>& rows, int n) {
    if (static_cast<int>(rows.size()) != n) return false;
    for (int i = 1; i <= n; ++i) {
        const auto& r = rows[i - 1];
        if (static_cast<int>(r.size()) != i) return false;
        for (int j = 0; j < i; ++j) {
            if (r[j] < 1 || r[j] > n) return false;
            if (j > 0 && r[j] <= r[j - 1]) return false;
        }
        if (i > 1) {
            const auto& prev = rows[i - 2];
            for (int j = 0; j + 1 < i; ++j)
                if (!(r[j] <= prev[j] && prev[j] <= r[j + 1])) return false;
        }
    }
    return true;
}

std::string render_triangle(const MonotoneHypertriangle& t) {
    const int n = t.order();
    std::ostringstream out;
    for (int k = 1; k <= n; ++k) {
        out << "plane " << k << ":\n";
        // Row i has i*k entries; center rows against the widest row.
        const int width = 2 * n * k - 1;
        for (int i = 1; i <= n; ++i) {
            std::vector<int> row = t.row(i, k);
            int pad = (width - (2 * i * k - 1)) / 2;
            out << std::string(pad, ' ');
            for (size_t m = 0; m < row.size(); ++m) {
                if (m) out << ' ';
                out << row[m];
            }
            out << '\n';
        }
    }
    return out.str();
}

}  // namespace hyperlattice
