#include "hyperlattice/core.hpp"

#include <algorithm>
#include <cctype>

namespace hyperlattice {

namespace {

// Nonzero entries of a +-1/0 sequence alternate in sign, beginning and
// ending with +1, iff every prefix sum is 0 or 1 and the total is 1.
bool alternating_line(const std::vector<int>& line) {
    int s = 0;
    for (int v : line) {
        if (v < -1 || v > 1) return false;
        s += v;
        if (s < 0 || s > 1) return false;
    }
    return s == 1;
}

}  // namespace

CornerSumMatrix sigma(const Matrix& m) {
    if (!m.square()) throw std::invalid_argument("sigma: use sigma_rect for non-square matrices");
    const int n = m.rows();
    CornerSumMatrix c(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            c.at(i, j) = c.at(i - 1, j) + c.at(i, j - 1) - c.at(i - 1, j - 1) + m.at(i, j);
    return c;
}

CornerSumMatrix sigma(const LatinSquare& l) { return sigma(l.cells()); }

Matrix sigma_rect(const Matrix& m) {
    Matrix c(m.rows() + 1, m.cols() + 1);
    for (int i = 1; i <= m.rows(); ++i)
        for (int j = 1; j <= m.cols(); ++j)
            c.at(i + 1, j + 1) =
                c.at(i, j + 1) + c.at(i + 1, j) - c.at(i, j) + m.at(i, j);
    return c;
}

Matrix sigma_inverse(const CornerSumMatrix& c) {
    const int n = c.order();
    for (int t = 0; t <= n; ++t)
        if (c.at(0, t) != 0 || c.at(t, 0) != 0)
            throw std::invalid_argument("sigma_inverse: 0-row and 0-column must be zero");
    Matrix m(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m.at(i, j) = c.at(i, j) - c.at(i - 1, j) - c.at(i, j - 1) + c.at(i - 1, j - 1);
    return m;
}

CornerGrid3 xi(const Hypermatrix& a) {
    const int n = a.order();
    CornerGrid3 c(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                c.at(i, j, k) = c.at(i - 1, j, k) + c.at(i, j - 1, k) + c.at(i, j, k - 1)
                              - c.at(i - 1, j - 1, k) - c.at(i - 1, j, k - 1)
                              - c.at(i, j - 1, k - 1) + c.at(i - 1, j - 1, k - 1)
                              + a.at(i, j, k);
    return c;
}

CornerGrid3 xi(const LatinSquare& l) { return xi(l.to_hypermatrix()); }

Hypermatrix xi_inverse(const CornerGrid3& c) {
    const int n = c.order();
    for (int s = 0; s <= n; ++s)
        for (int t = 0; t <= n; ++t)
            if (c.at(0, s, t) != 0 || c.at(s, 0, t) != 0 || c.at(s, t, 0) != 0)
                throw std::invalid_argument("xi_inverse: planes at index 0 must be zero");
    Hypermatrix a(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                a.at(i, j, k) = c.at(i, j, k) - c.at(i - 1, j, k) - c.at(i, j - 1, k)
                              - c.at(i, j, k - 1) + c.at(i - 1, j - 1, k)
                              + c.at(i - 1, j, k - 1) + c.at(i, j - 1, k - 1)
                              - c.at(i - 1, j - 1, k - 1);
    return a;
}

Hypermatrix partial_sum_hypermatrix(const Hypermatrix& a) {
    const int n = a.order();
    Hypermatrix p(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                int v = a.at(i, j, k);
                if (i > 1) v += p.at(i - 1, j, k);
                if (k > 1) v += p.at(i, j, k - 1);
                if (i > 1 && k > 1) v -= p.at(i - 1, j, k - 1);
                p.at(i, j, k) = v;
            }
    return p;
}

Matrix latin_like_square(const Hypermatrix& a) {
    const int n = a.order();
    Matrix m(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int v = 0;
            for (int k = 1; k <= n; ++k) v += k * a.at(i, j, k);
            m.at(i, j) = v;
        }
    return m;
}

CornerSumMatrix plane_sum(const CornerGrid3& c) {
    const int n = c.order();
    CornerSumMatrix s(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            int v = 0;
            for (int k = 1; k <= n; ++k) v += c.at(i, j, k);
            s.at(i, j) = v;
        }
    return s;
}

bool is_latin(const Matrix& grid) {
    if (!grid.square()) return false;
    const int n = grid.rows();
    for (int i = 1; i <= n; ++i) {
        std::vector<bool> row(n + 1, false), col(n + 1, false);
        for (int j = 1; j <= n; ++j) {
            int a = grid.at(i, j), b = grid.at(j, i);
            if (a < 1 || a > n || row[a]) return false;
            if (b < 1 || b > n || col[b]) return false;
            row[a] = col[b] = true;
        }
    }
    return true;
}

bool is_asm(const Matrix& m) {
    if (!m.square()) return false;
    const int n = m.rows();
    std::vector<int> line(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) line[j - 1] = m.at(i, j);
        if (!alternating_line(line)) return false;
        for (int j = 1; j <= n; ++j) line[j - 1] = m.at(j, i);
        if (!alternating_line(line)) return false;
    }
    return true;
}

bool is_permutation_matrix(const Matrix& m) {
    if (!is_asm(m)) return false;
    for (int v : m.data())
        if (v < 0) return false;
    return true;
}

bool is_ashm(const Hypermatrix& a) {
    const int n = a.order();
    std::vector<int> line(n);
    for (int s = 1; s <= n; ++s)
        for (int t = 1; t <= n; ++t) {
            for (int x = 1; x <= n; ++x) line[x - 1] = a.at(s, x, t);
            if (!alternating_line(line)) return false;
            for (int x = 1; x <= n; ++x) line[x - 1] = a.at(x, s, t);
            if (!alternating_line(line)) return false;
            for (int x = 1; x <= n; ++x) line[x - 1] = a.at(s, t, x);
            if (!alternating_line(line)) return false;
        }
    return true;
}

bool is_pashm(const Hypermatrix& a) {
    const int n = a.order();
    for (int k = 1; k <= n; ++k)
        if (!is_asm(a.plane(k))) return false;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int s = 0;
            for (int k = 1; k <= n; ++k) s += a.at(i, j, k);
            if (s != 1) return false;
        }
    return true;
}

bool is_permutation_hypermatrix(const Hypermatrix& a) {
    for (int v : a.data())
        if (v != 0 && v != 1) return false;
    const int n = a.order();
    for (int s = 1; s <= n; ++s)
        for (int t = 1; t <= n; ++t) {
            int u = 0, v = 0, w = 0;
            for (int x = 1; x <= n; ++x) {
                u += a.at(s, x, t);
                v += a.at(x, s, t);
                w += a.at(s, t, x);
            }
            if (u != 1 || v != 1 || w != 1) return false;
        }
    return true;
}

bool is_corner_sum_matrix(const CornerSumMatrix& c) {
    const int n = c.order();
    for (int t = 0; t <= n; ++t)
        if (c.at(0, t) != 0 || c.at(t, 0) != 0 || c.at(t, n) != t || c.at(n, t) != t)
            return false;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int dr = c.at(i, j) - c.at(i, j - 1);
            int dc = c.at(i, j) - c.at(i - 1, j);
            if (dr < 0 || dr > 1 || dc < 0 || dc > 1) return false;
        }
    return true;
}

bool is_corner_sum_hypermatrix(const CornerGrid3& c) {
    const int n = c.order();
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            if (c.at(i, j, 0) != 0 || c.at(i, 0, j) != 0 || c.at(0, i, j) != 0) return false;
            if (c.at(i, j, n) != i * j || c.at(i, n, j) != i * j || c.at(n, i, j) != i * j)
                return false;
        }
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            const int lo = std::max(0, i + j - n), hi = std::min(i, j);
            for (int k = 1; k <= n; ++k) {
                int d1 = c.at(i, j, k) - c.at(i, j, k - 1);
                int d2 = c.at(i, k, j) - c.at(i, k - 1, j);
                int d3 = c.at(k, i, j) - c.at(k - 1, i, j);
                if (d1 < lo || d1 > hi || d2 < lo || d2 > hi || d3 < lo || d3 > hi)
                    return false;
            }
        }
    return true;
}

bool ashm_difference_conditions(const CornerGrid3& c) {
    const int n = c.order();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                int d1 = c.at(i, j, k) - c.at(i - 1, j, k) - c.at(i, j - 1, k)
                       + c.at(i - 1, j - 1, k);
                int d2 = c.at(i, j, k) - c.at(i - 1, j, k) - c.at(i, j, k - 1)
                       + c.at(i - 1, j, k - 1);
                int d3 = c.at(i, j, k) - c.at(i, j - 1, k) - c.at(i, j, k - 1)
                       + c.at(i, j - 1, k - 1);
                if (d1 < 0 || d1 > 1 || d2 < 0 || d2 > 1 || d3 < 0 || d3 > 1) return false;
            }
    return true;
}

namespace {

bool plane_sandwiched(const Matrix& p) {
    const int n = p.rows();
    CornerSumMatrix s = sigma(p);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int v = s.at(i, j);
            if (v < std::max(0, i + j - n) || v > std::min(i, j)) return false;
        }
    return true;
}

}  // namespace

bool is_in_xi_preimage(const Hypermatrix& a) {
    const int n = a.order();
    for (int t = 1; t <= n; ++t)
        if (!plane_sandwiched(a.plane(t)) || !plane_sandwiched(a.row_plane(t)) ||
            !plane_sandwiched(a.col_plane(t)))
            return false;
    return true;
}

bool check_partial_sum_bounds(const Hypermatrix& a) {
    const int n = a.order();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const int m = std::min(std::min(i, j), std::min(n - i + 1, n - j + 1));
            int p1 = 0, p2 = 0, p3 = 0;
            for (int k = 1; k <= n; ++k) {
                p1 += a.at(i, j, k);
                p2 += a.at(i, k, j);
                p3 += a.at(k, i, j);
                if (p1 < 1 - m || p1 > m || p2 < 1 - m || p2 > m || p3 < 1 - m || p3 > m)
                    return false;
            }
            // Suffix sums s_k = total - prefix_{k-1}.
            int s1 = 0, s2 = 0, s3 = 0;
            for (int k = n; k >= 1; --k) {
                s1 += a.at(i, j, k);
                s2 += a.at(i, k, j);
                s3 += a.at(k, i, j);
                if (s1 < 1 - m || s1 > m || s2 < 1 - m || s2 > m || s3 < 1 - m || s3 > m)
                    return false;
            }
        }
    return true;
}

CellFormalSum grid_notation(const Hypermatrix& a) {
    const int n = a.order();
    CellFormalSum g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                if (int v = a.at(i, j, k); v != 0) g.cell(i, j).push_back({k, v});
    return g;
}

Hypermatrix from_grid_notation(const CellFormalSum& g) {
    const int n = g.order();
    Hypermatrix a(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int prev = 0;
            for (const auto& t : g.cell(i, j)) {
                if (t.plane < 1 || t.plane > n)
                    throw std::invalid_argument("grid notation: plane index out of range");
                if (t.coeff == 0)
                    throw std::invalid_argument("grid notation: zero coefficient");
                if (t.plane <= prev)
                    throw std::invalid_argument("grid notation: planes must increase");
                prev = t.plane;
                a.at(i, j, t.plane) = t.coeff;
            }
        }
    return a;
}

std::string format_cell(const std::vector<CellFormalSum::Term>& cell) {
    if (cell.empty()) return "0";
    std::string out;
    for (const auto& t : cell) {
        int reps = std::abs(t.coeff);
        char sign = t.coeff > 0 ? '+' : '-';
        for (int r = 0; r < reps; ++r) {
            if (!(out.empty() && sign == '+')) out.push_back(sign);
            out += std::to_string(t.plane);
        }
    }
    return out;
}

std::vector<CellFormalSum::Term> parse_cell(const std::string& text) {
    std::vector<CellFormalSum::Term> terms;
    size_t pos = 0;
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+') {
            ++pos;
        } else if (text[pos] == '-') {
            sign = -1;
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw std::invalid_argument("grid notation: malformed cell '" + text + "'");
        int plane = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            plane = plane * 10 + (text[pos++] - '0');
        if (plane == 0 && terms.empty() && pos >= text.size()) return {};  // bare "0"
        if (!terms.empty() && terms.back().plane == plane)
            terms.back().coeff += sign;
        else
            terms.push_back({plane, sign});
    }
    std::erase_if(terms, [](const auto& t) { return t.coeff == 0; });
    return terms;
}

std::optional<LatinSquare> to_latin_square(const Hypermatrix& a) {
    if (!is_permutation_hypermatrix(a)) return std::nullopt;
    return LatinSquare(latin_like_square(a));
}

}  // namespace hyperlattice
