#include "hyperlattice/bruhat.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hyperlattice/core.hpp"
#include "hyperlattice/enumerate.hpp"

namespace hyperlattice {

void validate_tblock(const TBlock3D& t, int n) {
    if (!(1 <= t.i1 && t.i1 < t.i2 && t.i2 <= n && 1 <= t.j1 && t.j1 < t.j2 && t.j2 <= n &&
          1 <= t.k1 && t.k1 < t.k2 && t.k2 <= n))
        throw std::out_of_range("T-block corners must satisfy 1 <= lo < hi <= n");
    if (t.sign != 1 && t.sign != -1) throw std::invalid_argument("T-block sign must be +-1");
}

Hypermatrix apply_tblock(const Hypermatrix& a, const TBlock3D& t) {
    validate_tblock(t, a.order());
    Hypermatrix out = a;
    const int is[2] = {t.i1, t.i2}, js[2] = {t.j1, t.j2}, ks[2] = {t.k1, t.k2};
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) {
                int v = ((x + y + z) % 2 == 0) ? t.sign : -t.sign;
                out.at(is[x], js[y], ks[z]) += v;
            }
    return out;
}

Hypermatrix tblock_pattern(const TBlock3D& t, int n) {
    return apply_tblock(Hypermatrix(n), t);
}

std::vector<TBlock3D> decompose_tblock(const TBlock3D& t) {
    if (t.sign != 1) throw std::invalid_argument("decompose_tblock: block must be positive");
    if (t.contiguous()) return {t};
    TBlock3D a = t, b = t;
    // Shrink one axis with gap > 1: the remainder is the single-step block
    // on the last two planes of that axis.
    if (t.k2 - t.k1 > 1) {
        a.k2 = t.k2 - 1;
        b.k1 = t.k2 - 1;
    } else if (t.j2 - t.j1 > 1) {
        a.j2 = t.j2 - 1;
        b.j1 = t.j2 - 1;
    } else {
        a.i2 = t.i2 - 1;
        b.i1 = t.i2 - 1;
    }
    std::vector<TBlock3D> out = decompose_tblock(a);
    std::vector<TBlock3D> rest = decompose_tblock(b);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

bool bruhat_leq(const CornerSumHypermatrix& a, const CornerSumHypermatrix& b) {
    if (a.order() != b.order()) throw std::invalid_argument("bruhat_leq: order mismatch");
    for (size_t t = 0; t < a.data().size(); ++t)
        if (a.data()[t] < b.data()[t]) return false;
    return true;
}

bool bruhat_leq(const Hypermatrix& a, const Hypermatrix& b) {
    if (a.order() != b.order()) throw std::invalid_argument("bruhat_leq: order mismatch");
    if (!is_in_xi_preimage(a) || !is_in_xi_preimage(b))
        throw std::invalid_argument("bruhat_leq: operand outside the xi preimage");
    return bruhat_leq(CornerSumHypermatrix(xi(a)), CornerSumHypermatrix(xi(b)));
}

bool bruhat_leq(const LatinSquare& a, const LatinSquare& b) {
    return bruhat_leq(a.to_hypermatrix(), b.to_hypermatrix());
}

bool covers_in_lattice(const CornerSumHypermatrix& a, const CornerSumHypermatrix& b) {
    if (a.order() != b.order()) throw std::invalid_argument("covers_in_lattice: order mismatch");
    int ones = 0;
    for (size_t t = 0; t < a.data().size(); ++t) {
        int d = a.data()[t] - b.data()[t];
        if (d == 0) continue;
        if (d != 1 || ++ones > 1) return false;
    }
    return ones == 1;
}

int subarray_count(const Subarray& x, int i, int j, int k) {
    int count = 0;
    for (auto [a, b] : x.positions)
        if (a <= i && b <= j && x.host.at(a, b) <= k) ++count;
    return count;
}

namespace {

std::set<std::pair<int, int>> position_set(const Subarray& x) {
    return {x.positions.begin(), x.positions.end()};
}

}  // namespace

bool is_decreasing_replacement(const Subarray& x, const Subarray& y) {
    if (x.host.order() != y.host.order()) return false;
    auto pos = position_set(x);
    if (pos != position_set(y)) return false;
    // Per-row and per-column symbol multisets must agree.
    std::map<int, std::multiset<int>> xrow, yrow, xcol, ycol;
    std::set<int> symbols;
    for (auto [a, b] : pos) {
        xrow[a].insert(x.host.at(a, b));
        yrow[a].insert(y.host.at(a, b));
        xcol[b].insert(x.host.at(a, b));
        ycol[b].insert(y.host.at(a, b));
        symbols.insert(x.host.at(a, b));
    }
    if (xrow != yrow || xcol != ycol) return false;
    // Domination must hold at every box corner, not just at pos(x): counts at
    // corners outside the occupied positions are not controlled by those at
    // occupied ones, and skipping them admits incomparable pairs.
    int n = x.host.order();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int k : symbols)
                if (subarray_count(y, a, b, k) < subarray_count(x, a, b, k)) return false;
    return true;
}

bool covers_in_latin_poset(const LatinSquare& l1, const LatinSquare& l2) {
    if (l1 == l2 || !bruhat_leq(l1, l2)) return false;
    for (const LatinSquare& l : enumerate_latin(l1.order()))
        if (!(l == l1) && !(l == l2) && bruhat_leq(l1, l) && bruhat_leq(l, l2)) return false;
    return true;
}

std::vector<Intercalate> find_intercalates(const LatinSquare& l) {
    const int n = l.order();
    std::vector<Intercalate> out;
    for (int r1 = 1; r1 <= n; ++r1)
        for (int r2 = r1 + 1; r2 <= n; ++r2)
            for (int c1 = 1; c1 <= n; ++c1)
                for (int c2 = c1 + 1; c2 <= n; ++c2) {
                    int w = l.at(r1, c1), x = l.at(r1, c2);
                    if (w == x || l.at(r2, c1) != x || l.at(r2, c2) != w) continue;
                    // Pattern [[w,x],[x,w]]; decreasing switch when the
                    // larger symbol occupies the low corner.
                    out.push_back({r1, r2, c1, c2, std::min(w, x), std::max(w, x), w > x});
                }
    return out;
}

namespace {

// Cells of line p along the axis as (position-in-line -> symbol);
// for the symbol axis, cells holding symbol p as (row -> column).
int line_value(const LatinSquare& l, Axis axis, int p, int t) {
    switch (axis) {
        case Axis::kRow: return l.at(p, t);
        case Axis::kCol: return l.at(t, p);
        default: {
            for (int j = 1; j <= l.order(); ++j)
                if (l.at(t, j) == p) return j;
            throw std::logic_error("symbol missing from row");
        }
    }
}

std::pair<int, int> cell_of(Axis axis, int p, int t, const LatinSquare& l) {
    switch (axis) {
        case Axis::kRow: return {p, t};
        case Axis::kCol: return {t, p};
        default: return {t, line_value(l, axis, p, t)};
    }
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> cycle_switch_supports(const LatinSquare& l,
                                                                    Axis axis, int p, int q) {
    const int n = l.order();
    if (p < 1 || p > n || q < 1 || q > n || p == q)
        throw std::invalid_argument("cycle_switch_supports: bad line pair");
    // Follow the cycles of t -> position where line q holds line p's value
    // at t. Every axis reduces to this picture: for rows, t ranges over
    // columns; for columns, over rows; for symbols, over rows with the
    // "value" being the column of the symbol.
    std::vector<int> next(n + 1, 0);
    for (int t = 1; t <= n; ++t) {
        int v = line_value(l, axis, p, t);
        // Find t' with line_value(q, t') == v.
        for (int u = 1; u <= n; ++u)
            if (line_value(l, axis, q, u) == v) {
                next[t] = u;
                break;
            }
    }
    std::vector<std::vector<std::pair<int, int>>> cycles;
    std::vector<bool> used(n + 1, false);
    for (int start = 1; start <= n; ++start) {
        if (used[start]) continue;
        std::vector<std::pair<int, int>> cells;
        int t = start;
        do {
            used[t] = true;
            cells.push_back(cell_of(axis, p, t, l));
            cells.push_back(cell_of(axis, q, t, l));
            t = next[t];
        } while (t != start);
        cycles.push_back(std::move(cells));
    }
    return cycles;
}

LatinSquare apply_cycle_switch(const LatinSquare& l, Axis axis, int p, int q,
                               const std::vector<std::pair<int, int>>& support) {
    std::set<std::pair<int, int>> cells(support.begin(), support.end());
    Matrix grid = l.cells();
    if (axis == Axis::kSymbol) {
        for (auto [i, j] : cells) {
            int v = grid.at(i, j);
            if (v != p && v != q)
                throw std::invalid_argument("cycle switch: cell holds neither symbol");
            grid.at(i, j) = v == p ? q : p;
        }
    } else {
        // Row axis: support cells sit in rows p and q and pair up by
        // column; swap within each column. Column axis is the transpose.
        std::set<int> positions;
        for (auto [i, j] : cells) {
            int line = axis == Axis::kRow ? i : j;
            int t = axis == Axis::kRow ? j : i;
            if (line != p && line != q)
                throw std::invalid_argument("cycle switch: cell outside the two lines");
            positions.insert(t);
        }
        for (int t : positions) {
            if (axis == Axis::kRow)
                std::swap(grid.at(p, t), grid.at(q, t));
            else
                std::swap(grid.at(t, p), grid.at(t, q));
        }
    }
    try {
        return LatinSquare(grid);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("cycle switch: support is not a closed cycle set");
    }
}

bool cycle_switch_is_decreasing(const LatinSquare& l, Axis axis, int p, int q,
                                const std::vector<std::pair<int, int>>& support) {
    const int n = l.order();
    if (p > q) return cycle_switch_is_decreasing(l, axis, q, p, support);
    // Partial permutation matrices of what line p holds before the switch
    // (x) and what it receives (y), over (position, value) cells.
    Matrix x(n, n), y(n, n);
    std::set<std::pair<int, int>> cells(support.begin(), support.end());
    for (auto [i, j] : cells) {
        if (axis == Axis::kSymbol) {
            // Line "p" is the symbol p; its 2-D representation places the
            // cells (row, column) holding that symbol.
            if (l.at(i, j) == p) x.at(i, j) = 1;
            if (l.at(i, j) == q) y.at(i, j) = 1;
        } else {
            int line = axis == Axis::kRow ? i : j;
            int t = axis == Axis::kRow ? j : i;
            if (line == p) x.at(t, l.at(i, j)) = 1;
            if (line == q) y.at(t, l.at(i, j)) = 1;
        }
    }
    // y precedes x in the 2-D order (sigma domination): then after the
    // switch the lower line holds the smaller partial permutation.
    CornerSumMatrix sx = sigma(x), sy = sigma(y);
    for (size_t t = 0; t < sx.data().size(); ++t)
        if (sy.data()[t] < sx.data()[t]) return false;
    return true;
}

TBlockWitness tblock_witness(const Hypermatrix& lower, const Hypermatrix& upper) {
    TBlockWitness w;
    if (!bruhat_leq(lower, upper)) return w;
    w.ok = true;
    const int n = lower.order();
    CornerGrid3 target = xi(lower);
    CornerGrid3 cur = xi(upper);
    Hypermatrix walk = upper;
    while (true) {
        // Lexicographically first positive deficit.
        int bi = 0, bj = 0, bk = 0;
        for (int i = 1; i < n && !bi; ++i)
            for (int j = 1; j < n && !bi; ++j)
                for (int k = 1; k < n && !bi; ++k)
                    if (target.at(i, j, k) > cur.at(i, j, k)) {
                        bi = i;
                        bj = j;
                        bk = k;
                    }
        if (!bi) break;
        TBlock3D t{bi, bi + 1, bj, bj + 1, bk, bk + 1, 1};
        w.blocks.push_back(t);
        walk = apply_tblock(walk, t);
        cur.at(bi, bj, bk) += 1;
        if (!is_in_xi_preimage(walk)) w.intermediates_valid = false;
    }
    return w;
}

}  // namespace hyperlattice
