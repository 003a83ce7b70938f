#include "hyperlattice/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hyperlattice/bruhat.hpp"
#include "hyperlattice/core.hpp"
#include "hyperlattice/enumerate.hpp"

namespace hyperlattice {

namespace {

void require_same_order(const CornerSumHypermatrix& a, const CornerSumHypermatrix& b) {
    if (a.order() != b.order()) throw std::invalid_argument("order mismatch");
}

CornerSumHypermatrix entrywise(const CornerSumHypermatrix& a, const CornerSumHypermatrix& b,
                               bool take_max) {
    require_same_order(a, b);
    CornerGrid3 g(a.order());
    auto& out = g.mutable_data();
    for (size_t t = 0; t < out.size(); ++t)
        out[t] = take_max ? std::max(a.data()[t], b.data()[t]) : std::min(a.data()[t], b.data()[t]);
    return CornerSumHypermatrix(std::move(g));  // validating: closure under min/max
}

}  // namespace

CornerSumHypermatrix meet(const CornerSumHypermatrix& a, const CornerSumHypermatrix& b) {
    return entrywise(a, b, /*take_max=*/true);
}

CornerSumHypermatrix join(const CornerSumHypermatrix& a, const CornerSumHypermatrix& b) {
    return entrywise(a, b, /*take_max=*/false);
}

int minimum_entry_piecewise(int n, int i, int j, int k) {
    if (i == 0 || j == 0 || k == 0) return std::min(k * std::min(i, j), i * j);
    if (i <= std::min(k, n - j) && j <= k) return i * j;
    if (i <= std::min(j, n - k) && j > k) return i * k;
    if (i > std::max(j, k) && j + k <= n) return j * k;
    if (i > std::max(n - j, n - k) && j + k > n)
        return n * n - n * i - n * j - n * k + i * j + i * k + j * k;
    throw std::logic_error("piecewise cases do not cover (" + std::to_string(i) + "," +
                           std::to_string(j) + "," + std::to_string(k) + ")");
}

CornerSumHypermatrix minimum_element(int n) {
    require_order(n);
    CornerGrid3 g(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            for (int k = 0; k <= n; ++k) {
                int v = std::min(k * std::min(i, j), i * j - (n - k) * std::max(0, i + j - n));
                if (v != minimum_entry_piecewise(n, i, j, k))
                    throw std::logic_error("piecewise form disagrees with the min formula");
                g.at(i, j, k) = v;
            }
    return CornerSumHypermatrix(std::move(g));
}

CornerSumHypermatrix maximum_element(int n) {
    require_order(n);
    CornerGrid3 g(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            for (int k = 0; k <= n; ++k)
                g.at(i, j, k) =
                    std::max(k * std::max(0, i + j - n), i * j - (n - k) * std::min(i, j));
    return CornerSumHypermatrix(std::move(g));
}

bool is_distributive_triple(const CornerSumHypermatrix& x, const CornerSumHypermatrix& y,
                            const CornerSumHypermatrix& z) {
    return meet(x, join(y, z)) == join(meet(x, y), meet(x, z));
}

std::vector<CornerSumHypermatrix> covered_elements(const CornerSumHypermatrix& c) {
    // b covers a when a = b plus one unit entry, so candidates are the
    // single-entry increments of c that keep every step difference in range.
    int n = c.order();
    std::vector<CornerSumHypermatrix> out;
    auto step_ok = [](int lo, int hi, int d) { return lo <= d && d <= hi; };
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            for (int k = 1; k < n; ++k) {
                int v = c.at(i, j, k) + 1;
                int lo_k = std::max(0, i + j - n), hi_k = std::min(i, j);
                int lo_j = std::max(0, i + k - n), hi_j = std::min(i, k);
                int lo_i = std::max(0, j + k - n), hi_i = std::min(j, k);
                if (!step_ok(lo_k, hi_k, v - c.at(i, j, k - 1)) ||
                    !step_ok(lo_k, hi_k, c.at(i, j, k + 1) - v) ||
                    !step_ok(lo_j, hi_j, v - c.at(i, j - 1, k)) ||
                    !step_ok(lo_j, hi_j, c.at(i, j + 1, k) - v) ||
                    !step_ok(lo_i, hi_i, v - c.at(i - 1, j, k)) ||
                    !step_ok(lo_i, hi_i, c.at(i + 1, j, k) - v))
                    continue;
                CornerGrid3 g = c.grid();
                g.at(i, j, k) = v;
                out.emplace_back(std::move(g));
            }
    return out;
}

std::vector<CornerSumHypermatrix> join_irreducibles(
    const std::vector<CornerSumHypermatrix>& elements) {
    std::vector<CornerSumHypermatrix> out;
    for (const auto& e : elements)
        if (covered_elements(e).size() == 1) out.push_back(e);
    return out;
}

CornerSumHypermatrix construct_un(int n) {
    if (n < 4) throw std::invalid_argument("U_n requires order >= 4");
    CornerGrid3 g = minimum_element(n).grid();
    g.at(2, 2, 2) -= 1;
    return CornerSumHypermatrix(std::move(g));
}

namespace {

nlohmann::json grid_json(const CornerGrid3& g) {
    int n = g.order();
    nlohmann::json out = nlohmann::json::array();
    for (int i = 0; i <= n; ++i) {
        nlohmann::json plane = nlohmann::json::array();
        for (int j = 0; j <= n; ++j) {
            nlohmann::json row = nlohmann::json::array();
            for (int k = 0; k <= n; ++k) row.push_back(g.at(i, j, k));
            plane.push_back(row);
        }
        out.push_back(plane);
    }
    return out;
}

nlohmann::json matrix_json(const Matrix& m) {
    nlohmann::json out = nlohmann::json::array();
    for (int i = 1; i <= m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 1; j <= m.cols(); ++j) row.push_back(m.at(i, j));
        out.push_back(row);
    }
    return out;
}

// Completion-by-cuts check at order 3: closed sets of the 12-element Latin
// square poset must biject order-compatibly with the 35-element lattice.
nlohmann::json dm_completion_n3() {
    auto squares = enumerate_latin(3);
    int m = static_cast<int>(squares.size());
    std::vector<std::vector<char>> leq(m, std::vector<char>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) leq[a][b] = bruhat_leq(squares[a], squares[b]);

    auto closure = [&](unsigned s) {
        unsigned up = 0;
        for (int u = 0; u < m; ++u) {
            bool ok = true;
            for (int a = 0; a < m && ok; ++a)
                if ((s >> a & 1) && !leq[a][u]) ok = false;
            if (ok) up |= 1u << u;
        }
        unsigned down = 0;
        for (int d = 0; d < m; ++d) {
            bool ok = true;
            for (int u = 0; u < m && ok; ++u)
                if ((up >> u & 1) && !leq[d][u]) ok = false;
            if (ok) down |= 1u << d;
        }
        return down;
    };
    std::set<unsigned> cuts;
    for (unsigned s = 0; s < (1u << m); ++s) cuts.insert(closure(s));

    auto lattice = enumerate_corner_sum(3);
    std::set<unsigned> images;
    bool order_match = true;
    std::vector<unsigned> mask(lattice.size());
    for (size_t x = 0; x < lattice.size(); ++x) {
        unsigned s = 0;
        for (int a = 0; a < m; ++a)
            if (bruhat_leq(CornerSumHypermatrix(xi(squares[a])), lattice[x])) s |= 1u << a;
        mask[x] = s;
        images.insert(s);
    }
    for (size_t x = 0; x < lattice.size(); ++x)
        for (size_t y = 0; y < lattice.size(); ++y)
            if (bruhat_leq(lattice[x], lattice[y]) != ((mask[x] & mask[y]) == mask[x]))
                order_match = false;

    bool holds = cuts.size() == lattice.size() && images == cuts && order_match;
    return {{"n", 3},
            {"completion_holds", holds},
            {"cut_count", cuts.size()},
            {"lattice_size", lattice.size()},
            {"order_isomorphic", order_match}};
}

}  // namespace

nlohmann::json dm_witness_report(int n) {
    if (n < 3) throw std::invalid_argument("dm_witness_report requires order >= 3");
    if (n == 3) return dm_completion_n3();

    nlohmann::json r;
    r["n"] = n;
    r["completion_holds"] = false;

    CornerSumHypermatrix un = construct_un(n);
    CornerSumHypermatrix mn = minimum_element(n);
    auto covered = covered_elements(un);
    r["witness"] = grid_json(un.grid());
    r["witness_cover_count"] = covered.size();
    r["witness_join_irreducible"] = covered.size() == 1;
    r["witness_covers_only_minimum"] = covered.size() == 1 && covered[0] == mn;

    Hypermatrix pre = xi_inverse(un.grid());
    r["preimage_is_latin"] = to_latin_square(pre).has_value();
    r["preimage_violations"] = nlohmann::json::array();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                if (pre.at(i, j, k) != 0 && pre.at(i, j, k) != 1)
                    r["preimage_violations"].push_back(
                        {{"i", i}, {"j", j}, {"k", k}, {"value", pre.at(i, j, k)}});

    if (n == 4) {
        // Plane-sum analogue: the same perturbation viewed in the lattice of
        // 2-D corner sums of Latin-like squares.
        LatinSquare a({{4, 3, 2, 1}, {3, 1, 4, 2}, {2, 4, 1, 3}, {1, 2, 3, 4}});
        LatinSquare b({{4, 2, 1, 3}, {3, 4, 2, 1}, {2, 1, 3, 4}, {1, 3, 4, 2}});
        CornerSumMatrix sa = sigma(a), sb = sigma(b);
        CornerSumMatrix x(n);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) x.at(i, j) = std::max(sa.at(i, j), sb.at(i, j));
        nlohmann::json p;
        p["plane_sum_of_witness_matches_max"] = x == plane_sum(un);
        Matrix pre2 = sigma_inverse(x);
        p["preimage"] = matrix_json(pre2);
        p["preimage_is_latin"] = is_latin(pre2);
        int diff = 0;
        for (size_t t = 0; t < x.data().size(); ++t)
            diff += x.data()[t] != plane_sum(mn).data()[t];
        p["covers_minimum_by_one_entry"] = diff == 1;
        r["latin_like_witness"] = p;
    }
    return r;
}

}  // namespace hyperlattice
