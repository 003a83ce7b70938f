#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "hyperlattice/bruhat.hpp"
#include "hyperlattice/core.hpp"
#include "hyperlattice/enumerate.hpp"
#include "hyperlattice/lattice.hpp"
#include "hyperlattice/rank.hpp"

using namespace hyperlattice;

TEST_CASE("rho and the closed form m(n)") {
    CHECK(m_closed_form(1) == 1);
    CHECK(m_closed_form(3) == 76);
    for (int n = 1; n <= 8; ++n) {
        // m_closed_form itself asserts agreement with direct summation.
        CHECK(m_closed_form(n) == rho(minimum_element(n)));
        CHECK(rank_of(xi_inverse(minimum_element(n).grid())) == 0);
    }
    CHECK(rho(LatinSquare(std::vector<std::vector<int>>{{1}}).to_hypermatrix()) == 1);

    LatinSquare cyclic({{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
    CHECK(rho(cyclic.to_hypermatrix()) == 75);
    CornerSumMatrix cs = sigma(cyclic);
    CHECK(std::accumulate(cs.data().begin(), cs.data().end(), 0) == 69);
    CHECK(rho(cyclic.to_hypermatrix()) == 144 - 69);

    Hypermatrix junk(3);
    CHECK_THROWS_AS(rho(junk), std::invalid_argument);
}

TEST_CASE("lattice rank closed form") {
    CHECK(lattice_rank(1) == 0);
    CHECK(lattice_rank(3) == 8);
    for (int n = 1; n <= 8; ++n) {
        long long diff = 0;
        CornerSumHypermatrix lo = minimum_element(n), hi = maximum_element(n);
        for (size_t t = 0; t < lo.data().size(); ++t) diff += lo.data()[t] - hi.data()[t];
        CHECK(lattice_rank(n) == diff);
    }
    CHECK(rank_of(maximum_element(3)) == 8);
    CHECK(rank_of(maximum_element(4)) == lattice_rank(4));
}

TEST_CASE("rank equals Hasse depth on the order-3 lattice") {
    auto c3 = enumerate_corner_sum(3);
    HasseGraph h = build_hasse(c3);
    std::vector<int> depth = hasse_ranks(h);
    for (size_t t = 0; t < c3.size(); ++t) CHECK(rank_of(c3[t]) == depth[t]);
    // Each cover step moves the rank by exactly one, upward.
    for (auto [lo, hi] : h.edges) CHECK(rank_of(c3[hi]) == rank_of(c3[lo]) + 1);
}

TEST_CASE("rank counts the T-blocks of a greedy witness") {
    auto l3 = enumerate_latin(3);
    for (const auto& a : l3)
        for (const auto& b : l3) {
            if (!bruhat_leq(a, b)) continue;
            TBlockWitness w = tblock_witness(a.to_hypermatrix(), b.to_hypermatrix());
            REQUIRE(w.ok);
            CHECK(rank_of(b.to_hypermatrix()) - rank_of(a.to_hypermatrix()) ==
                  static_cast<long long>(w.blocks.size()));
        }
}

TEST_CASE("asm ranks") {
    for (int n = 1; n <= 5; ++n) {
        Matrix id(n, n);
        for (int i = 1; i <= n; ++i) id.at(i, i) = 1;
        CHECK(asm_rank(id) == 0);
    }
    CHECK_THROWS_AS(asm_rank(Matrix({{1, 1}, {0, 0}})), std::invalid_argument);

    // BFS depth in the 7-element order-3 ASM lattice matches the formula.
    auto asms = enumerate_asm(3);
    REQUIRE(asms.size() == 7);
    auto leq2 = [](const Matrix& x, const Matrix& y) {
        CornerSumMatrix sx = sigma(x), sy = sigma(y);
        for (size_t t = 0; t < sx.data().size(); ++t)
            if (sx.data()[t] < sy.data()[t]) return false;
        return true;
    };
    long long longest = 0;
    for (const auto& a : asms) {
        // Depth = longest chain strictly below a.
        std::vector<const Matrix*> below;
        for (const auto& b : asms)
            if (!(b == a) && leq2(b, a)) below.push_back(&b);
        std::function<long long(const Matrix&)> depth = [&](const Matrix& x) -> long long {
            long long d = 0;
            for (const auto& b : asms)
                if (!(b == x) && leq2(b, x)) d = std::max(d, depth(b) + 1);
            return d;
        };
        CHECK(asm_rank(a) == depth(a));
        longest = std::max(longest, depth(a));
    }
    Matrix j3({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}});
    CHECK(asm_rank(j3) == 2);
    CHECK(longest == 4);  // anti-identity tops the 7-element lattice
}

TEST_CASE("plane rank sums") {
    CHECK(rank_sum_identity_check(LatinSquare(std::vector<std::vector<int>>{{1}})));
    for (const auto& l : enumerate_latin(3)) {
        CHECK(rank_sum_identity_check(l));
        Hypermatrix h = l.to_hypermatrix();
        long long sum = 0;
        for (int k = 1; k <= 3; ++k) sum += asm_rank(h.plane(k));
        CHECK(sum == 6);
    }
    auto l4 = enumerate_latin(4);
    std::mt19937 rng(3);
    std::uniform_int_distribution<size_t> pick(0, l4.size() - 1);
    for (int t = 0; t < 25; ++t) {
        const LatinSquare& l = l4[pick(rng)];
        CHECK(rank_sum_identity_check(l));
        Hypermatrix h = l.to_hypermatrix();
        long long sum = 0;
        for (int k = 1; k <= 4; ++k) sum += asm_rank(h.plane(k));
        CHECK(sum == 20);
    }
}

TEST_CASE("corner-sum weight identity") {
    CHECK(sigma_sum_identity_check(
        LatinSquare(std::vector<std::vector<int>>{{1}}).to_hypermatrix()));
    for (const auto& c : enumerate_corner_sum(3)) {
        Hypermatrix pre = xi_inverse(c.grid());
        CHECK(sigma_sum_identity_check(pre));
        CornerSumMatrix cs = sigma(latin_like_square(pre));
        CHECK(rho(pre) + std::accumulate(cs.data().begin(), cs.data().end(), 0ll) == 144);
    }
    // Constant at order 4 is 16 * 125 / 4 = 500.
    auto l4 = enumerate_latin(4);
    std::mt19937 rng(5);
    std::uniform_int_distribution<size_t> pick(0, l4.size() - 1);
    for (int t = 0; t < 25; ++t) {
        Hypermatrix h = l4[pick(rng)].to_hypermatrix();
        CHECK(sigma_sum_identity_check(h));
        CornerSumMatrix cs = sigma(latin_like_square(h));
        CHECK(rho(h) + std::accumulate(cs.data().begin(), cs.data().end(), 0ll) == 500);
    }
    CHECK(sigma_sum_identity_check(xi_inverse(construct_un(4).grid())));
}

TEST_CASE("bridging identity between the two rank expressions") {
    auto check_bridge = [](const Hypermatrix& h) {
        int n = h.order();
        Matrix cells = latin_like_square(h);
        long long lhs = 0, rhs = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                lhs += static_cast<long long>(i - j) * (i - j) * (n - cells.at(i, j));
                rhs += static_cast<long long>(n - i + 1) * (n - j + 1) * (n - cells.at(i, j) + 1);
            }
        long long c = static_cast<long long>(n) * n * (n + 1) * (n * n + n + 1) / 6;
        CHECK(lhs / 2 == c - rhs);
        CHECK(lhs % 2 == 0);
    };
    for (const auto& c : enumerate_corner_sum(3)) check_bridge(xi_inverse(c.grid()));
    auto l4 = enumerate_latin(4);
    auto l5 = enumerate_latin(5);
    std::mt19937 rng(11);
    for (int t = 0; t < 20; ++t) {
        check_bridge(l4[rng() % l4.size()].to_hypermatrix());
        check_bridge(l5[rng() % l5.size()].to_hypermatrix());
    }
}

TEST_CASE("rank profile") {
    RankProfile p = rank_profile(minimum_element(3));
    CHECK(p.n == 3);
    CHECK(p.rho == 76);
    CHECK(p.rank == 0);
}
