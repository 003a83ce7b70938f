#include "doctest.h"

#include "hyperlattice/core.hpp"
#include "hyperlattice/triangles.hpp"

using namespace hyperlattice;

namespace {

Hypermatrix from_planes(const std::vector<std::vector<std::vector<int>>>& planes) {
    int n = static_cast<int>(planes.size());
    Hypermatrix a(n);
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                a.at(i, j, k) = planes[k - 1][i - 1][j - 1];
    return a;
}

// Order-3 hypermatrix in the xi preimage with a -1 at the center.
Hypermatrix center_minus() {
    return from_planes({{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                        {{0, 1, 0}, {1, -1, 1}, {0, 1, 0}},
                        {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}});
}

// Triangle built from explicit symbol rows; rows[k-1][i-1] is row (i,k).
MonotoneHypertriangle from_rows(int n, const std::vector<std::vector<std::vector<int>>>& rows) {
    MonotoneHypertriangle t(n);
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= n; ++i)
            for (int s : rows[k - 1][i - 1]) ++t.mult(i, s, k);
    return t;
}

// Order-5 hypertriangle whose rows 1-4 of planes 1-4 satisfy interlacing
// but violate growth condition 3 in plane 2; last rows and plane are the
// forced boundary values.
MonotoneHypertriangle near_counterexample() {
    std::vector<std::vector<std::vector<int>>> rows = {
        {{4}, {3, 5}, {1, 3, 5}, {1, 2, 4, 5}, {}},
        {{3, 5}, {3, 3, 5, 5}, {1, 1, 3, 3, 5, 5}, {1, 1, 2, 3, 4, 4, 5, 5}, {}},
        {{2, 3, 5},
         {1, 2, 3, 3, 5, 5},
         {1, 1, 2, 3, 3, 4, 4, 5, 5},
         {1, 1, 1, 2, 2, 3, 3, 4, 4, 4, 5, 5},
         {}},
        {{1, 2, 4, 5},
         {1, 1, 2, 3, 4, 4, 5, 5},
         {1, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 5},
         {1, 1, 1, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4, 5, 5, 5},
         {}},
        {{}, {}, {}, {}, {}}};
    for (int k = 1; k <= 5; ++k)
        for (int s = 1; s <= 5; ++s)
            for (int r = 0; r < k; ++r) rows[k - 1][4].push_back(s);
    for (int i = 1; i <= 4; ++i)
        for (int s = 1; s <= 5; ++s)
            for (int r = 0; r < i; ++r) rows[4][i - 1].push_back(s);
    return from_rows(5, rows);
}

}  // namespace

TEST_CASE("triangle of the center-minus hypermatrix") {
    Hypermatrix a = center_minus();
    REQUIRE(is_in_xi_preimage(a));

    Hypermatrix p = partial_sum_hypermatrix(a);
    Hypermatrix want_p = from_planes({{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}},
                                      {{1, 1, 0}, {2, 1, 1}, {2, 2, 2}},
                                      {{1, 1, 1}, {2, 2, 2}, {3, 3, 3}}});
    CHECK(p == want_p);

    MonotoneHypertriangle t = to_triangle(a);
    CHECK(is_monotone_hypertriangle(t));
    CHECK(t.row(1, 1) == std::vector<int>{1});
    CHECK(t.row(2, 2) == std::vector<int>{1, 1, 2, 3});
    CHECK(t.row(3, 2) == std::vector<int>{1, 1, 2, 2, 3, 3});
    CHECK(t.row(3, 3) == std::vector<int>{1, 1, 1, 2, 2, 2, 3, 3, 3});
    CHECK(t.at(3, 4, 2) == 2);
    CHECK(check_interlacing(t));
    CHECK(from_triangle(t) == a);
    CHECK(triangle_leq(t, t));
}

TEST_CASE("order-1 triangle") {
    Hypermatrix one(1);
    one.at(1, 1, 1) = 1;
    MonotoneHypertriangle t = to_triangle(one);
    CHECK(t.row(1, 1) == std::vector<int>{1});
    CHECK(from_triangle(t) == one);
}

TEST_CASE("interlacing is necessary but not sufficient") {
    MonotoneHypertriangle t = near_counterexample();
    CHECK(check_interlacing(t));
    CHECK_FALSE(is_monotone_hypertriangle(t));
    // The violation: in plane 2, the count of entries <= 1 grows by 2 from
    // row 2 to row 3, above the allowed min(1,2) = 1.
    CHECK(t.mult(2, 1, 2) == 0);
    CHECK(t.mult(3, 1, 2) == 2);
    CHECK_THROWS_AS(from_triangle(t), std::invalid_argument);
}

TEST_CASE("classical 2-D map round trips on all order-3 ASMs") {
    // All 3x3 sign matrices, filtered.
    int count = 0;
    for (int code = 0; code < 19683; ++code) {
        int c = code;
        Matrix m(3, 3);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                m.at(i, j) = c % 3 - 1;
                c /= 3;
            }
        if (!is_asm(m)) continue;
        ++count;
        auto rows = monotone_triangle(m);
        CHECK(is_monotone_triangle(rows, 3));
        CHECK(asm_from_monotone_triangle(rows) == m);
    }
    CHECK(count == 7);
}

TEST_CASE("monotone triangle of the order-4 example ASM") {
    Matrix a(std::vector<std::vector<int>>{
        {0, 1, 0, 0}, {1, -1, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
    auto rows = monotone_triangle(a);
    CHECK(rows == std::vector<std::vector<int>>{{2}, {1, 3}, {1, 2, 3}, {1, 2, 3, 4}});
}

TEST_CASE("rendering shows each plane") {
    MonotoneHypertriangle t = to_triangle(center_minus());
    std::string s = render_triangle(t);
    CHECK(s.find("plane 1:") != std::string::npos);
    CHECK(s.find("plane 3:") != std::string::npos);
    CHECK(s.find("1 1 2 2 3 3") != std::string::npos);
}
