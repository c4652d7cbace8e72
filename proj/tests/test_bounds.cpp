#include <catch_amalgamated.hpp>

#include <algorithm>

#include "schubert/bounds.hpp"
#include "schubert/verify.hpp"

using namespace schubert;

TEST_CASE("Grassmannian dimension") {
    CHECK(grassmannian_dim(RectangleContext(2, 4)) == 4);
    CHECK(grassmannian_dim(RectangleContext(5, 12)) == 35);
    for (int n = 2; n < 20; ++n) CHECK(grassmannian_dim(RectangleContext(1, n)) == n - 1);
}

TEST_CASE("rank variety codimension") {
    CHECK(rank_variety_codim(MatrixSpaceShape(3, 3), 3) == 0);
    CHECK(rank_variety_codim(MatrixSpaceShape(3, 4), 2) == 2);
    CHECK_THROWS_AS(rank_variety_codim(MatrixSpaceShape(3, 4), 4), ValidationError);
    CHECK_THROWS_AS(rank_variety_codim(MatrixSpaceShape(3, 4), -1), ValidationError);
    CHECK_THROWS_AS(MatrixSpaceShape(0, 2), ValidationError);
    // rank <= n-1 when n-1 <= m has codimension m+1-n
    for (int n = 1; n <= 20; ++n)
        for (int m = n - 1; m <= 20; ++m) {
            if (m < 1) continue;
            CHECK(rank_variety_codim(MatrixSpaceShape(n, m), n - 1) == m + 1 - n);
            CHECK(rank_variety_codim(MatrixSpaceShape(n, m), n - 1) == main_bound(MatrixSpaceShape(n, m), n).value);
        }
}

TEST_CASE("Schubert bound") {
    CHECK(schubert_bound(1, RectangleContext(2, 4)).value == 2);
    CHECK(schubert_bound(3, RectangleContext(5, 12)).value == 3);
    for (int k = 1; k < 10; ++k) CHECK(schubert_bound(k, RectangleContext(k, k + 3)).value == 1);
    CHECK_THROWS_AS(schubert_bound(0, RectangleContext(2, 4)), ValidationError);
    CHECK_THROWS_AS(schubert_bound(3, RectangleContext(2, 4)), ValidationError);
    CHECK(schubert_bound(1, RectangleContext(2, 4)).formula == "k+1-e");
}

TEST_CASE("column-space bound") {
    const MatrixSpaceShape shape(4, 3);
    const auto at_n = main_bound(shape, 4);
    CHECK(at_n.value == 0);
    CHECK(at_n.vacuous);
    CHECK_FALSE(at_n.vacuously_true);

    const auto at_zero = main_bound(shape, 0);
    CHECK(at_zero.value == 4);
    CHECK(at_zero.vacuously_true);
    CHECK_FALSE(at_zero.vacuous);

    CHECK(main_bound(MatrixSpaceShape(5, 3), 4).value == 0);  // e = m+1
    CHECK(main_bound(MatrixSpaceShape(5, 3), 5).value == -1);  // reported raw, not clamped
    CHECK_THROWS_AS(main_bound(shape, 5), ValidationError);
    CHECK_THROWS_AS(main_bound(shape, -1), ValidationError);
}

TEST_CASE("reduction function f") {
    const MatrixSpaceShape shape(4, 3);
    // (m-k)(n-k) + k + 1 - e with n=4, m=3, e=1:
    //   k=0: 3*4 + 0 = 12, k=1: 2*3 + 1 = 7, k=2: 1*2 + 2 = 4, k=3: 0 + 3 = 3
    CHECK(reduction_f_sweep(shape, 1) == std::vector<std::int64_t>{12, 7, 4, 3});
    CHECK(reduction_f(3, shape, 1) == main_bound(shape, 1).value);
    CHECK_THROWS_AS(reduction_f(4, shape, 1), ValidationError);
    CHECK_THROWS_AS(reduction_f(-1, shape, 1), ValidationError);
}

TEST_CASE("f decreases and ends at the column-space bound (n, m <= 20)") {
    for (int n = 1; n <= 20; ++n)
        for (int m = 1; m <= 20; ++m)
            for (int e = 0; e <= n; ++e) {
                const MatrixSpaceShape shape(n, m);
                const auto values = reduction_f_sweep(shape, e);
                REQUIRE_FALSE(values.empty());
                for (std::size_t k = 1; k < values.size(); ++k) CHECK(values[k] <= values[k - 1]);
                CHECK(*std::min_element(values.begin(), values.end()) == main_bound(shape, e).value);
                CHECK(values.back() == static_cast<std::int64_t>(m) + 1 - e);
            }
}

TEST_CASE("stratum dimension minus Grassmannian dimension is km") {
    for (int n = 2; n <= 20; ++n)
        for (int m = 1; m <= 20; ++m)
            for (int k = 1; k <= std::min(m, n - 1); ++k) {
                const MatrixSpaceShape shape(n, m);
                CHECK(rank_variety_dim(shape, k) - grassmannian_dim(RectangleContext(k, n)) ==
                      static_cast<std::int64_t>(k) * m);
            }
}

TEST_CASE("special Schubert and minimal dual diagrams") {
    CHECK(special_schubert_diagram(3, RectangleContext(8, 20)) == YoungDiagram{12, 12, 12, 0, 0, 0, 0, 0});
    CHECK(special_schubert_diagram(2, RectangleContext(2, 5)) == YoungDiagram{3, 3});
    CHECK(special_schubert_diagram(1, RectangleContext(2, 4)) == YoungDiagram{2, 0});
    CHECK(minimal_dual_diagram(1, RectangleContext(2, 4)) == YoungDiagram{1, 1});
    CHECK(minimal_dual_diagram(4, RectangleContext(4, 9)) == YoungDiagram{1});
    CHECK_THROWS_AS(special_schubert_diagram(0, RectangleContext(2, 4)), ValidationError);
    CHECK_THROWS_AS(minimal_dual_diagram(3, RectangleContext(2, 4)), ValidationError);
}

TEST_CASE("the minimal dual diagram is the unique least-area diagram killing the special class") {
    for (const auto& ctx : rectangles_up_to(12))
        for (int e = 1; e <= ctx.k; ++e) {
            const auto special = special_schubert_diagram(e, ctx);
            const auto minimal = minimal_dual_diagram(e, ctx);
            CHECK(minimal.area() == schubert_bound(e, ctx).value);
            CHECK_FALSE(overlap_test(special, minimal, ctx));
            CHECK(cup(special, minimal, ctx).is_zero());
            for (const auto& mu : enumerate_diagrams(ctx)) {
                if (mu.area() < minimal.area()) CHECK(overlap_test(special, mu, ctx));
                if (mu.area() == minimal.area() && mu != minimal) CHECK(overlap_test(special, mu, ctx));
            }
        }
}
