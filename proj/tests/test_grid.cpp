#include "fracsl/grid.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"

using fracsl::make_grid;

TEST_CASE("quarter grid has the expected nodes") {
    auto g = make_grid(4, 1.0);
    CHECK(g.node(0) == 0.0);
    CHECK(g.node(1) == 0.25);
    CHECK(g.node(2) == 0.5);
    CHECK(g.node(3) == 0.75);
    CHECK(g.node(4) == 1.0);
    CHECK(g.nodes().size() == 5);
}

TEST_CASE("paper-scale grid step") {
    auto g = make_grid(2048, 1.0);
    CHECK(g.step() == 1.0 / 2048.0);
    CHECK(g.point_count() == 2049);
}

TEST_CASE("degenerate grids are rejected") {
    CHECK_THROWS_AS(make_grid(1, 1.0), std::domain_error);
    CHECK_THROWS_AS(make_grid(0, 1.0), std::domain_error);
    CHECK_THROWS_AS(make_grid(8, 0.0), std::domain_error);
    CHECK_THROWS_AS(make_grid(8, -2.0), std::domain_error);
}

TEST_CASE("endpoints are exact and nodes stay within one ulp of i*b/n") {
    const std::size_t ns[] = {2, 3, 7, 100, 1000, 2048};
    const double bs[] = {1.0, 0.3, 2.5, 17.0 / 3.0};
    for (std::size_t n : ns) {
        for (double b : bs) {
            auto g = make_grid(n, b);
            CHECK(g.node(0) == 0.0);
            CHECK(g.node(n) == b);  // pinned, not accumulated
            const double ulp_b = std::nextafter(b, 2.0 * b) - b;
            for (std::size_t i = 0; i <= n; ++i) {
                const long double exact =
                    static_cast<long double>(i) * static_cast<long double>(b) /
                    static_cast<long double>(n);
                CHECK(std::abs(static_cast<double>(g.node(i) - exact)) <= ulp_b);
            }
            CHECK(std::abs(g.step() * static_cast<double>(n) - b) <= ulp_b);
        }
    }
}
