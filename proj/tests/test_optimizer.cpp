// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "starsec/optimizer.hpp"

using namespace starsec;

namespace {

const QuadratureRule& rule150() {
    static const QuadratureRule rule = laguerre_rule(150);
    return rule;
}

}  // namespace

TEST_CASE("collapsed region returns its only cell after one iteration") {
    ScenarioConfig s;
    SearchRegion region{40.0, 40.0, 60.0, 60.0, 1.0};
    const auto res = grid_search_placement(s, region, rule150());
    CHECK(res.converged);
    CHECK(res.iterations == 1);
    CHECK(res.best_position.x == 40.0);
    CHECK(res.best_position.y == 60.0);
    CHECK(res.best_position.z == s.uav.z);
}

TEST_CASE("constant objective resolves ties to the first grid cell") {
    ScenarioConfig s;
    // Low enough that the linear power underflows to exactly zero, making
    // the surface identically 0.
    s.power_r_dbm = -4000.0;
    s.power_t_dbm = -4000.0;
    SearchRegion region{10.0, 50.0, 20.0, 60.0, 10.0};
    const auto res = grid_search_placement(s, region, rule150());
    CHECK(res.converged);
    CHECK(res.best_position.x == 10.0);
    CHECK(res.best_position.y == 20.0);
    CHECK(res.best_wssr == 0.0);
}

TEST_CASE("trace WSSR is non-decreasing and the result matches a re-evaluation") {
    ScenarioConfig s;
    SearchRegion region{-40.0, 80.0, -40.0, 80.0, 10.0};
    const auto res = grid_search_placement(s, region, rule150());
    REQUIRE(!res.trace.empty());
    for (std::size_t i = 1; i < res.trace.size(); ++i)
        CHECK(res.trace[i].wssr >= res.trace[i - 1].wssr);
    CHECK(res.trace.back().wssr == doctest::Approx(res.best_wssr).epsilon(1e-12));

    ScenarioConfig probe = s;
    probe.uav.x = res.best_position.x;
    probe.uav.y = res.best_position.y;
    CHECK(evaluate_scenario(probe, rule150()).wssr ==
          doctest::Approx(res.best_wssr).epsilon(1e-12));
}

TEST_CASE("convergence is a coordinate-wise fixed point") {
    ScenarioConfig s;
    SearchRegion region{-40.0, 80.0, -40.0, 80.0, 10.0};
    const auto res = grid_search_placement(s, region, rule150());
    REQUIRE(res.converged);
    ScenarioConfig probe = s;
    const auto objective = [&](double x, double y) {
        probe.uav.x = x;
        probe.uav.y = y;
        return evaluate_scenario(probe, rule150()).wssr;
    };
    const double best = objective(res.best_position.x, res.best_position.y);
    for (double dx : {-region.step, region.step}) {
        const double x = res.best_position.x + dx;
        if (x >= region.x_min && x <= region.x_max)
            CHECK(objective(x, res.best_position.y) <= best + 1e-12);
    }
    for (double dy : {-region.step, region.step}) {
        const double y = res.best_position.y + dy;
        if (y >= region.y_min && y <= region.y_max)
            CHECK(objective(res.best_position.x, y) <= best + 1e-12);
    }
}

TEST_CASE("surface is row-major, complete, and dominates the coordinate search") {
    ScenarioConfig s;
    SearchRegion region{-40.0, 80.0, -40.0, 80.0, 10.0};
    const auto cells = wssr_surface(s, region, rule150());
    const std::size_t nx = 13, ny = 13;
    REQUIRE(cells.size() == nx * ny);
    for (std::size_t iy = 0; iy < ny; ++iy)
        for (std::size_t ix = 0; ix < nx; ++ix) {
            const auto& c = cells[iy * nx + ix];
            CHECK(c.x == region.x_min + static_cast<double>(ix) * region.step);
            CHECK(c.y == region.y_min + static_cast<double>(iy) * region.step);
        }

    const auto best_cell =
        *std::max_element(cells.begin(), cells.end(),
                          [](const SurfaceCell& a, const SurfaceCell& b) {
                              return a.wssr < b.wssr;
                          });
    const auto res = grid_search_placement(s, region, rule150());
    CHECK(best_cell.wssr >= res.best_wssr - 1e-12);
    // Two evaluators locate the same optimum within one grid step.
    CHECK(std::abs(best_cell.x - res.best_position.x) <= region.step + 1e-9);
    CHECK(std::abs(best_cell.y - res.best_position.y) <= region.step + 1e-9);
}

TEST_CASE("degenerate regions are rejected") {
    ScenarioConfig s;
    CHECK_THROWS_AS(grid_search_placement(s, {10.0, 0.0, 0.0, 10.0, 1.0}, rule150()),
                    std::invalid_argument);
    CHECK_THROWS_AS(grid_search_placement(s, {0.0, 10.0, 0.0, 10.0, 0.0}, rule150()),
                    std::invalid_argument);
    CHECK_THROWS_AS(grid_search_placement(s, {0.0, 10.0, 0.0, 10.0, 1.0}, rule150(), 1e-6, 0),
                    std::invalid_argument);
}
