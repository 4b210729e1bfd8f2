// SPDX-License-Identifier: Apache-2.0
#include "starsec/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace starsec {

namespace {

std::vector<double> grid_axis(double lo, double hi, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("SearchRegion: step must be > 0");
    if (!(lo <= hi)) throw std::invalid_argument("SearchRegion: empty axis (min > max)");
    std::vector<double> axis;
    const int n = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
    axis.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) axis.push_back(lo + i * step);
    return axis;
}

double snap_to_axis(const std::vector<double>& axis, double v) {
    double best = axis.front();
    double best_d = std::abs(v - best);
    for (double a : axis) {
        const double d = std::abs(v - a);
        if (d < best_d) {
            best = a;
            best_d = d;
        }
    }
    return best;
}

}  // namespace

GridSearchResult grid_search_placement(const ScenarioConfig& s, const SearchRegion& region,
                                       const QuadratureRule& rule, double eps0, int k_max) {
    require_valid(s);
    const auto xs = grid_axis(region.x_min, region.x_max, region.step);
    const auto ys = grid_axis(region.y_min, region.y_max, region.step);
    if (k_max < 1) throw std::invalid_argument("grid_search_placement: k_max must be >= 1");

    ScenarioConfig work = s;
    const auto objective = [&](double x, double y) {
        work.uav.x = x;
        work.uav.y = y;
        return evaluate_scenario(work, rule).wssr;
    };

    double x = snap_to_axis(xs, s.uav.x);
    double y = snap_to_axis(ys, s.uav.y);

    GridSearchResult out;
    out.converged = false;
    for (int k = 1; k <= k_max; ++k) {
        const double x_prev = x, y_prev = y;

        // Sweep x at fixed y; strict improvement keeps the first maximizer.
        double best_w = objective(xs.front(), y);
        double best_x = xs.front();
        for (std::size_t i = 1; i < xs.size(); ++i) {
            const double w = objective(xs[i], y);
            if (w > best_w) {
                best_w = w;
                best_x = xs[i];
            }
        }
        x = best_x;

        // Sweep y at the updated x.
        double best_y = ys.front();
        best_w = objective(x, ys.front());
        for (std::size_t i = 1; i < ys.size(); ++i) {
            const double w = objective(x, ys[i]);
            if (w > best_w) {
                best_w = w;
                best_y = ys[i];
            }
        }
        y = best_y;

        out.iterations = k;
        out.trace.push_back({k, {x, y, s.uav.z}, best_w});
        if (std::hypot(x - x_prev, y - y_prev) < eps0) {
            out.converged = true;
            break;
        }
    }
    out.best_position = {x, y, s.uav.z};
    out.best_wssr = objective(x, y);
    return out;
}

std::vector<SurfaceCell> wssr_surface(const ScenarioConfig& s, const SearchRegion& region,
                                      const QuadratureRule& rule) {
    require_valid(s);
    const auto xs = grid_axis(region.x_min, region.x_max, region.step);
    const auto ys = grid_axis(region.y_min, region.y_max, region.step);

    ScenarioConfig work = s;
    std::vector<SurfaceCell> cells;
    cells.reserve(xs.size() * ys.size());
    for (double y : ys)
        for (double x : xs) {
            work.uav.x = x;
            work.uav.y = y;
            cells.push_back({x, y, evaluate_scenario(work, rule).wssr});
        }
    return cells;
}

}  // namespace starsec
