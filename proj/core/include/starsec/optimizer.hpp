// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "starsec/analytic_rates.hpp"
#include "starsec/scenario.hpp"

namespace starsec {

struct SearchRegion {
    double x_min = -100.0;
    double x_max = 100.0;
    double y_min = -100.0;
    double y_max = 100.0;
    double step = 1.0;  // Algorithm default: 1 m grid
};

struct PlacementStep {
    int iteration = 0;
    Position3D position;
    double wssr = 0.0;
};

struct GridSearchResult {
    Position3D best_position;
    double best_wssr = 0.0;
    int iterations = 0;
    std::vector<PlacementStep> trace;  // wssr non-decreasing by construction
    bool converged = false;
};

/// Alternating 1-D grid sweeps over the UAV's horizontal position
/// maximizing the WSSR (UAV altitude fixed). Ties resolve to the first
/// maximizing cell in scan order. Stops when the position stops moving by
/// more than eps0 or after k_max iterations.
GridSearchResult grid_search_placement(const ScenarioConfig& s, const SearchRegion& region,
                                       const QuadratureRule& rule, double eps0 = 1e-6,
                                       int k_max = 50);

struct SurfaceCell {
    double x = 0.0;
    double y = 0.0;
    double wssr = 0.0;
};

/// Dense WSSR evaluation over the full grid, row-major in y then x.
std::vector<SurfaceCell> wssr_surface(const ScenarioConfig& s, const SearchRegion& region,
                                      const QuadratureRule& rule);

}  // namespace starsec
