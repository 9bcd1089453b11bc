#pragma once

#include <span>
#include <vector>

#include "aimdalloc/utility.hpp"

namespace aimd {

struct BaselineResult {
    std::vector<double> x_star;
    double objective = 0.0;
    double dual = 0.0;     // mu; 0 when the capacity constraint is slack
    double residual = 0.0; // max KKT stationarity violation
};

// Centralized optimum of sum_i [u_i(x_i) - price*x_i] subject to sum x <= C,
// x >= 0, by bisection on the dual variable of the capacity constraint.
// With price = 0 this is the common-good problem. Exact up to the bisection
// bracket (200 halvings), with closed-form inverse marginals per user.
BaselineResult solve_concave(std::span<const LogUtility> models, double price, double capacity);

// Exact optimum of the capacity-discretized sigmoidal program via dynamic
// programming over users and capacity bins (delta = C/bins). When `refine`
// is set, one golden-section pass per user polishes the grid allocation
// within +-delta, holding the others fixed.
BaselineResult solve_sigmoidal(std::span<const SigmoidUtility> models, double capacity,
                               int bins = 2000, bool refine = true);

// Exhaustive reference for tests: full grid over allocations with
// sum x <= C at resolution C/grid_points per axis, n <= 3 only.
// `refine_sweeps` rounds of pairwise-transfer and slack golden-section
// polish sharpen concave instances; leave at 0 to compare grids exactly.
BaselineResult brute_force_oracle(std::span<const UtilityModel> models, double capacity,
                                  int grid_points, int refine_sweeps = 0);

} // namespace aimd
