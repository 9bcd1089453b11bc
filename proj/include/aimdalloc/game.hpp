#pragma once

#include <span>
#include <vector>

#include "aimdalloc/baseline.hpp"
#include "aimdalloc/utility.hpp"

namespace aimd {

// Strategic competition over the shared capacity: each player picks its own
// demand in [0, C], payoffs are the utilities penalized by how close the
// aggregate gets to C.
struct GameConfig {
    std::vector<LogUtility> models;
    double capacity = 0.0;
    double price = 0.0;
    int penalty_p = 1;
    double tol = 1e-8;
    int max_iters = 10000;
    double damping = 0.5;
    // starting profile; empty -> C/(2n) each
    std::vector<double> x_init;
};

struct NashResult {
    std::vector<double> x_ne;
    int iterations = 0;
    double residual = 0.0;     // sup-norm best-response displacement
    double foc_residual = 0.0; // max |d v~_i / d x_i| over interior coordinates
    bool converged = false;
    double welfare = 0.0; // sum of penalized payoffs at x_ne
    double poa = 0.0;     // filled by poa()
};

// payoff with the hard capacity cutoff: u_i(x_i) if sum <= C, else 0
double payoff_discontinuous(std::size_t i, std::span<const double> profile,
                            const GameConfig& cfg);

// best response of the cutoff game: exactly the remaining capacity
double br_discontinuous(double others_sum, double capacity);

// continuous payoff: u_i(x_i) * tau(sum_j x_j) - price * x_i, domain sum <= C
double payoff_penalized(std::size_t i, std::span<const double> profile, const GameConfig& cfg);

// analytic d payoff_penalized / d x_i (requires sum < C)
double payoff_penalized_partial(std::size_t i, std::span<const double> profile,
                                const GameConfig& cfg);

// best response of player i over [0, C - sum_{j != i} x_j]: 64-point coarse
// scan + golden-section, argument tolerance 1e-10
double best_response(std::size_t i, std::span<const double> profile, const GameConfig& cfg);

// damped simultaneous best-response iteration; deterministic
NashResult nash_solve(const GameConfig& cfg);

// PoA = sum_i v~_i(x_ne) / sum_i v_i(x*), with x* from solve_concave on the
// un-penalized payoffs; the asymmetric numerator/denominator pair is
// deliberate
double poa(const GameConfig& cfg, const NashResult& nash, const BaselineResult& baseline);

} // namespace aimd
