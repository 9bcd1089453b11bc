#pragma once

#include <cstdint>
#include <limits>

#include "aimdalloc/utility.hpp"

namespace aimd {

// Algorithm 2 writes the deterministic MD update as beta*(1-lambda)*x + lambda*x,
// which weights the no-change branch by lambda; the exact expectation of the
// stochastic MD step is x*(1 - lambda*(1-beta)). Both are provided.
enum class DaimdSemantics { as_written, expectation };

struct AimdParams {
    double alpha = 1.0;  // additive growth, in (0, C)
    double beta = 0.85;  // multiplicative drop factor, in (0, 1)
    double gamma = 1.0;  // back-off probability scale
    double gamma1 = 1.0; // below-inflection scale (sigmoid variant)
    double gamma2 = 1.0; // at-or-above-inflection scale (sigmoid variant)
    double lambda_floor = 0.001;
    double lambda_ceil = 0.999;
    DaimdSemantics daimd_semantics = DaimdSemantics::as_written;
};

enum class GammaSel { primary, below_inflection, above_inflection };

struct AgentState {
    UtilityModel utility;
    double x = 0.0;     // current allocation
    double xbar = 0.0;  // running average including x(0)
    std::int64_t samples = 0; // values folded into xbar so far
    double lambda = 0.0;      // last computed back-off probability
    // per-user payoff cap, set at init for the price-capped variant
    double xstar = std::numeric_limits<double>::infinity();
    // inflection point, set at init for the sigmoid variant
    double psi = 0.0;
};

AgentState make_agent(UtilityModel utility, double x0);

// xbar <- (samples*xbar + x) / (samples+1); call exactly once per round,
// after the allocation update
void update_running_average(AgentState& s);

// lambda = clamp(Gamma * max(deriv(utility, xbar), 0) / max(xbar, alpha),
//                lambda_floor, lambda_ceil)
// The max(xbar, alpha) denominator and the clamp totalize the xbar -> 0
// singularity; the derivative is floored at 0 because the payoff derivative
// can go negative past its argmax.
double lambda_of(const AgentState& s, const AimdParams& p, GammaSel which = GammaSel::primary);

// One synchronous round per agent. `over_capacity` is the broadcast bit for
// this round (computed from the previous round's aggregate); `draw` is a
// uniform [0,1) value from the agent's private stream.
void aimd_step(AgentState& s, const AimdParams& p, bool over_capacity, double draw);
void daimd_step(AgentState& s, const AimdParams& p, bool over_capacity);
void paimd_step(AgentState& s, const AimdParams& p, bool over_capacity, double draw);
void qaimd_step(AgentState& s, const AimdParams& p, bool over_capacity, double draw);

} // namespace aimd
