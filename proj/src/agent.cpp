#include "aimdalloc/agent.hpp"

#include <algorithm>
#include <cmath>

namespace aimd {

AgentState make_agent(UtilityModel utility, double x0) {
    AgentState s{std::move(utility)};
    s.x = x0;
    update_running_average(s); // x(0) is part of the average
    return s;
}

void update_running_average(AgentState& s) {
    s.xbar = (static_cast<double>(s.samples) * s.xbar + s.x) / static_cast<double>(s.samples + 1);
    s.samples += 1;
}

double lambda_of(const AgentState& s, const AimdParams& p, GammaSel which) {
    double gamma = p.gamma;
    if (which == GammaSel::below_inflection) gamma = p.gamma1;
    if (which == GammaSel::above_inflection) gamma = p.gamma2;
    const double d = std::max(deriv(s.utility, s.xbar), 0.0);
    const double raw = gamma * d / std::max(s.xbar, p.alpha);
    return std::clamp(raw, p.lambda_floor, p.lambda_ceil);
}

void aimd_step(AgentState& s, const AimdParams& p, bool over_capacity, double draw) {
    s.lambda = lambda_of(s, p);
    if (!over_capacity) {
        s.x += p.alpha;
    } else if (draw < s.lambda) {
        s.x *= p.beta;
    }
}

void daimd_step(AgentState& s, const AimdParams& p, bool over_capacity) {
    s.lambda = lambda_of(s, p);
    if (!over_capacity) {
        s.x += p.alpha;
        return;
    }
    if (p.daimd_semantics == DaimdSemantics::as_written) {
        s.x = p.beta * (1.0 - s.lambda) * s.x + s.lambda * s.x;
    } else {
        s.x *= 1.0 - s.lambda * (1.0 - p.beta);
    }
}

void paimd_step(AgentState& s, const AimdParams& p, bool over_capacity, double draw) {
    s.lambda = lambda_of(s, p); // utility holds the payoff, so this is v'
    if (!over_capacity) {
        s.x = std::min(s.xstar, s.x + p.alpha);
    } else if (draw < s.lambda) {
        s.x *= p.beta;
    }
}

void qaimd_step(AgentState& s, const AimdParams& p, bool over_capacity, double draw) {
    if (s.xbar < s.psi) {
        s.lambda = lambda_of(s, p, GammaSel::below_inflection);
        if (over_capacity) {
            s.x = std::max(0.0, s.x - p.alpha);
        } else if (draw < s.lambda) {
            s.x /= p.beta;
        }
    } else {
        s.lambda = lambda_of(s, p, GammaSel::above_inflection);
        if (!over_capacity) {
            s.x += p.alpha;
        } else if (draw < s.lambda) {
            s.x *= p.beta;
        }
    }
}

} // namespace aimd
