#include "aimdalloc/game.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aimd {

namespace {

double profile_sum(std::span<const double> profile) {
    double s = 0.0;
    for (double v : profile) s += v;
    return s;
}

} // namespace

double payoff_discontinuous(std::size_t i, std::span<const double> profile,
                            const GameConfig& cfg) {
    if (profile_sum(profile) > cfg.capacity) return 0.0;
    return cfg.models[i].eval(profile[i]);
}

double br_discontinuous(double others_sum, double capacity) {
    return capacity - others_sum;
}

double payoff_penalized(std::size_t i, std::span<const double> profile, const GameConfig& cfg) {
    const PenaltyFn tau(cfg.penalty_p, cfg.capacity);
    const double z = profile_sum(profile); // tau throws outside [0, C]
    return cfg.models[i].eval(profile[i]) * tau.eval(z) - cfg.price * profile[i];
}

double payoff_penalized_partial(std::size_t i, std::span<const double> profile,
                                const GameConfig& cfg) {
    const PenaltyFn tau(cfg.penalty_p, cfg.capacity);
    const double z = profile_sum(profile);
    return cfg.models[i].deriv(profile[i]) * tau.eval(z) +
           cfg.models[i].eval(profile[i]) * tau.deriv(z) - cfg.price;
}

double best_response(std::size_t i, std::span<const double> profile, const GameConfig& cfg) {
    const PenaltyFn tau(cfg.penalty_p, cfg.capacity);
    const double others = profile_sum(profile) - profile[i];
    const double ub = cfg.capacity - others;
    if (ub <= 0.0) return 0.0;
    const auto& m = cfg.models[i];
    auto f = [&](double x) { return m.eval(x) * tau.eval(others + x) - cfg.price * x; };

    // coarse scan guards against non-unimodal payoffs
    constexpr int kScan = 64;
    int best_k = 0;
    double best_v = f(0.0);
    for (int k = 1; k <= kScan; ++k) {
        const double v = f(ub * k / kScan);
        if (v > best_v) {
            best_v = v;
            best_k = k;
        }
    }
    double a = ub * std::max(0, best_k - 1) / kScan;
    double b = ub * std::min(kScan, best_k + 1) / kScan;
    constexpr double kInvPhi = 0.6180339887498949;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > 1e-10) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

NashResult nash_solve(const GameConfig& cfg) {
    const std::size_t n = cfg.models.size();
    if (n == 0) throw std::invalid_argument("nash_solve: no players");
    if (!(cfg.tol > 0.0)) throw std::invalid_argument("nash_solve: tol must be > 0");
    if (!(cfg.damping > 0.0 && cfg.damping <= 1.0))
        throw std::invalid_argument("nash_solve: damping must be in (0, 1]");

    NashResult r;
    r.x_ne = cfg.x_init;
    if (r.x_ne.empty()) r.x_ne.assign(n, cfg.capacity / (2.0 * static_cast<double>(n)));
    if (r.x_ne.size() != n) throw std::invalid_argument("nash_solve: x_init size mismatch");

    std::vector<double> br(n);
    for (int it = 1; it <= cfg.max_iters; ++it) {
        double disp = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            br[i] = best_response(i, r.x_ne, cfg);
            disp = std::max(disp, std::abs(br[i] - r.x_ne[i]));
        }
        r.iterations = it;
        r.residual = disp;
        if (disp <= cfg.tol) {
            r.converged = true;
            break;
        }
        // Jacobi update keeps the iteration order-independent
        for (std::size_t i = 0; i < n; ++i)
            r.x_ne[i] = (1.0 - cfg.damping) * r.x_ne[i] + cfg.damping * br[i];
    }

    const double z = profile_sum(r.x_ne);
    r.foc_residual = 0.0;
    if (z < cfg.capacity) {
        for (std::size_t i = 0; i < n; ++i)
            if (r.x_ne[i] > 0.0)
                r.foc_residual =
                    std::max(r.foc_residual, std::abs(payoff_penalized_partial(i, r.x_ne, cfg)));
    }
    r.welfare = 0.0;
    for (std::size_t i = 0; i < n; ++i) r.welfare += payoff_penalized(i, r.x_ne, cfg);
    return r;
}

double poa(const GameConfig& cfg, const NashResult& nash, const BaselineResult& baseline) {
    if (!(baseline.objective > 0.0))
        throw std::domain_error("poa: centralized objective must be positive");
    return nash.welfare / baseline.objective;
}

} // namespace aimd
