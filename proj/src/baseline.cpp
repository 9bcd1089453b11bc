#include "aimdalloc/baseline.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace aimd {

namespace {

// allocation of user `m` when the capacity dual is mu: the x >= 0 solving
// u'(x) - price = mu, clamped to [0, capacity]
double alloc_at_dual(const LogUtility& m, double price, double mu, double capacity) {
    const double want = mu + price; // required marginal utility
    if (want <= 0.0) return capacity;
    if (want >= m.deriv(0.0)) return 0.0;
    const double x = (100.0 * m.eta() / (want * m.log_norm()) - 1.0) / m.eta();
    return std::clamp(x, 0.0, capacity);
}

double golden_max(const std::function<double(double)>& f, double lo, double hi, double tol) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
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

} // namespace

BaselineResult solve_concave(std::span<const LogUtility> models, double price, double capacity) {
    if (models.empty()) throw std::invalid_argument("solve_concave: no users");
    if (!(capacity > 0.0)) throw std::invalid_argument("solve_concave: capacity must be > 0");
    const std::size_t n = models.size();

    auto fill = [&](double mu, std::vector<double>& x) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = alloc_at_dual(models[i], price, mu, capacity);
            sum += x[i];
        }
        return sum;
    };

    BaselineResult r;
    r.x_star.resize(n);

    if (fill(0.0, r.x_star) < capacity) {
        // every user at its unconstrained payoff argmax; constraint slack
        r.dual = 0.0;
    } else {
        double lo = 0.0; // sum >= capacity
        double hi = 0.0; // sum < capacity
        for (const auto& m : models) hi = std::max(hi, m.deriv(0.0) - price);
        std::vector<double> tmp(n);
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (fill(mid, tmp) >= capacity)
                lo = mid;
            else
                hi = mid;
        }
        // the hi side keeps sum <= capacity; by now both brackets agree to
        // machine precision
        r.dual = hi;
        fill(hi, r.x_star);
    }

    r.objective = 0.0;
    r.residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = r.x_star[i];
        r.objective += models[i].eval(xi) - price * xi;
        const double marginal = models[i].deriv(xi) - price;
        if (xi > 0.0)
            r.residual = std::max(r.residual, std::abs(marginal - r.dual));
        else
            r.residual = std::max(r.residual, std::max(0.0, marginal - r.dual));
    }
    return r;
}

BaselineResult solve_sigmoidal(std::span<const SigmoidUtility> models, double capacity, int bins,
                               bool refine) {
    if (models.empty()) throw std::invalid_argument("solve_sigmoidal: no users");
    if (bins < 100) throw std::invalid_argument("solve_sigmoidal: bins must be >= 100");
    const std::size_t n = models.size();
    const int M = bins;
    const double delta = capacity / M;

    // best[c] = optimal objective of the first k users with at most c bins;
    // choice[k][c] reconstructs user k's bin count
    std::vector<double> best(M + 1, 0.0), next(M + 1, 0.0), vals(M + 1, 0.0);
    std::vector<std::vector<int>> choice(n, std::vector<int>(M + 1, 0));
    for (std::size_t k = 0; k < n; ++k) {
        for (int j = 0; j <= M; ++j) vals[j] = models[k].eval(j * delta);
        for (int c = 0; c <= M; ++c) {
            double b = -std::numeric_limits<double>::infinity();
            int arg = 0;
            for (int j = 0; j <= c; ++j) {
                const double cand = vals[j] + best[c - j];
                if (cand > b) {
                    b = cand;
                    arg = j;
                }
            }
            next[c] = b;
            choice[k][c] = arg;
        }
        std::swap(best, next);
    }

    BaselineResult r;
    r.x_star.assign(n, 0.0);
    r.objective = best[M];
    int c = M;
    for (std::size_t k = n; k-- > 0;) {
        const int j = choice[k][c];
        r.x_star[k] = j * delta;
        c -= j;
    }

    if (refine) {
        double used = 0.0;
        for (double xi : r.x_star) used += xi;
        for (std::size_t k = 0; k < n; ++k) {
            const double lo = std::max(0.0, r.x_star[k] - delta);
            const double hi = r.x_star[k] + std::min(delta, capacity - used);
            if (hi <= lo) continue;
            const auto& m = models[k];
            const double xk =
                golden_max([&](double x) { return m.eval(x); }, lo, hi, 1e-12 * capacity);
            if (m.eval(xk) > m.eval(r.x_star[k])) {
                used += xk - r.x_star[k];
                r.x_star[k] = xk;
            }
        }
        r.objective = 0.0;
        for (std::size_t k = 0; k < n; ++k) r.objective += models[k].eval(r.x_star[k]);
    }
    return r;
}

BaselineResult brute_force_oracle(std::span<const UtilityModel> models, double capacity,
                                  int grid_points, int refine_sweeps) {
    const std::size_t n = models.size();
    if (n == 0 || n > 3) throw std::invalid_argument("brute_force_oracle: n must be 1..3");
    if (grid_points < 2) throw std::invalid_argument("brute_force_oracle: grid too coarse");
    const int G = grid_points;
    const double delta = capacity / G;

    std::vector<std::vector<double>> vals(n, std::vector<double>(G + 1));
    for (std::size_t k = 0; k < n; ++k)
        for (int j = 0; j <= G; ++j) vals[k][j] = eval(models[k], j * delta);

    BaselineResult r;
    r.x_star.assign(n, 0.0);
    double best = -std::numeric_limits<double>::infinity();
    std::array<int, 3> arg{0, 0, 0};
    if (n == 1) {
        for (int a = 0; a <= G; ++a)
            if (vals[0][a] > best) {
                best = vals[0][a];
                arg = {a, 0, 0};
            }
    } else if (n == 2) {
        for (int a = 0; a <= G; ++a)
            for (int b = 0; b + a <= G; ++b) {
                const double o = vals[0][a] + vals[1][b];
                if (o > best) {
                    best = o;
                    arg = {a, b, 0};
                }
            }
    } else {
        for (int a = 0; a <= G; ++a)
            for (int b = 0; b + a <= G; ++b) {
                const double va = vals[0][a];
                for (int c = 0; c + b + a <= G; ++c) {
                    const double o = va + vals[1][b] + vals[2][c];
                    if (o > best) {
                        best = o;
                        arg = {a, b, c};
                    }
                }
            }
    }
    for (std::size_t k = 0; k < n; ++k) r.x_star[k] = arg[k] * delta;
    r.objective = best;

    // pairwise-transfer + slack polish; exact for concave objectives
    for (int sweep = 0; sweep < refine_sweeps; ++sweep) {
        double used = 0.0;
        for (double xi : r.x_star) used += xi;
        for (std::size_t i = 0; i < n; ++i) {
            const double slack = capacity - used;
            const double hi = r.x_star[i] + slack;
            const double xi = golden_max([&](double x) { return eval(models[i], x); }, 0.0, hi,
                                         1e-13 * capacity);
            used += xi - r.x_star[i];
            r.x_star[i] = xi;
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const double total = r.x_star[i] + r.x_star[j];
                const double xi = golden_max(
                    [&](double x) { return eval(models[i], x) + eval(models[j], total - x); }, 0.0,
                    total, 1e-13 * capacity);
                r.x_star[i] = xi;
                r.x_star[j] = total - xi;
            }
    }
    if (refine_sweeps > 0) {
        r.objective = 0.0;
        for (std::size_t k = 0; k < n; ++k) r.objective += eval(models[k], r.x_star[k]);
    }
    return r;
}

} // namespace aimd
