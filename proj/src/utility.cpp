#include "aimdalloc/utility.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aimd {

LogUtility::LogUtility(double eta, double chi) : eta_(eta), chi_(chi) {
    if (!(eta > 0.0)) throw std::invalid_argument("LogUtility: eta must be > 0");
    if (!(chi > 0.0)) throw std::invalid_argument("LogUtility: chi must be > 0");
    norm_ = std::log1p(eta_ * chi_);
}

double LogUtility::eval(double x) const {
    // same log1p expression as the cached norm, so eval(chi) == 100 exactly
    return 100.0 * std::log1p(eta_ * x) / norm_;
}

double LogUtility::deriv(double x) const {
    return 100.0 * eta_ / ((1.0 + eta_ * x) * norm_);
}

PayoffUtility::PayoffUtility(LogUtility base, double price) : base_(base), price_(price) {
    if (!(price >= 0.0)) throw std::invalid_argument("PayoffUtility: price must be >= 0");
}

double PayoffUtility::argmax(double cap) const {
    if (price_ <= 0.0) return cap; // v strictly increasing
    // v'(x) = 0  =>  1 + eta*x = 100*eta / (price * log(1+eta*chi))
    const double m = 100.0 * base_.eta() / (price_ * base_.log_norm());
    const double x = (m - 1.0) / base_.eta();
    return std::clamp(x, 0.0, cap);
}

SigmoidUtility::SigmoidUtility(double eta, double psi) : eta_(eta), psi_(psi) {
    if (!(eta > 0.0)) throw std::invalid_argument("SigmoidUtility: eta must be > 0");
    if (!(psi > 0.0)) throw std::invalid_argument("SigmoidUtility: psi must be > 0");
}

double SigmoidUtility::eval(double x) const {
    // exp(-eta*(x-psi)) overflows to +inf for x far below psi; 100/inf -> 0
    const double e = std::exp(-eta_ * (x - psi_));
    const double offset = 100.0 / (1.0 + std::exp(eta_ * psi_));
    return 100.0 / (1.0 + e) - offset;
}

double SigmoidUtility::deriv(double x) const {
    const double a = eta_ * (x - psi_);
    // w'(x) = 100*eta*e / (1+e)^2 with e = exp(-a); rewrite per tail to avoid
    // inf/inf
    if (a >= 0.0) {
        const double e = std::exp(-a);
        const double d = 1.0 + e;
        return 100.0 * eta_ * e / (d * d);
    }
    const double e = std::exp(a); // exp(-|a|), underflows to 0 gracefully
    const double d = 1.0 + e;
    return 100.0 * eta_ * e / (d * d);
}

StepUtility::StepUtility(double theta) : theta_(theta) {
    if (!(theta > 0.0)) throw std::invalid_argument("StepUtility: theta must be > 0");
}

PenaltyFn::PenaltyFn(int p, double capacity) : p_(p), capacity_(capacity) {
    if (p < 1) throw std::invalid_argument("PenaltyFn: p must be a positive integer");
    if (!(capacity > 0.0)) throw std::invalid_argument("PenaltyFn: capacity must be > 0");
}

namespace {
// integer power by squaring; deterministic across platforms unlike std::pow
double ipow(double b, int e) {
    double r = 1.0;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}
} // namespace

double PenaltyFn::eval(double z) const {
    if (z < 0.0 || z > capacity_)
        throw std::domain_error("PenaltyFn: argument outside [0, capacity]");
    return std::sqrt(1.0 - ipow(z / capacity_, p_));
}

double PenaltyFn::deriv(double z) const {
    if (z < 0.0 || z >= capacity_)
        throw std::domain_error("PenaltyFn: derivative defined on [0, capacity)");
    const double s = z / capacity_;
    return -0.5 * p_ * ipow(s, p_ - 1) / (capacity_ * std::sqrt(1.0 - ipow(s, p_)));
}

double eval(const UtilityModel& model, double x) {
    return std::visit([x](const auto& m) { return m.eval(x); }, model);
}

double deriv(const UtilityModel& model, double x) {
    return std::visit(
        [x](const auto& m) -> double {
            if constexpr (std::is_same_v<std::decay_t<decltype(m)>, StepUtility>) {
                throw std::invalid_argument("deriv: StepUtility is not differentiable");
            } else {
                return m.deriv(x);
            }
        },
        model);
}

} // namespace aimd
