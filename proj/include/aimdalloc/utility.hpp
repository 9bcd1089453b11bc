#pragma once

#include <variant>

namespace aimd {

// Normalized logarithmic utility: u(x) = 100 * log(1 + eta*x) / log(1 + eta*chi).
// u(0) = 0 and u(chi) = 100; strictly increasing and concave on x >= 0.
class LogUtility {
public:
    LogUtility(double eta, double chi);

    double eval(double x) const;
    double deriv(double x) const;

    double eta() const { return eta_; }
    double chi() const { return chi_; }
    // log(1 + eta*chi), cached
    double log_norm() const { return norm_; }

private:
    double eta_;
    double chi_;
    double norm_;
};

// Payoff of a subsidized good: v(x) = u(x) - price*x. Concave, not monotone.
class PayoffUtility {
public:
    PayoffUtility(LogUtility base, double price);

    double eval(double x) const { return base_.eval(x) - price_ * x; }
    double deriv(double x) const { return base_.deriv(x) - price_; }

    // argmax of v over [0, cap], closed form
    double argmax(double cap) const;

    const LogUtility& base() const { return base_; }
    double price() const { return price_; }

private:
    LogUtility base_;
    double price_;
};

// S-shaped utility: w(x) = 100/(1+exp(-eta*(x-psi))) - 100/(1+exp(eta*psi)).
// w(0) = 0, strictly increasing, convex below the inflection psi and concave
// above it, sup w < 100.
class SigmoidUtility {
public:
    SigmoidUtility(double eta, double psi);

    double eval(double x) const;
    double deriv(double x) const;

    double eta() const { return eta_; }
    double psi() const { return psi_; }

private:
    double eta_;
    double psi_;
};

// All-or-nothing utility: 0 below the threshold, 100 at or above it.
// Evaluation only; the algorithms consume its sigmoid approximation.
class StepUtility {
public:
    explicit StepUtility(double theta);

    double eval(double x) const { return x < theta_ ? 0.0 : 100.0; }
    double theta() const { return theta_; }

private:
    double theta_;
};

// Concave penalty tau(z) = sqrt(1 - (z/C)^p) on [0, C]; tau(0)=1, tau(C)=0.
class PenaltyFn {
public:
    PenaltyFn(int p, double capacity);

    // domain [0, C]; outside it the square root is imaginary -> domain error
    double eval(double z) const;
    // d tau / dz on [0, C); unbounded at z = C
    double deriv(double z) const;

    int p() const { return p_; }
    double capacity() const { return capacity_; }

private:
    int p_;
    double capacity_;
};

using UtilityModel = std::variant<LogUtility, PayoffUtility, SigmoidUtility, StepUtility>;

double eval(const UtilityModel& model, double x);

// exact analytic derivative; StepUtility is not differentiable -> throws
double deriv(const UtilityModel& model, double x);

} // namespace aimd
