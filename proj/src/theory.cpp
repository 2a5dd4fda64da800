#include "happycol/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "happycol/errors.hpp"

namespace happycol {

namespace {

void check_epsilon(double epsilon) {
    if (!(epsilon > 0.0) || !(epsilon < 1.0)) throw ParameterError("epsilon must lie in (0, 1)");
}

void check_rho(double rho) {
    if (!(rho >= 0.0) || !(rho <= 1.0)) throw ParameterError("rho must lie in [0, 1]");
}

} // namespace

double expected_degree(double n, double k, double p, double q) {
    return (n / k - 1.0) * p + (k - 1.0) / k * n * q;
}

bool happiness_condition_holds(double n, double k, double p, double q, double rho, double epsilon) {
    check_epsilon(epsilon);
    check_rho(rho);
    const double lhs = q * (k - 1.0) * (std::exp(rho) - 1.0) + p * (std::exp(rho) - std::exp(1.0));
    return lhs < (k / n) * std::log(epsilon);
}

double phi(double k, double p, double q, double rho) {
    check_rho(rho);
    return (p * (std::exp(rho) - std::exp(1.0)) + q * (k - 1.0) * (std::exp(rho) - 1.0)) / k;
}

double epsilon_tilde(double n, double k, double p, double q, double rho) {
    return std::exp(n * phi(k, p, q, rho));
}

double prob_lower_bound(double n, double epsilon_tilde) {
    if (epsilon_tilde >= 1.0) return 0.0;
    const double value = std::exp(n * std::log1p(-epsilon_tilde));
    return std::clamp(value, 0.0, 1.0);
}

double xi(double n, double k, double p, double q, double epsilon) {
    check_epsilon(epsilon);
    const double denom = p + (k - 1.0) * q;
    const double mean_bound = p / denom;
    const double arg = ((k / n) * std::log(epsilon) + p * std::exp(1.0) + (k - 1.0) * q) / denom;
    const double log_branch = arg > 0.0 ? std::log(arg) : -std::numeric_limits<double>::infinity();
    return std::max(std::min(log_branch, mean_bound), 0.0);
}

double xi_tilde(double k, double p, double q) {
    const double denom = p + (k - 1.0) * q;
    return std::min(std::log((p * std::exp(1.0) + (k - 1.0) * q) / denom), p / denom);
}

double default_epsilon(double n) {
    return 1.0 / (n * n);
}

ThresholdReport threshold_report(double n, double k, double p, double q, double rho,
                                 std::optional<double> epsilon) {
    ThresholdReport report;
    report.epsilon_used = epsilon.value_or(default_epsilon(n));
    report.xi = xi(n, k, p, q, report.epsilon_used);
    report.xi_tilde = xi_tilde(k, p, q);
    report.phi = phi(k, p, q, rho);
    report.epsilon_tilde = epsilon_tilde(n, k, p, q, rho);
    report.expected_degree = expected_degree(n, k, p, q);
    report.prob_lower_bound = prob_lower_bound(n, report.epsilon_tilde);
    report.inequality_holds = happiness_condition_holds(n, k, p, q, rho, report.epsilon_used);
    return report;
}

} // namespace happycol
