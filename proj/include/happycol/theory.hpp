#pragma once

#include <cstdint>
#include <optional>

namespace happycol {

/// Closed-form quantities tying SBM parameters to rho-happiness of the
/// community-induced colouring.
struct ThresholdReport {
    double xi = 0.0;               // finite-n threshold on rho
    double xi_tilde = 0.0;         // n -> infinity limit of xi
    double epsilon_used = 0.0;     // epsilon the xi above was computed with
    double phi = 0.0;              // exponent rate; epsilon_tilde = exp(n * phi)
    double epsilon_tilde = 0.0;    // per-vertex unhappiness bound (may exceed 1)
    double expected_degree = 0.0;
    double prob_lower_bound = 0.0; // bound on Pr(induced colouring is rho-happy)
    bool inequality_holds = false; // sufficient condition at the given epsilon
};

/// (n/k - 1) p + ((k-1)/k) n q, the expected degree in G(n,k,p,q).
double expected_degree(double n, double k, double p, double q);

/// Sufficient condition for the communities to induce a rho-happy colouring
/// with probability at least (1-epsilon)^n:
///   q(k-1)(e^rho - 1) + p(e^rho - e) < (k/n) ln(epsilon).
bool happiness_condition_holds(double n, double k, double p, double q, double rho, double epsilon);

/// Exponent rate: (1/k) (p(e^rho - e) + q(k-1)(e^rho - 1)).
double phi(double k, double p, double q, double rho);

/// Per-vertex unhappiness bound exp(n * phi); vacuous when >= 1.
double epsilon_tilde(double n, double k, double p, double q, double rho);

/// (1 - epsilon_tilde)^n clamped to [0, 1]; 0 once the bound is vacuous.
double prob_lower_bound(double n, double epsilon_tilde);

/// Threshold on rho below which the induced colouring is rho-happy with
/// high probability:
///   max{ min{ ln(((k/n) ln(eps) + p e + (k-1) q) / (p + (k-1) q)),
///             p / (p + (k-1) q) }, 0 }.
/// A non-positive log argument sends the log branch to -infinity.
double xi(double n, double k, double p, double q, double epsilon);

/// Limit of xi as n grows: min{ ln((p e + (k-1) q) / (p + (k-1) q)),
///                               p / (p + (k-1) q) }.
double xi_tilde(double k, double p, double q);

/// Default epsilon = n^-2, small enough that the graph-level bound tends to 1.
double default_epsilon(double n);

/// All of the above for one parameter set. epsilon defaults to n^-2.
ThresholdReport threshold_report(double n, double k, double p, double q, double rho,
                                 std::optional<double> epsilon = std::nullopt);

} // namespace happycol
