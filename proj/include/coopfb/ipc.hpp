#pragma once

#include <array>
#include <vector>

namespace coopfb {

enum class IpcScheme { margin, algorithm1, algorithm2, full_power };

struct PowerDecision {
    std::array<double, 2> p{0.0, 0.0};  // per-transmitter power in [0, p_max]
    IpcScheme scheme = IpcScheme::full_power;
    bool feasible = true;      // meaningful for algorithm2
    int iterations_used = 0;   // meaningful for algorithm1
};

// Per-trial scalars feeding every power-control rule. Index m below is the
// victim receiver: lambda_cross_tail[m] is the (L-N+1)-th descending
// eigenvalue of the cross channel into receiver m, and it pairs with the
// quantization error of the OTHER link's inner precoder.
struct IpcInputs {
    std::array<double, 2> lambda_cross_tail{0.0, 0.0};
    std::array<double, 2> epsilon{0.0, 0.0};  // [n]: error of link n's inner precoder
    std::array<std::vector<double>, 2> lambda_direct;  // M values each, descending
    int m_streams = 1;
    double nu = 1.0;
    double p_max = 1.0;
    double theta = 1.0;
    double tau = 1.0;  // interference margin

    // quantization error below this is treated as exactly zero downstream
    static constexpr double kEpsilonFloor = 1e-12;
    double effective_epsilon(int n) const {
        return epsilon[n] < kEpsilonFloor ? 0.0 : epsilon[n];
    }
    // M * nu * lambda_cross_tail[victim] * eps(other): multiplies the other
    // transmitter's power in every interference bound at this receiver
    double cross_coef(int victim) const {
        return m_streams * nu * lambda_cross_tail[victim] * effective_epsilon(1 - victim);
    }
};

// Margin rule: P_n = min(tau / cross_coef(other), p_max); an exactly-zero
// coefficient lifts the constraint.
PowerDecision margin_power(const IpcInputs& inputs);

// Margin-scheme achievable throughput: interference replaced by the blanket
// margin tau in every stream's denominator.
double achievable_throughput_margin(const IpcInputs& inputs, const PowerDecision& decision);

// Lower bound A on the instantaneous sum throughput at powers (p1, p2):
// residual interference replaced by its per-stream upper bound.
double throughput_lower_bound(const IpcInputs& inputs, double p1, double p2);

struct SlopeTerms {
    double mu = 0.0;   // own-link gain term
    double psi = 0.0;  // relief of the other link's denominators
    double rho = 0.0;  // harm to the other link
    double total() const { return mu + psi - rho; }
};

// Analytic partial derivative of throughput_lower_bound with respect to the
// power of link m (0-based).
SlopeTerms slope(const IpcInputs& inputs, double p1, double p2, int m);

struct Alg1Options {
    double step_coeff = 0.05;   // first step moves at most step_coeff * p_max
    int max_iters = 200;
    double tol_coeff = 1e-4;    // stop when |dP1|+|dP2| < tol_coeff * p_max
    bool custom_init = false;
    std::array<double, 2> init{0.0, 0.0};  // used when custom_init is set
};

// Projected gradient ascent on the throughput lower bound. The step halves
// whenever it would decrease the objective, so the returned point never falls
// below the initial one. Default initialization is (p_max/2, p_max/2).
PowerDecision algorithm1(const IpcInputs& inputs, const Alg1Options& options = {});

enum class Alg2Fallback { p_max, zero, margin };

// Closed-form outage-oriented control: the unique element-wise minimal power
// pair meeting the per-link SINR-floor constraints, when one exists inside
// the power box; otherwise the fallback policy with feasible = false.
PowerDecision algorithm2(const IpcInputs& inputs, Alg2Fallback fallback = Alg2Fallback::p_max);

PowerDecision full_power(const IpcInputs& inputs);

}  // namespace coopfb
