#include "coopfb/ipc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace coopfb {

namespace {

constexpr double kLog2E = std::numbers::log2e;

double clamp_power(double p, double p_max) { return std::clamp(p, 0.0, p_max); }

}  // namespace

PowerDecision margin_power(const IpcInputs& inputs) {
    PowerDecision d;
    d.scheme = IpcScheme::margin;
    for (int n = 0; n < 2; ++n) {
        const double coef = inputs.cross_coef(1 - n);  // bounds T_n's interference at R_other
        d.p[n] = coef > 0.0 ? std::min(inputs.tau / coef, inputs.p_max) : inputs.p_max;
    }
    return d;
}

double achievable_throughput_margin(const IpcInputs& inputs, const PowerDecision& decision) {
    double a = 0.0;
    for (int m = 0; m < 2; ++m)
        for (int l = 0; l < inputs.m_streams; ++l)
            a += std::log2(1.0 +
                           decision.p[m] * inputs.lambda_direct[m][l] / (1.0 + inputs.tau));
    return a;
}

double throughput_lower_bound(const IpcInputs& inputs, double p1, double p2) {
    const std::array<double, 2> p{p1, p2};
    double a = 0.0;
    for (int m = 0; m < 2; ++m) {
        const double denom = 1.0 + p[1 - m] * inputs.cross_coef(m);
        for (int l = 0; l < inputs.m_streams; ++l)
            a += std::log2(1.0 + p[m] * inputs.lambda_direct[m][l] / denom);
    }
    return a;
}

SlopeTerms slope(const IpcInputs& inputs, double p1, double p2, int m) {
    const std::array<double, 2> p{p1, p2};
    const int n = 1 - m;
    const double coef_m = inputs.cross_coef(m);  // scales p[n] at receiver m
    const double coef_n = inputs.cross_coef(n);  // scales p[m] at receiver n

    SlopeTerms out;
    for (int l = 0; l < inputs.m_streams; ++l) {
        const double lam = inputs.lambda_direct[m][l];
        out.mu += kLog2E * lam / (1.0 + coef_m * p[n] + lam * p[m]);
    }
    for (int l = 0; l < inputs.m_streams; ++l) {
        const double lam = inputs.lambda_direct[n][l];
        out.psi += kLog2E * coef_n / (1.0 + coef_n * p[m] + lam * p[n]);
    }
    out.rho = kLog2E * inputs.m_streams * coef_n / (1.0 + coef_n * p[m]);
    return out;
}

PowerDecision algorithm1(const IpcInputs& inputs, const Alg1Options& options) {
    PowerDecision d;
    d.scheme = IpcScheme::algorithm1;
    std::array<double, 2> p =
        options.custom_init ? options.init
                            : std::array<double, 2>{inputs.p_max / 2.0, inputs.p_max / 2.0};
    p[0] = clamp_power(p[0], inputs.p_max);
    p[1] = clamp_power(p[1], inputs.p_max);

    const double g0 = std::max(std::abs(slope(inputs, p[0], p[1], 0).total()),
                               std::abs(slope(inputs, p[0], p[1], 1).total()));
    if (!(g0 > 0.0)) {
        d.p = p;
        return d;
    }
    double step = options.step_coeff * inputs.p_max / g0;
    double a_cur = throughput_lower_bound(inputs, p[0], p[1]);
    const double tol = options.tol_coeff * inputs.p_max;

    int iters = 0;
    while (iters < options.max_iters) {
        ++iters;
        const double s0 = slope(inputs, p[0], p[1], 0).total();
        const double s1 = slope(inputs, p[0], p[1], 1).total();

        std::array<double, 2> cand;
        double a_cand = -1.0;
        bool accepted = false;
        while (true) {
            cand[0] = clamp_power(p[0] + s0 * step, inputs.p_max);
            cand[1] = clamp_power(p[1] + s1 * step, inputs.p_max);
            a_cand = throughput_lower_bound(inputs, cand[0], cand[1]);
            if (a_cand >= a_cur) {
                accepted = true;
                break;
            }
            step *= 0.5;
            if (step * (std::abs(s0) + std::abs(s1)) < tol) break;
        }
        if (!accepted) break;

        const double move = std::abs(cand[0] - p[0]) + std::abs(cand[1] - p[1]);
        p = cand;
        a_cur = a_cand;
        if (move < tol) break;
    }

    d.p = p;
    d.iterations_used = iters;
    return d;
}

PowerDecision algorithm2(const IpcInputs& inputs, Alg2Fallback fallback) {
    PowerDecision d;
    d.scheme = IpcScheme::algorithm2;

    const double lam_min0 = inputs.lambda_direct[0][inputs.m_streams - 1];
    const double lam_min1 = inputs.lambda_direct[1][inputs.m_streams - 1];
    bool ok = lam_min0 > 0.0 && lam_min1 > 0.0;

    std::array<double, 2> acute{0.0, 0.0};
    if (ok) {
        const double a0 = inputs.theta / lam_min0;
        const double a1 = inputs.theta / lam_min1;
        const double b0 = inputs.cross_coef(0) * inputs.theta / lam_min0;  // b_01
        const double b1 = inputs.cross_coef(1) * inputs.theta / lam_min1;  // b_10
        const double denom = 1.0 - b0 * b1;
        if (denom <= 0.0) {
            ok = false;  // constraints have no finite positive solution
        } else {
            acute[0] = (a0 + b0 * a1) / denom;
            acute[1] = (a1 + b1 * a0) / denom;
            ok = acute[0] <= inputs.p_max && acute[1] <= inputs.p_max;
        }
    }

    if (ok) {
        d.p = acute;
        d.feasible = true;
        return d;
    }
    d.feasible = false;
    switch (fallback) {
        case Alg2Fallback::p_max:
            d.p = {inputs.p_max, inputs.p_max};
            break;
        case Alg2Fallback::zero:
            d.p = {0.0, 0.0};
            break;
        case Alg2Fallback::margin:
            d.p = margin_power(inputs).p;
            break;
    }
    return d;
}

PowerDecision full_power(const IpcInputs& inputs) {
    PowerDecision d;
    d.scheme = IpcScheme::full_power;
    d.p = {inputs.p_max, inputs.p_max};
    return d;
}

}  // namespace coopfb
