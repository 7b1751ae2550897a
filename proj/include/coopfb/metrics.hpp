#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "coopfb/channel.hpp"
#include "coopfb/ipc.hpp"
#include "coopfb/precoding.hpp"
#include "coopfb/quantization.hpp"

namespace coopfb {

struct TrialMetrics {
    std::array<std::vector<double>, 2> sinr;          // per link, per stream
    std::array<std::vector<double>, 2> interference;  // residual cross power per stream
    double throughput = 0.0;   // sum log2(1 + sinr) over both links
    double achievable = 0.0;   // per-trial analytic lower bound for the scheme
    bool outage = false;       // any stream below theta
    PowerDecision powers;
    std::array<double, 2> epsilon{0.0, 0.0};
};

// Receive SINR per link and stream at the given powers, noise power 1:
// P_m |diag_l(G_m^dagger H_mm F_m)|^2 / (1 + residual interference).
std::array<std::vector<double>, 2> sinr(const PrecoderSet& set,
                                        const NetworkRealization& realization,
                                        const std::array<double, 2>& powers);

// Per-stream SINR lower bound from the interference bound:
// P_m lam_mm^[l] / (1 + P_n * cross_coef(m)).
std::array<std::vector<double>, 2> sinr_tilde(const IpcInputs& inputs,
                                              const std::array<double, 2>& powers);

// IPC scalars of one assembled trial at a given p_max/theta/tau operating
// point.
IpcInputs make_ipc_inputs(const PrecoderSet& set, const SystemParams& params, double p_max,
                          double tau);

// Full per-trial evaluation for one power decision. The achievable column is
// the margin formula for margin decisions and the throughput lower bound at
// the decided powers otherwise.
TrialMetrics evaluate_trial(const PrecoderSet& set, const NetworkRealization& realization,
                            const IpcInputs& inputs, const PowerDecision& decision,
                            double theta);

// Power-independent matrix products of one assembled trial; lets several
// power decisions be scored without redoing the linear algebra.
struct TrialCache {
    std::array<std::vector<double>, 2> diag_sq;  // |diag_l(G_m^dagger H_mm F_m)|^2
    std::array<std::vector<double>, 2> row_sq;   // |row_l(G_m^dagger H_mn F_n)|^2
    std::array<double, 2> epsilon{0.0, 0.0};
    double nu = 1.0;
};

TrialCache make_trial_cache(const PrecoderSet& set, const NetworkRealization& realization);

// Same results as the PrecoderSet overload, computed from the cache.
TrialMetrics evaluate_trial(const TrialCache& cache, const IpcInputs& inputs,
                            const PowerDecision& decision, double theta);

struct SweepPoint {
    std::uint64_t trials = 0;
    double throughput_mean = 0.0;
    double throughput_stderr = 0.0;
    double achievable_mean = 0.0;
    double achievable_stderr = 0.0;
    double outage_rate = 0.0;
    double outage_lo = 0.0;  // Wilson 95% interval
    double outage_hi = 0.0;
    double mean_power = 0.0;      // mean of (P1+P2)/2, linear
    double avg_tx_snr_db = 0.0;   // 10 log10(mean_power)
    double mean_epsilon = 0.0;
    double mean_iterations = 0.0;   // algorithm1
    double feasibility_rate = 1.0;  // algorithm2
};

// Compact per-trial record carrying exactly what aggregation needs; the
// sweep driver stores these instead of full TrialMetrics.
struct TrialRow {
    double throughput = 0.0;
    double achievable = 0.0;
    double power = 0.0;  // (P1+P2)/2
    double epsilon = 0.0;
    std::int32_t iterations = 0;
    bool outage = false;
    bool feasible = true;
};

TrialRow to_row(const TrialMetrics& t);

// Fold in index order (fixed order keeps sweep output independent of the
// worker count). Throws std::invalid_argument on empty input.
SweepPoint aggregate_rows(const std::vector<TrialRow>& rows);

// Sample means with standard errors; outage gets a Wilson 95% interval.
// Throws std::invalid_argument on empty input.
SweepPoint aggregate(const std::vector<TrialMetrics>& trials);

struct MonteCarloEstimate {
    double mean = 0.0;
    double stderr = 0.0;
};

// Monte Carlo estimate of the large-p_max first-order term of the margin
// scheme's achievable throughput. The cross-channel eigenvalue and the
// quantization error are sampled jointly (they are dependent); the direct
// effective channel independently.
MonteCarloEstimate lemma2_asymptote(const SystemParams& params, const Codebook& codebook,
                                    double tau, std::uint64_t trials, std::uint64_t seed);

// Matching estimator of the large-p_max outage bound (worst stream). The
// returned value is the raw bound 2*Pr(.) and may exceed 1; report layers cap
// it when quoting it as a probability.
MonteCarloEstimate lemma3_asymptote(const SystemParams& params, const Codebook& codebook,
                                    double theta, double tau, std::uint64_t trials,
                                    std::uint64_t seed);

}  // namespace coopfb
