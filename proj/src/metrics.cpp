#include "coopfb/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "coopfb/rng.hpp"
#include "coopfb/svd.hpp"

namespace coopfb {

namespace {

constexpr double kWilsonZ = 1.959963984540054;  // 95% normal quantile

}  // namespace

std::array<std::vector<double>, 2> sinr(const PrecoderSet& set,
                                        const NetworkRealization& realization,
                                        const std::array<double, 2>& powers) {
    const auto interference = residual_interference(set, realization, powers);
    std::array<std::vector<double>, 2> out;
    for (int m = 0; m < 2; ++m) {
        const ComplexMatrix direct = set.link[m].equalizer.herm_times(
            realization.h[m][m].multiply(set.link[m].precoder));
        const int streams = direct.cols();
        out[m].resize(streams);
        for (int l = 0; l < streams; ++l) {
            const double signal = powers[m] * std::norm(direct(l, l));
            out[m][l] = signal / (1.0 + interference[m][l]);
        }
    }
    return out;
}

std::array<std::vector<double>, 2> sinr_tilde(const IpcInputs& inputs,
                                              const std::array<double, 2>& powers) {
    std::array<std::vector<double>, 2> out;
    for (int m = 0; m < 2; ++m) {
        const double denom = 1.0 + powers[1 - m] * inputs.cross_coef(m);
        out[m].resize(inputs.m_streams);
        for (int l = 0; l < inputs.m_streams; ++l)
            out[m][l] = powers[m] * inputs.lambda_direct[m][l] / denom;
    }
    return out;
}

IpcInputs make_ipc_inputs(const PrecoderSet& set, const SystemParams& params, double p_max,
                          double tau) {
    IpcInputs in;
    const int tail = params.l_antennas - params.n_inner;  // (L-N+1)-th, 0-based
    for (int m = 0; m < 2; ++m) {
        in.lambda_cross_tail[m] = set.link[m].lambda_cross[tail];
        in.epsilon[m] = set.link[m].quant.epsilon;
        in.lambda_direct[m] = set.link[m].outer.lambda_direct;
    }
    in.m_streams = params.m_streams;
    in.nu = params.nu;
    in.p_max = p_max;
    in.theta = params.theta;
    in.tau = tau;
    return in;
}

TrialCache make_trial_cache(const PrecoderSet& set, const NetworkRealization& realization) {
    TrialCache c;
    c.nu = realization.nu;
    c.epsilon = {set.link[0].quant.epsilon, set.link[1].quant.epsilon};
    for (int m = 0; m < 2; ++m) {
        const int n = 1 - m;
        const ComplexMatrix direct = set.link[m].equalizer.herm_times(
            realization.h[m][m].multiply(set.link[m].precoder));
        const ComplexMatrix cross = set.link[m].equalizer.herm_times(
            realization.h[m][n].multiply(set.link[n].precoder));
        const int streams = direct.cols();
        c.diag_sq[m].resize(streams);
        c.row_sq[m].resize(streams);
        for (int l = 0; l < streams; ++l) {
            c.diag_sq[m][l] = std::norm(direct(l, l));
            double row = 0.0;
            for (int j = 0; j < cross.cols(); ++j) row += std::norm(cross(l, j));
            c.row_sq[m][l] = row;
        }
    }
    return c;
}

TrialMetrics evaluate_trial(const TrialCache& cache, const IpcInputs& inputs,
                            const PowerDecision& decision, double theta) {
    TrialMetrics t;
    t.powers = decision;
    t.epsilon = cache.epsilon;
    double min_sinr = 0.0;
    bool first = true;
    for (int m = 0; m < 2; ++m) {
        const int n = 1 - m;
        const int streams = static_cast<int>(cache.diag_sq[m].size());
        t.interference[m].resize(streams);
        t.sinr[m].resize(streams);
        for (int l = 0; l < streams; ++l) {
            t.interference[m][l] = decision.p[n] * cache.nu * cache.row_sq[m][l];
            const double signal = decision.p[m] * cache.diag_sq[m][l];
            const double s = signal / (1.0 + t.interference[m][l]);
            t.sinr[m][l] = s;
            t.throughput += std::log2(1.0 + s);
            min_sinr = first ? s : std::min(min_sinr, s);
            first = false;
        }
    }
    t.outage = min_sinr < theta;
    t.achievable = decision.scheme == IpcScheme::margin
                       ? achievable_throughput_margin(inputs, decision)
                       : throughput_lower_bound(inputs, decision.p[0], decision.p[1]);
    return t;
}

TrialMetrics evaluate_trial(const PrecoderSet& set, const NetworkRealization& realization,
                            const IpcInputs& inputs, const PowerDecision& decision,
                            double theta) {
    return evaluate_trial(make_trial_cache(set, realization), inputs, decision, theta);
}

TrialRow to_row(const TrialMetrics& t) {
    TrialRow r;
    r.throughput = t.throughput;
    r.achievable = t.achievable;
    r.power = 0.5 * (t.powers.p[0] + t.powers.p[1]);
    r.epsilon = 0.5 * (t.epsilon[0] + t.epsilon[1]);
    r.iterations = t.powers.iterations_used;
    r.outage = t.outage;
    r.feasible = t.powers.feasible;
    return r;
}

SweepPoint aggregate_rows(const std::vector<TrialRow>& rows) {
    if (rows.empty()) throw std::invalid_argument("aggregate: no trials");
    SweepPoint pt;
    pt.trials = rows.size();
    const double n = static_cast<double>(rows.size());

    double thr_sum = 0.0, thr_sq = 0.0, ach_sum = 0.0, ach_sq = 0.0;
    double pw_sum = 0.0, eps_sum = 0.0, iter_sum = 0.0;
    std::uint64_t outages = 0, feasible = 0;
    for (const TrialRow& t : rows) {
        thr_sum += t.throughput;
        thr_sq += t.throughput * t.throughput;
        ach_sum += t.achievable;
        ach_sq += t.achievable * t.achievable;
        pw_sum += t.power;
        eps_sum += t.epsilon;
        iter_sum += t.iterations;
        outages += t.outage ? 1 : 0;
        feasible += t.feasible ? 1 : 0;
    }
    pt.throughput_mean = thr_sum / n;
    pt.achievable_mean = ach_sum / n;
    if (rows.size() > 1) {
        const double thr_var =
            std::max(0.0, (thr_sq - n * pt.throughput_mean * pt.throughput_mean) / (n - 1.0));
        const double ach_var =
            std::max(0.0, (ach_sq - n * pt.achievable_mean * pt.achievable_mean) / (n - 1.0));
        pt.throughput_stderr = std::sqrt(thr_var / n);
        pt.achievable_stderr = std::sqrt(ach_var / n);
    }
    const double p_hat = static_cast<double>(outages) / n;
    pt.outage_rate = p_hat;
    const double z2 = kWilsonZ * kWilsonZ;
    const double denom = 1.0 + z2 / n;
    const double center = (p_hat + z2 / (2.0 * n)) / denom;
    const double half =
        kWilsonZ * std::sqrt(p_hat * (1.0 - p_hat) / n + z2 / (4.0 * n * n)) / denom;
    pt.outage_lo = std::max(0.0, center - half);
    pt.outage_hi = std::min(1.0, center + half);

    pt.mean_power = pw_sum / n;
    pt.avg_tx_snr_db = 10.0 * std::log10(pt.mean_power);
    pt.mean_epsilon = eps_sum / n;
    pt.mean_iterations = iter_sum / n;
    pt.feasibility_rate = static_cast<double>(feasible) / n;
    return pt;
}

namespace {

struct AsymptoteDraw {
    double lambda_cross_tail = 0.0;
    double epsilon = 0.0;
    std::vector<double> lambda_direct;
};

AsymptoteDraw sample_asymptote_draw(const SystemParams& params, const Codebook& codebook,
                                    std::uint64_t seed, std::uint64_t trial) {
    AsymptoteDraw d;
    RandomStream cross_rs(derive_key(seed, {stream_tag::asymptote_cross, trial}));
    const ComplexMatrix h_cross =
        cross_rs.gaussian_matrix(params.l_antennas, params.l_antennas);
    InnerPair inner = design_inner(h_cross, params);
    d.lambda_cross_tail = inner.lambda_cross[params.l_antennas - params.n_inner];
    d.epsilon = quantize(inner.f_inner, codebook).epsilon;

    RandomStream direct_rs(derive_key(seed, {stream_tag::asymptote_direct, trial}));
    const ComplexMatrix h_eff = direct_rs.gaussian_matrix(params.n_inner, params.m_streams);
    SvdResult s = svd(h_eff);
    d.lambda_direct.resize(params.m_streams);
    for (int l = 0; l < params.m_streams; ++l)
        d.lambda_direct[l] = s.singular_values[l] * s.singular_values[l];
    return d;
}

MonteCarloEstimate mc_mean(const std::vector<double>& values) {
    MonteCarloEstimate e;
    const double n = static_cast<double>(values.size());
    double sum = 0.0, sq = 0.0;
    for (double v : values) {
        sum += v;
        sq += v * v;
    }
    e.mean = sum / n;
    if (values.size() > 1)
        e.stderr = std::sqrt(std::max(0.0, (sq - n * e.mean * e.mean) / (n - 1.0)) / n);
    return e;
}

}  // namespace

MonteCarloEstimate lemma2_asymptote(const SystemParams& params, const Codebook& codebook,
                                    double tau, std::uint64_t trials, std::uint64_t seed) {
    std::vector<double> values;
    values.reserve(trials);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const AsymptoteDraw d = sample_asymptote_draw(params, codebook, seed, t);
        // a random codeword never matches the subspace exactly; the floor only
        // guards the division
        const double eps = std::max(d.epsilon, IpcInputs::kEpsilonFloor);
        const double denom = (1.0 + tau) * params.m_streams * params.nu *
                             d.lambda_cross_tail * eps;
        double v = 0.0;
        for (int l = 0; l < params.m_streams; ++l)
            v += std::log2(1.0 + tau * d.lambda_direct[l] / denom);
        values.push_back(2.0 * v);
    }
    return mc_mean(values);
}

MonteCarloEstimate lemma3_asymptote(const SystemParams& params, const Codebook& codebook,
                                    double theta, double tau, std::uint64_t trials,
                                    std::uint64_t seed) {
    std::vector<double> values;
    values.reserve(trials);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const AsymptoteDraw d = sample_asymptote_draw(params, codebook, seed, t);
        const double eps = std::max(d.epsilon, IpcInputs::kEpsilonFloor);
        const double ratio = tau / (1.0 + tau) * d.lambda_direct[params.m_streams - 1] /
                             (params.m_streams * params.nu * d.lambda_cross_tail * eps);
        values.push_back(ratio < theta ? 2.0 : 0.0);
    }
    return mc_mean(values);
}

}  // namespace coopfb
