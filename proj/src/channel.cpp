#include "coopfb/channel.hpp"

#include <stdexcept>
#include <string>

#include "coopfb/rng.hpp"

namespace coopfb {

namespace {

void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

void SystemParams::validate() const {
    if (l_antennas < 1) fail("l_antennas must be >= 1");
    if (m_streams < 1) fail("m_streams must be >= 1");
    if (l_antennas < 2 * m_streams)
        fail("l_antennas must be >= 2*m_streams (got L=" + std::to_string(l_antennas) +
             ", M=" + std::to_string(m_streams) + ")");
    if (n_inner < m_streams || n_inner > l_antennas - m_streams)
        fail("n_inner must satisfy M <= N <= L-M (got N=" + std::to_string(n_inner) +
             ", M=" + std::to_string(m_streams) + ", L=" + std::to_string(l_antennas) + ")");
    if (b_bits < 1) fail("b_bits must be >= 1");
    if (b_bits > 24) fail("b_bits above 24 is not supported (codebook of 2^B entries)");
    if (!(nu > 0.0) || nu > 1.0) fail("nu must lie in (0, 1]");
    if (!(p_max > 0.0)) fail("p_max must be positive");
    if (!(theta > 0.0)) fail("theta must be positive");
}

NetworkRealization sample_realization(const SystemParams& params, uint64_t seed,
                                      uint64_t trial_index) {
    RandomStream rs(derive_key(seed, {stream_tag::channel, trial_index}));
    NetworkRealization out;
    out.nu = params.nu;
    const int l = params.l_antennas;
    for (int m = 0; m < 2; ++m)
        for (int n = 0; n < 2; ++n) out.h[m][n] = rs.gaussian_matrix(l, l);
    return out;
}

}  // namespace coopfb
