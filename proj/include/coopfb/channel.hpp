#pragma once

#include <cstdint>

#include "coopfb/complex_matrix.hpp"

namespace coopfb {

// Static system parameters. theta is the SINR decoding threshold, tau the
// interference margin; both linear scale. p_max is linear transmit power
// relative to unit noise.
struct SystemParams {
    int l_antennas = 6;   // antennas per node (L)
    int m_streams = 2;    // spatial streams per link (M)
    int n_inner = 3;      // inner equalizer dimension (N)
    int b_bits = 6;       // codebook bits (B)
    double nu = 0.2;      // cross-link coupling factor, (0, 1]
    double p_max = 1.0;
    double theta = 1.0;

    void validate() const;  // throws std::invalid_argument with a precise message
};

// One block-fading draw: direct channels h[0][0], h[1][1] and cross channels
// h[0][1] (into rx 0 from tx 1), h[1][0]. Cross matrices are unscaled fading;
// nu enters the metric formulas as a power factor.
struct NetworkRealization {
    ComplexMatrix h[2][2];
    double nu = 0.2;
};

// Channels are i.i.d. CN(0,1); the stream is keyed by (seed, trial_index) so
// trials are reproducible and order-independent. Matrices are filled in the
// fixed order h00, h01, h10, h11.
NetworkRealization sample_realization(const SystemParams& params, uint64_t seed,
                                      uint64_t trial_index);

}  // namespace coopfb
