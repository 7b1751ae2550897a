#pragma once

#include <array>
#include <vector>

#include "coopfb/channel.hpp"
#include "coopfb/complex_matrix.hpp"
#include "coopfb/quantization.hpp"

namespace coopfb {

// Transceiver pair built from one cross channel H (tx side n -> rx side m):
// the receiver-side columns span the weakest-N left subspace, the
// transmitter-side columns the strongest-M right subspace, which minimizes
// the residual-interference bound over all index-set choices.
struct InnerPair {
    ComplexMatrix g_inner;             // L x N
    ComplexMatrix f_inner;             // L x M
    std::vector<double> lambda_cross;  // eigenvalues of H H^dagger, descending
};

struct OuterPair {
    ComplexMatrix g_outer;              // N x M
    ComplexMatrix f_outer;              // M x M, unitary
    std::vector<double> lambda_direct;  // M eigenvalues of the effective channel
};

// Everything one link carries through a trial.
struct LinkSet {
    ComplexMatrix g_inner;          // L x N
    ComplexMatrix f_inner_true;     // L x M
    QuantizationOutcome quant;      // applied inner precoder; index -1 if bypassed
    OuterPair outer;
    ComplexMatrix precoder;         // L x M: quantized inner times outer
    ComplexMatrix equalizer;        // L x M: inner times outer equalizer
    std::vector<double> lambda_cross;  // cross channel INTO this link's receiver
};

struct PrecoderSet {
    std::array<LinkSet, 2> link;
};

struct AssembleOptions {
    bool perfect_feedback = false;     // bypass quantization (epsilon = 0)
    bool outer_from_true_inner = false;  // effective channel uses the true inner precoder
};

InnerPair design_inner(const ComplexMatrix& h_cross, const SystemParams& params);

// Effective channel g_inner^dagger * h_direct * f_inner_applied (N x M);
// top-M left singular vectors, full right basis, squared singular values.
OuterPair design_outer(const ComplexMatrix& h_direct, const ComplexMatrix& g_inner,
                       const ComplexMatrix& f_inner_applied);

PrecoderSet assemble(const NetworkRealization& realization,
                     const std::array<const Codebook*, 2>& codebooks,
                     const SystemParams& params, const AssembleOptions& options = {});

// Residual cross-link interference power per (victim link, stream):
// out[m][l] = P_n * nu * |row_l(G_m^dagger H_mn F_n)|^2.
std::array<std::vector<double>, 2> residual_interference(const PrecoderSet& set,
                                                         const NetworkRealization& realization,
                                                         const std::array<double, 2>& powers);

}  // namespace coopfb
