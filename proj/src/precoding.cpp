#include "coopfb/precoding.hpp"

#include <cmath>

#include "coopfb/svd.hpp"

namespace coopfb {

InnerPair design_inner(const ComplexMatrix& h_cross, const SystemParams& params) {
    const int l = params.l_antennas, m = params.m_streams, n = params.n_inner;
    SvdResult s = svd(h_cross);
    InnerPair out;
    out.g_inner = s.left.column_block(l - n, n);  // weakest-N left singular vectors
    out.f_inner = s.right.column_block(0, m);     // strongest-M right singular vectors
    out.lambda_cross.resize(s.singular_values.size());
    for (std::size_t k = 0; k < s.singular_values.size(); ++k)
        out.lambda_cross[k] = s.singular_values[k] * s.singular_values[k];
    return out;
}

OuterPair design_outer(const ComplexMatrix& h_direct, const ComplexMatrix& g_inner,
                       const ComplexMatrix& f_inner_applied) {
    const int m = f_inner_applied.cols();
    const ComplexMatrix effective = g_inner.herm_times(h_direct.multiply(f_inner_applied));
    SvdResult s = svd(effective);
    OuterPair out;
    out.g_outer = s.left.column_block(0, m);
    out.f_outer = std::move(s.right);
    out.lambda_direct.resize(m);
    for (int k = 0; k < m; ++k)
        out.lambda_direct[k] = s.singular_values[k] * s.singular_values[k];
    return out;
}

PrecoderSet assemble(const NetworkRealization& realization,
                     const std::array<const Codebook*, 2>& codebooks,
                     const SystemParams& params, const AssembleOptions& options) {
    PrecoderSet set;
    for (int m = 0; m < 2; ++m) {
        const int n = 1 - m;
        // cross channel into receiver m fixes (G_m^i, F_n^i)
        InnerPair pair = design_inner(realization.h[m][n], params);
        set.link[m].g_inner = std::move(pair.g_inner);
        set.link[m].lambda_cross = std::move(pair.lambda_cross);
        set.link[n].f_inner_true = std::move(pair.f_inner);
    }
    for (int m = 0; m < 2; ++m) {
        LinkSet& link = set.link[m];
        if (options.perfect_feedback) {
            link.quant.index = -1;
            link.quant.quantized = link.f_inner_true;
            link.quant.epsilon = 0.0;
        } else {
            link.quant = quantize(link.f_inner_true, *codebooks[m]);
        }
        // The receiver learns the applied (quantized) inner precoder through
        // perfect local feedback, so by default the outer pair diagonalizes
        // the actually-applied effective channel.
        const ComplexMatrix& applied =
            options.outer_from_true_inner ? link.f_inner_true : link.quant.quantized;
        link.outer = design_outer(realization.h[m][m], link.g_inner, applied);
        link.precoder = link.quant.quantized.multiply(link.outer.f_outer);
        link.equalizer = link.g_inner.multiply(link.outer.g_outer);
    }
    return set;
}

std::array<std::vector<double>, 2> residual_interference(
    const PrecoderSet& set, const NetworkRealization& realization,
    const std::array<double, 2>& powers) {
    std::array<std::vector<double>, 2> out;
    for (int m = 0; m < 2; ++m) {
        const int n = 1 - m;
        const int streams = set.link[m].equalizer.cols();
        const ComplexMatrix cross = set.link[m].equalizer.herm_times(
            realization.h[m][n].multiply(set.link[n].precoder));
        out[m].resize(streams);
        for (int l = 0; l < streams; ++l) {
            double row_sq = 0.0;
            for (int j = 0; j < cross.cols(); ++j) row_sq += std::norm(cross(l, j));
            out[m][l] = powers[n] * realization.nu * row_sq;
        }
    }
    return out;
}

}  // namespace coopfb
