#include "coopfb/quantization.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "coopfb/kernels.hpp"
#include "coopfb/rng.hpp"

namespace coopfb {

Codebook::Codebook(int l, int m, int b_bits, uint64_t seed, std::vector<ComplexMatrix> entries)
    : l_(l), m_(m), b_bits_(b_bits), seed_(seed), entries_(std::move(entries)) {
    if (entries_.size() != (std::size_t{1} << b_bits_))
        throw std::invalid_argument("codebook must hold exactly 2^B entries");
    packed_.resize(entries_.size() * m_ * l_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const ComplexMatrix& w = entries_[i];
        if (w.rows() != l_ || w.cols() != m_)
            throw std::invalid_argument("codebook entry has wrong dimensions");
        for (int c = 0; c < m_; ++c)
            for (int r = 0; r < l_; ++r) packed_[(i * m_ + c) * l_ + r] = w(r, c);
    }
}

Codebook generate_codebook(const SystemParams& params, uint64_t seed) {
    const int l = params.l_antennas, m = params.m_streams;
    const std::size_t count = std::size_t{1} << params.b_bits;
    RandomStream rs(seed);
    std::vector<ComplexMatrix> entries;
    entries.reserve(count);
    while (entries.size() < count) {
        try {
            entries.push_back(orthonormal_columns(rs.gaussian_matrix(l, m)));
        } catch (const std::runtime_error&) {
            // rank-deficient draw; resample
        }
    }
    return Codebook(l, m, params.b_bits, seed, std::move(entries));
}

double subspace_correlation(const ComplexMatrix& a, const ComplexMatrix& b) {
    // |a^dagger b|_F^2 = sum_{i,j} |a_i . b_j|^2 over column pairs
    double corr = 0.0;
    for (int i = 0; i < a.cols(); ++i) {
        const auto ai = a.column(i);
        for (int j = 0; j < b.cols(); ++j) {
            const auto bj = b.column(j);
            corr += std::norm(kernels::cdotc(ai.data(), bj.data(), ai.size()));
        }
    }
    return corr;
}

QuantizationOutcome quantize(const ComplexMatrix& f_inner, const Codebook& codebook) {
    const int l = codebook.l(), m = codebook.m();
    if (f_inner.rows() != l || f_inner.cols() != m)
        throw std::invalid_argument("quantize: precoder dimensions do not match codebook");

    // contiguous columns of f_inner for the scan
    std::vector<cplx> fcols(static_cast<std::size_t>(l) * m);
    for (int c = 0; c < m; ++c)
        for (int r = 0; r < l; ++r) fcols[static_cast<std::size_t>(c) * l + r] = f_inner(r, c);

    int best = 0;
    double best_corr = -1.0;
    for (std::size_t i = 0; i < codebook.size(); ++i) {
        double corr = 0.0;
        for (int a = 0; a < m; ++a) {
            const cplx* fa = fcols.data() + static_cast<std::size_t>(a) * l;
            for (int b = 0; b < m; ++b) {
                corr += std::norm(kernels::cdotc(fa, codebook.packed_column(i, b), l));
            }
        }
        if (corr > best_corr) {  // strict: ties keep the lowest index
            best_corr = corr;
            best = static_cast<int>(i);
        }
    }

    QuantizationOutcome out;
    out.index = best;
    out.quantized = codebook.entry(best);
    out.epsilon = 1.0 - best_corr / m;
    if (out.epsilon < 0.0) out.epsilon = 0.0;  // rounding guard; epsilon >= 0 by construction
    return out;
}

void save_codebook(const Codebook& cb, std::ostream& os) {
    os << "coopfb-codebook 1\n";
    os << cb.l() << ' ' << cb.m() << ' ' << cb.bits() << ' ' << cb.seed() << ' ' << cb.size()
       << '\n';
    os << std::setprecision(17);
    for (std::size_t i = 0; i < cb.size(); ++i) {
        const ComplexMatrix& w = cb.entry(i);
        for (int r = 0; r < w.rows(); ++r)
            for (int c = 0; c < w.cols(); ++c)
                os << w(r, c).real() << ' ' << w(r, c).imag() << '\n';
    }
}

void save_codebook_file(const Codebook& cb, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open codebook file for writing: " + path);
    save_codebook(cb, os);
}

Codebook load_codebook(std::istream& is) {
    std::string magic;
    int version = 0;
    is >> magic >> version;
    if (!is || magic != "coopfb-codebook" || version != 1)
        throw std::runtime_error("not a coopfb codebook dump");
    int l = 0, m = 0, b = 0;
    uint64_t seed = 0;
    std::size_t count = 0;
    is >> l >> m >> b >> seed >> count;
    if (!is || l <= 0 || m <= 0 || b <= 0 || count != (std::size_t{1} << b))
        throw std::runtime_error("corrupt codebook header");
    std::vector<ComplexMatrix> entries;
    entries.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        ComplexMatrix w(l, m);
        for (int r = 0; r < l; ++r)
            for (int c = 0; c < m; ++c) {
                double re, im;
                is >> re >> im;
                w(r, c) = {re, im};
            }
        if (!is) throw std::runtime_error("truncated codebook dump");
        entries.push_back(std::move(w));
    }
    return Codebook(l, m, b, seed, std::move(entries));
}

Codebook load_codebook_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open codebook file: " + path);
    return load_codebook(is);
}

}  // namespace coopfb
