#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "coopfb/channel.hpp"
#include "coopfb/complex_matrix.hpp"

namespace coopfb {

// 2^B random semi-unitary L x M codewords. Entries are kept both row-major
// and as a packed column-major copy that the correlation scan runs over.
class Codebook {
  public:
    Codebook(int l, int m, int b_bits, uint64_t seed, std::vector<ComplexMatrix> entries);

    int l() const { return l_; }
    int m() const { return m_; }
    int bits() const { return b_bits_; }
    uint64_t seed() const { return seed_; }
    std::size_t size() const { return entries_.size(); }
    const ComplexMatrix& entry(int i) const { return entries_[i]; }

    // column c of codeword i, contiguous
    const cplx* packed_column(int i, int c) const {
        return packed_.data() + (static_cast<std::size_t>(i) * m_ + c) * l_;
    }

  private:
    int l_, m_, b_bits_;
    uint64_t seed_;
    std::vector<ComplexMatrix> entries_;
    std::vector<cplx> packed_;
};

struct QuantizationOutcome {
    int index = 0;              // selected codeword
    ComplexMatrix quantized;    // the codeword itself
    double epsilon = 0.0;       // 1 - |F^dagger W|_F^2 / M, in [0, 1]
};

// Each codeword is the orthonormalization of an i.i.d. CN(0,1) L x M draw;
// rank-deficient draws (probability zero) are resampled.
Codebook generate_codebook(const SystemParams& params, uint64_t seed);

// Exhaustive scan for the codeword maximizing |f_inner^dagger W|_F^2
// (equivalently minimizing epsilon); ties break to the lowest index.
QuantizationOutcome quantize(const ComplexMatrix& f_inner, const Codebook& codebook);

// subspace correlation |a^dagger b|_F^2 of two L x M semi-unitary matrices
double subspace_correlation(const ComplexMatrix& a, const ComplexMatrix& b);

// Text dump for cross-implementation comparison. Format (documented in the
// README): header "coopfb-codebook 1", then "L M B seed count", then per
// codeword L*M lines "re im" in row-major order.
void save_codebook(const Codebook& cb, std::ostream& os);
void save_codebook_file(const Codebook& cb, const std::string& path);
Codebook load_codebook(std::istream& is);
Codebook load_codebook_file(const std::string& path);

}  // namespace coopfb
