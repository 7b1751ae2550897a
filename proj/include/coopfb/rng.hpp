#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "coopfb/complex_matrix.hpp"

namespace coopfb {

// Counter-based stream derivation: every (purpose, point, trial, ...) tuple
// maps to its own generator key, so trial results do not depend on scheduling
// or worker count. The exact construction is part of the reproducibility
// contract (documented in the README):
//
//   mix      = splitmix64 finalizer
//   derive   = fold words left-to-right: h{i+1} = mix(h{i} ^ mix(w{i}))
//   stream   = std::mt19937_64 seeded with the derived key
//   uniform  = (next_u64 >> 11) * 2^-53                  in [0, 1)
//   gauss    = Box-Muller on (1 - u1, u2), one pair per two u64 draws
//   CN(0,1)  = (z0 + i*z1) / sqrt(2), one complex entry per two u64 draws
uint64_t mix64(uint64_t x);
uint64_t derive_key(uint64_t seed, std::initializer_list<uint64_t> words);

// purpose tags for derive_key
namespace stream_tag {
inline constexpr uint64_t channel = 1;
inline constexpr uint64_t codebook = 2;
inline constexpr uint64_t asymptote_cross = 3;
inline constexpr uint64_t asymptote_direct = 4;
}  // namespace stream_tag

class RandomStream {
  public:
    explicit RandomStream(uint64_t key) : gen_(key) {}

    double uniform();                       // [0, 1)
    void gaussian_pair(double& a, double& b);  // independent N(0, 1)
    cplx complex_gaussian();                // CN(0, 1): E|z|^2 = 1

    // rows x cols matrix of i.i.d. CN(0,1) entries, filled row-major
    ComplexMatrix gaussian_matrix(int rows, int cols);

  private:
    std::mt19937_64 gen_;
};

}  // namespace coopfb
