#pragma once

#include <stdexcept>
#include <vector>

#include "coopfb/complex_matrix.hpp"

namespace coopfb {

// a = left * diag(singular_values) * right^dagger, with left (rows x rows)
// and right (cols x cols) unitary and singular values sorted descending.
struct SvdResult {
    ComplexMatrix left;
    std::vector<double> singular_values;  // length min(rows, cols)
    ComplexMatrix right;
};

struct SvdOptions {
    int max_sweeps = 60;
    double rel_tol = 1e-12;  // off-diagonal convergence threshold, relative
};

class SvdError : public std::runtime_error {
  public:
    SvdError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const { return residual_; }

  private:
    double residual_;
};

// Complex SVD via one-sided Jacobi on columns. Deterministic: fixed sweep
// order, stable descending sort, and the first above-noise entry of every
// left singular vector is made real nonnegative. Throws SvdError (carrying
// the worst relative off-diagonal residual) if the sweep cap is hit.
SvdResult svd(const ComplexMatrix& a, const SvdOptions& opts = {});

}  // namespace coopfb
