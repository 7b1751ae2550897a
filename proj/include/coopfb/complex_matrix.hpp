#pragma once

#include <complex>
#include <vector>

namespace coopfb {

using cplx = std::complex<double>;

// Dense complex matrix, row-major. All dimensions in this project are tiny
// (at most 8x8), so everything is by value.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols);  // zero-filled
    ComplexMatrix(int rows, int cols, std::vector<cplx> entries);

    static ComplexMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    const cplx& operator()(int r, int c) const {
        return entries_[static_cast<std::size_t>(r) * cols_ + c];
    }

    cplx* data() { return entries_.data(); }
    const cplx* data() const { return entries_.data(); }
    std::size_t size() const { return entries_.size(); }

    ComplexMatrix hermitian() const;                    // A^dagger
    ComplexMatrix multiply(const ComplexMatrix&) const; // A * B
    // A^dagger * B without forming the transpose
    ComplexMatrix herm_times(const ComplexMatrix&) const;
    // contiguous column slice [first, first+count)
    ComplexMatrix column_block(int first, int count) const;
    std::vector<cplx> column(int c) const;

    bool all_finite() const;

    bool operator==(const ComplexMatrix&) const = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> entries_;
};

// sum of squared entry magnitudes
double frobenius_norm_sq(const ComplexMatrix& a);

// Orthonormal basis of the column space (modified Gram-Schmidt with one
// reorthogonalization pass). Throws std::runtime_error on rank deficiency.
ComplexMatrix orthonormal_columns(const ComplexMatrix& g);

}  // namespace coopfb
