#include "coopfb/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "coopfb/kernels.hpp"

namespace coopfb {

ComplexMatrix::ComplexMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
    if (entries_.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("entry count does not match dimensions");
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::hermitian() const {
    ComplexMatrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

ComplexMatrix ComplexMatrix::multiply(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("multiply: inner dimensions differ");
    ComplexMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const cplx a = (*this)(i, k);
            if (a == cplx{}) continue;
            for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::herm_times(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_) throw std::invalid_argument("herm_times: row counts differ");
    ComplexMatrix out(cols_, rhs.cols_);
    for (int k = 0; k < rows_; ++k) {
        for (int i = 0; i < cols_; ++i) {
            const cplx a = std::conj((*this)(k, i));
            if (a == cplx{}) continue;
            for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::column_block(int first, int count) const {
    if (first < 0 || count <= 0 || first + count > cols_)
        throw std::invalid_argument("column_block: range out of bounds");
    ComplexMatrix out(rows_, count);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
    return out;
}

std::vector<cplx> ComplexMatrix::column(int c) const {
    std::vector<cplx> out(rows_);
    for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

bool ComplexMatrix::all_finite() const {
    for (const cplx& z : entries_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

double frobenius_norm_sq(const ComplexMatrix& a) {
    return kernels::frob_sq(a.data(), a.size());
}

ComplexMatrix orthonormal_columns(const ComplexMatrix& g) {
    const int m = g.rows(), n = g.cols();
    if (m < n) throw std::invalid_argument("orthonormal_columns: more columns than rows");

    // column-major working copy
    std::vector<std::vector<cplx>> cols(n);
    for (int j = 0; j < n; ++j) cols[j] = g.column(j);

    for (int j = 0; j < n; ++j) {
        auto& v = cols[j];
        const double norm0 = std::sqrt(kernels::frob_sq(v.data(), v.size()));
        for (int pass = 0; pass < 2; ++pass) {
            for (int k = 0; k < j; ++k) {
                const cplx proj = kernels::cdotc(cols[k].data(), v.data(), v.size());
                for (int r = 0; r < m; ++r) v[r] -= proj * cols[k][r];
            }
        }
        const double norm = std::sqrt(kernels::frob_sq(v.data(), v.size()));
        if (!(norm > 1e-12 * std::max(norm0, 1e-300)) || norm == 0.0)
            throw std::runtime_error("orthonormal_columns: rank-deficient input");
        for (int r = 0; r < m; ++r) v[r] /= norm;
    }

    ComplexMatrix out(m, n);
    for (int r = 0; r < m; ++r)
        for (int j = 0; j < n; ++j) out(r, j) = cols[j][r];
    return out;
}

}  // namespace coopfb
