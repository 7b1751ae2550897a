#include "coopfb/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "coopfb/kernels.hpp"

namespace coopfb {

namespace {

// threshold below which a left singular vector entry is treated as zero when
// fixing the column phase
constexpr double kPhaseEntryTol = 1e-12;
// singular values below this fraction of the largest get a basis-completion
// column instead of a normalized (noise) one
constexpr double kDeficientTol = 1e-13;

struct Columns {
    int m = 0;
    std::vector<std::vector<cplx>> c;

    explicit Columns(const ComplexMatrix& a) : m(a.rows()), c(a.cols()) {
        for (int j = 0; j < a.cols(); ++j) c[j] = a.column(j);
    }
    int n() const { return static_cast<int>(c.size()); }
};

// One-sided Jacobi on the columns of `a` (requires rows >= cols). On return
// the columns of `a` are mutually orthogonal and v holds the accumulated
// right rotations: a_in = a_out * v^dagger ... i.e. a_out = a_in * v.
void jacobi_orthogonalize(Columns& a, Columns& v, const SvdOptions& opts) {
    const int n = a.n();
    const double tol_sq = opts.rel_tol * opts.rel_tol;
    double worst = 0.0;
    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
        bool rotated = false;
        worst = 0.0;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                cplx* ap = a.c[p].data();
                cplx* aq = a.c[q].data();
                const double gpp = kernels::frob_sq(ap, a.m);
                const double gqq = kernels::frob_sq(aq, a.m);
                const cplx gpq = kernels::cdotc(ap, aq, a.m);
                const double off_sq = std::norm(gpq);
                if (gpp * gqq > 0.0) worst = std::max(worst, off_sq / (gpp * gqq));
                if (off_sq <= tol_sq * gpp * gqq) continue;
                rotated = true;

                const double apq = std::abs(gpq);
                const cplx u = gpq / apq;  // phase of the off-diagonal
                const double zeta = (gqq - gpp) / (2.0 * apq);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double cth = 1.0 / std::sqrt(1.0 + t * t);
                const double sth = cth * t;
                // columns (p,q) <- (cth*p - conj(sth*u)*q, (sth*u)*p + cth*q)
                const cplx s = sth * u;
                kernels::rot2(ap, aq, a.m, cth, s);
                kernels::rot2(v.c[p].data(), v.c[q].data(), v.m, cth, s);
            }
        }
        if (!rotated) return;
    }
    throw SvdError("svd: Jacobi sweeps did not converge", std::sqrt(worst));
}

// Fill columns [filled, total) with unit vectors orthonormal to the existing
// ones. Each round takes the canonical basis vector with the largest residual
// against the current span (deterministic; ties go to the lowest index), which
// always has norm >= 1/sqrt(m).
void complete_basis(std::vector<std::vector<cplx>>& cols, int m, int filled) {
    const int total = static_cast<int>(cols.size());
    for (int next = filled; next < total; ++next) {
        std::vector<cplx> best;
        double best_norm = -1.0;
        for (int k = 0; k < m; ++k) {
            std::vector<cplx> v(m, cplx{});
            v[k] = 1.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (int j = 0; j < next; ++j) {
                    const cplx proj = kernels::cdotc(cols[j].data(), v.data(), m);
                    for (int r = 0; r < m; ++r) v[r] -= proj * cols[j][r];
                }
            }
            const double norm = std::sqrt(kernels::frob_sq(v.data(), m));
            if (norm > best_norm + 1e-12) {
                best_norm = norm;
                best = std::move(v);
            }
        }
        for (int r = 0; r < m; ++r) best[r] /= best_norm;
        cols[next] = std::move(best);
    }
}

// SVD of a tall (rows >= cols) matrix without the phase normalization pass.
void svd_tall(const ComplexMatrix& a, ComplexMatrix& left, std::vector<double>& sv,
              ComplexMatrix& right, const SvdOptions& opts) {
    const int m = a.rows(), n = a.cols();
    Columns work(a);
    Columns v(ComplexMatrix::identity(n));
    jacobi_orthogonalize(work, v, opts);

    std::vector<double> norms(n);
    for (int j = 0; j < n; ++j) norms[j] = std::sqrt(kernels::frob_sq(work.c[j].data(), m));
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return norms[i] > norms[j]; });

    const double sigma_max = n > 0 ? norms[order[0]] : 0.0;
    sv.resize(n);
    std::vector<std::vector<cplx>> ucols(m);
    int filled = 0;
    for (int j = 0; j < n; ++j) {
        const int src = order[j];
        sv[j] = norms[src];
        if (norms[src] > kDeficientTol * sigma_max && norms[src] > 0.0) {
            auto col = work.c[src];
            for (int r = 0; r < m; ++r) col[r] /= norms[src];
            ucols[filled++] = std::move(col);
        }
    }
    // numerically-zero singular values and the m-n extra left columns get a
    // deterministic orthonormal completion
    for (int j = filled; j < m; ++j) ucols[j] = std::vector<cplx>(m, cplx{});
    complete_basis(ucols, m, filled);

    left = ComplexMatrix(m, m);
    for (int r = 0; r < m; ++r)
        for (int j = 0; j < m; ++j) left(r, j) = ucols[j][r];
    right = ComplexMatrix(n, n);
    for (int r = 0; r < n; ++r)
        for (int j = 0; j < n; ++j) right(r, j) = v.c[order[j]][r];
}

void fix_phases(ComplexMatrix& left, ComplexMatrix& right) {
    const int m = left.rows();
    const int paired = std::min(m, right.rows());
    for (int j = 0; j < m; ++j) {
        double colmax = 0.0;
        for (int r = 0; r < m; ++r) colmax = std::max(colmax, std::abs(left(r, j)));
        if (colmax == 0.0) continue;
        int first = -1;
        for (int r = 0; r < m; ++r) {
            if (std::abs(left(r, j)) > kPhaseEntryTol * colmax) {
                first = r;
                break;
            }
        }
        if (first < 0) continue;
        const cplx w = std::conj(left(first, j) / std::abs(left(first, j)));
        if (w == cplx{1.0, 0.0}) continue;
        for (int r = 0; r < m; ++r) left(r, j) *= w;
        // keep left * S * right^dagger invariant
        if (j < paired)
            for (int r = 0; r < right.rows(); ++r) right(r, j) *= w;
    }
}

}  // namespace

SvdResult svd(const ComplexMatrix& a, const SvdOptions& opts) {
    SvdResult res;
    if (a.rows() >= a.cols()) {
        svd_tall(a, res.left, res.singular_values, res.right, opts);
    } else {
        // svd(a^dagger) = U S V^dagger  =>  a = V S U^dagger
        ComplexMatrix lt, rt;
        std::vector<double> sv;
        svd_tall(a.hermitian(), lt, sv, rt, opts);
        res.left = std::move(rt);
        res.right = std::move(lt);
        res.singular_values = std::move(sv);
    }
    fix_phases(res.left, res.right);
    return res;
}

}  // namespace coopfb
