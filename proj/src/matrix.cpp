#include "bettipair/matrix.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bettipair {

MatrixFp MatrixFp::mul(const MatrixFp& other) const {
    if (cols_ != other.rows()) throw std::invalid_argument("matrix mul: dimension mismatch");
    MatrixFp out(rows_, other.cols(), field_);
    const i64 p = field_.p();
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            i64 v = at(i, k) % p;
            if (v == 0) continue;
            const i64* src = other.row(k);
            i64* dst = out.row(i);
            for (int j = 0; j < other.cols(); ++j)
                dst[j] = (dst[j] + v * src[j]) % p;
        }
    }
    return out;
}

namespace {

// Elimination with lazy reduction: pivot rows are kept fully reduced, all
// other rows accumulate signed values.  One axpy step changes an entry by
// less than p^2 < 2^30, and there are far fewer than 2^30 steps, so i64
// never overflows.
template <bool Parallel>
std::vector<int> rref_impl(MatrixFp& m) {
    const PrimeField& F = m.field();
    const i64 p = F.p();
    const int rows = m.rows(), cols = m.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i) {
            i64 v = F.reduce(m.at(i, c));
            m.at(i, c) = v;
            if (v != 0) { pr = i; break; }
        }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
        i64* prow = m.row(r);
        for (int j = 0; j < cols; ++j) prow[j] = F.reduce(prow[j]);
        const i64 pinv = F.inv(prow[c]);
        for (int j = 0; j < cols; ++j) prow[j] = (prow[j] * pinv) % p;

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (Parallel && rows > 64)
#endif
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            i64 f = m.at(i, c) % p;
            if (f == 0) continue;
            i64* irow = m.row(i);
            for (int j = 0; j < cols; ++j) irow[j] -= f * prow[j];
            irow[c] = 0;
        }
        pivots.push_back(c);
        ++r;
    }
    for (int i = 0; i < rows; ++i) {
        i64* irow = m.row(i);
        for (int j = 0; j < cols; ++j) irow[j] = F.reduce(irow[j]);
    }
    return pivots;
}

} // namespace

std::vector<int> rref_serial(MatrixFp& m) { return rref_impl<false>(m); }
std::vector<int> rref_parallel(MatrixFp& m) { return rref_impl<true>(m); }
std::vector<int> rref(MatrixFp& m) { return rref_impl<true>(m); }

namespace {

// Rank does not need back-substitution; forward elimination only.
template <bool Parallel>
int rank_only(MatrixFp m) {
    const PrimeField& F = m.field();
    const i64 p = F.p();
    const int rows = m.rows(), cols = m.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i) {
            i64 v = F.reduce(m.at(i, c));
            m.at(i, c) = v;
            if (v != 0) { pr = i; break; }
        }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = c; j < cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
        i64* prow = m.row(r);
        for (int j = c; j < cols; ++j) prow[j] = F.reduce(prow[j]);
        const i64 pinv = F.inv(prow[c]);

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (Parallel && rows - r > 64)
#endif
        for (int i = r + 1; i < rows; ++i) {
            i64 f = (F.reduce(m.at(i, c)) * pinv) % p;
            if (f == 0) { m.at(i, c) = 0; continue; }
            i64* irow = m.row(i);
            for (int j = c; j < cols; ++j) irow[j] -= f * prow[j];
            irow[c] = 0;
        }
        ++r;
    }
    return r;
}

} // namespace

int mat_rank_serial(const MatrixFp& m) { return rank_only<false>(m); }
int mat_rank(const MatrixFp& m) { return rank_only<true>(m); }

namespace {

MatrixFp kernel_from_rref(const MatrixFp& m, const std::vector<int>& pivots) {
    const PrimeField& F = m.field();
    const int cols = m.cols();
    std::vector<int> pivot_of_col(cols, -1);
    for (int k = 0; k < static_cast<int>(pivots.size()); ++k) pivot_of_col[pivots[k]] = k;
    std::vector<int> free_cols;
    for (int c = 0; c < cols; ++c)
        if (pivot_of_col[c] < 0) free_cols.push_back(c);

    MatrixFp ker(static_cast<int>(free_cols.size()), cols, F);
    for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
        int fc = free_cols[k];
        ker.at(k, fc) = 1;
        for (int c = 0; c < cols; ++c) {
            int pr = pivot_of_col[c];
            if (pr >= 0) ker.at(k, c) = F.neg(m.at(pr, fc));
        }
    }
    return ker;
}

} // namespace

MatrixFp mat_kernel_serial(const MatrixFp& m) {
    MatrixFp work = m;
    auto pivots = rref_serial(work);
    return kernel_from_rref(work, pivots);
}

MatrixFp mat_kernel(const MatrixFp& m) {
    MatrixFp work = m;
    auto pivots = rref(work);
    return kernel_from_rref(work, pivots);
}

} // namespace bettipair
