#ifndef BETTIPAIR_MATRIX_HPP
#define BETTIPAIR_MATRIX_HPP

#include <vector>

#include "bettipair/fp.hpp"

namespace bettipair {

// Dense matrix over a prime field, row major.  Everything at desk scale is
// at most a few hundred rows, so no sparse machinery.
class MatrixFp {
public:
    MatrixFp() : rows_(0), cols_(0), field_(32003) {}
    MatrixFp(int rows, int cols, const PrimeField& field)
        : rows_(rows), cols_(cols), field_(field),
          a_(static_cast<std::size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const PrimeField& field() const { return field_; }

    i64& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    i64 at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    i64* row(int r) { return a_.data() + static_cast<std::size_t>(r) * cols_; }
    const i64* row(int r) const { return a_.data() + static_cast<std::size_t>(r) * cols_; }

    void set(int r, int c, i64 v) { at(r, c) = field_.reduce(v); }

    MatrixFp transposed() const {
        MatrixFp t(cols_, rows_, field_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                t.at(c, r) = at(r, c);
        return t;
    }

    MatrixFp mul(const MatrixFp& other) const;

    bool is_zero() const {
        for (i64 v : a_) if (v % field_.p() != 0) return false;
        return true;
    }

private:
    int rows_, cols_;
    PrimeField field_;
    std::vector<i64> a_;
};

// In-place reduced row echelon form; returns pivot column indices.
// The parallel variant distributes the row-update loop with OpenMP and
// produces bit-identical results (field arithmetic is exact, and the
// update of each row is independent of the others).
std::vector<int> rref_serial(MatrixFp& m);
std::vector<int> rref_parallel(MatrixFp& m);
std::vector<int> rref(MatrixFp& m);

int mat_rank_serial(const MatrixFp& m);
int mat_rank(const MatrixFp& m);

// Basis of the right kernel {v : m v = 0}, one basis vector per row.
MatrixFp mat_kernel_serial(const MatrixFp& m);
MatrixFp mat_kernel(const MatrixFp& m);

} // namespace bettipair

#endif
