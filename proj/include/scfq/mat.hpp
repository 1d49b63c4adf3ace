#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scfq/poly.hpp"

namespace scfq {

// Dense matrix over F_q, row-major.  Vectors are rows and act on matrices
// from the left throughout (v -> vM), matching the row-vector convention of
// the counting functions.
class MatFq {
public:
    MatFq() : rows_(0), cols_(0) {}
    MatFq(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

    static MatFq identity(int n);
    static MatFq zero(int rows, int cols) { return MatFq(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }
    Scalar& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }

    bool operator==(const MatFq& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const MatFq& o) const { return !(*this == o); }

    // canonical byte key for hashing
    std::string key() const;

    std::string to_string(const Fq& F) const;

private:
    int rows_, cols_;
    std::vector<Scalar> a_;
};

MatFq mat_add(const Fq& F, const MatFq& A, const MatFq& B);
MatFq mat_sub(const Fq& F, const MatFq& A, const MatFq& B);
MatFq mat_mul(const Fq& F, const MatFq& A, const MatFq& B);
MatFq mat_scale(const Fq& F, Scalar c, const MatFq& A);
MatFq mat_transpose(const MatFq& A);
MatFq mat_pow(const Fq& F, const MatFq& A, int n);
MatFq mat_block_diag(const MatFq& A, const MatFq& B);
// f(A) by Horner's rule
MatFq mat_poly_eval(const Fq& F, const Poly& f, const MatFq& A);

// row vector times matrix
std::vector<Scalar> row_times_mat(const Fq& F, const std::vector<Scalar>& v, const MatFq& A);

int mat_rank(const Fq& F, MatFq A);
bool mat_invertible(const Fq& F, const MatFq& A);
MatFq mat_inverse(const Fq& F, const MatFq& A);  // throws SingularMatrix

// reduced row echelon form; returns rank.  Zero rows are removed when
// drop_zero_rows is set.
int mat_rref(const Fq& F, MatFq& A, bool drop_zero_rows = false);

// basis (in RREF) of { v : vA = 0 }
MatFq mat_left_kernel(const Fq& F, const MatFq& A);

// rank + left-kernel basis in one sweep
std::pair<int, MatFq> rank_kernel(const Fq& F, const MatFq& A);

}  // namespace scfq
