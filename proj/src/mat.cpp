#include "scfq/mat.hpp"

#include <algorithm>

#include "scfq/errors.hpp"

namespace scfq {

MatFq MatFq::identity(int n) {
    MatFq I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

std::string MatFq::key() const {
    std::string k;
    k.reserve(a_.size() + 8);
    k.push_back(char(rows_));
    k.push_back(char(cols_));
    for (Scalar s : a_) k.push_back(char(s));
    return k;
}

std::string MatFq::to_string(const Fq& F) const {
    std::string out = "[";
    for (int i = 0; i < rows_; ++i) {
        out += i ? ";[" : "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) out += ",";
            out += F.to_string(at(i, j));
        }
        out += "]";
    }
    out += "]";
    return out;
}

MatFq mat_add(const Fq& F, const MatFq& A, const MatFq& B) {
    MatFq R(A.rows(), A.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) R.at(i, j) = F.add(A.at(i, j), B.at(i, j));
    return R;
}

MatFq mat_sub(const Fq& F, const MatFq& A, const MatFq& B) {
    MatFq R(A.rows(), A.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) R.at(i, j) = F.sub(A.at(i, j), B.at(i, j));
    return R;
}

MatFq mat_mul(const Fq& F, const MatFq& A, const MatFq& B) {
    MatFq R(A.rows(), B.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int k = 0; k < A.cols(); ++k) {
            Scalar a = A.at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < B.cols(); ++j)
                R.at(i, j) = F.add(R.at(i, j), F.mul(a, B.at(k, j)));
        }
    return R;
}

MatFq mat_scale(const Fq& F, Scalar c, const MatFq& A) {
    MatFq R(A.rows(), A.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) R.at(i, j) = F.mul(c, A.at(i, j));
    return R;
}

MatFq mat_transpose(const MatFq& A) {
    MatFq R(A.cols(), A.rows());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) R.at(j, i) = A.at(i, j);
    return R;
}

MatFq mat_pow(const Fq& F, const MatFq& A, int n) {
    MatFq R = MatFq::identity(A.rows());
    for (int i = 0; i < n; ++i) R = mat_mul(F, R, A);
    return R;
}

MatFq mat_block_diag(const MatFq& A, const MatFq& B) {
    MatFq R(A.rows() + B.rows(), A.cols() + B.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) R.at(i, j) = A.at(i, j);
    for (int i = 0; i < B.rows(); ++i)
        for (int j = 0; j < B.cols(); ++j) R.at(A.rows() + i, A.cols() + j) = B.at(i, j);
    return R;
}

MatFq mat_poly_eval(const Fq& F, const Poly& f, const MatFq& A) {
    MatFq R(A.rows(), A.rows());
    for (int d = deg(f); d >= 0; --d) {
        R = mat_mul(F, R, A);
        if (f[d] != 0)
            for (int i = 0; i < A.rows(); ++i) R.at(i, i) = F.add(R.at(i, i), f[d]);
    }
    return R;
}

std::vector<Scalar> row_times_mat(const Fq& F, const std::vector<Scalar>& v, const MatFq& A) {
    std::vector<Scalar> r(A.cols(), 0);
    for (int i = 0; i < A.rows(); ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < A.cols(); ++j) r[j] = F.add(r[j], F.mul(v[i], A.at(i, j)));
    }
    return r;
}

int mat_rref(const Fq& F, MatFq& A, bool drop_zero_rows) {
    int rank = 0;
    for (int col = 0; col < A.cols() && rank < A.rows(); ++col) {
        int pivot = -1;
        for (int i = rank; i < A.rows(); ++i)
            if (A.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < A.cols(); ++j) std::swap(A.at(pivot, j), A.at(rank, j));
        Scalar inv = F.inv(A.at(rank, col));
        for (int j = 0; j < A.cols(); ++j) A.at(rank, j) = F.mul(inv, A.at(rank, j));
        for (int i = 0; i < A.rows(); ++i) {
            if (i == rank || A.at(i, col) == 0) continue;
            Scalar c = A.at(i, col);
            for (int j = 0; j < A.cols(); ++j)
                A.at(i, j) = F.sub(A.at(i, j), F.mul(c, A.at(rank, j)));
        }
        ++rank;
    }
    if (drop_zero_rows) {
        MatFq B(rank, A.cols());
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < A.cols(); ++j) B.at(i, j) = A.at(i, j);
        A = B;
    }
    return rank;
}

int mat_rank(const Fq& F, MatFq A) { return mat_rref(F, A); }

bool mat_invertible(const Fq& F, const MatFq& A) {
    return A.rows() == A.cols() && mat_rank(F, A) == A.rows();
}

MatFq mat_inverse(const Fq& F, const MatFq& A) {
    if (A.rows() != A.cols()) throw SingularMatrix("inverse of a non-square matrix");
    int n = A.rows();
    MatFq aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, n + i) = 1;
    }
    // eliminate over the A block only; a pivot must appear in every column
    int rank = 0;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = rank; i < n; ++i)
            if (aug.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw SingularMatrix("matrix is singular");
        if (pivot != rank)
            for (int j = 0; j < 2 * n; ++j) std::swap(aug.at(pivot, j), aug.at(rank, j));
        Scalar inv = F.inv(aug.at(rank, col));
        for (int j = 0; j < 2 * n; ++j) aug.at(rank, j) = F.mul(inv, aug.at(rank, j));
        for (int i = 0; i < n; ++i) {
            if (i == rank || aug.at(i, col) == 0) continue;
            Scalar c = aug.at(i, col);
            for (int j = 0; j < 2 * n; ++j)
                aug.at(i, j) = F.sub(aug.at(i, j), F.mul(c, aug.at(rank, j)));
        }
        ++rank;
    }
    MatFq R(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) R.at(i, j) = aug.at(i, n + j);
    return R;
}

MatFq mat_left_kernel(const Fq& F, const MatFq& A) { return rank_kernel(F, A).second; }

std::pair<int, MatFq> rank_kernel(const Fq& F, const MatFq& A) {
    // row-reduce [A | I] so the I block tracks the row operations; zero rows
    // of the reduced A block expose left-kernel vectors
    int m = A.rows(), n = A.cols();
    MatFq aug(m, n + m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, n + i) = 1;
    }
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int pivot = -1;
        for (int i = rank; i < m; ++i)
            if (aug.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < n + m; ++j) std::swap(aug.at(pivot, j), aug.at(rank, j));
        Scalar inv = F.inv(aug.at(rank, col));
        for (int j = 0; j < n + m; ++j) aug.at(rank, j) = F.mul(inv, aug.at(rank, j));
        for (int i = 0; i < m; ++i) {
            if (i == rank || aug.at(i, col) == 0) continue;
            Scalar c = aug.at(i, col);
            for (int j = 0; j < n + m; ++j)
                aug.at(i, j) = F.sub(aug.at(i, j), F.mul(c, aug.at(rank, j)));
        }
        ++rank;
    }
    MatFq ker(m - rank, m);
    for (int i = rank; i < m; ++i)
        for (int j = 0; j < m; ++j) ker.at(i - rank, j) = aug.at(i, n + j);
    mat_rref(F, ker);  // canonical echelon basis
    return {rank, ker};
}

}  // namespace scfq
