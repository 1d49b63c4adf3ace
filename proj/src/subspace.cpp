#include "scfq/subspace.hpp"

#include <algorithm>

#include "scfq/errors.hpp"

namespace scfq {

i64 subspace_count(const Fq& F, int m) {
    // sum over k of the Gaussian binomial [m choose k]_q
    i64 total = 0;
    for (int k = 0; k <= m; ++k) {
        i128 num = 1, den = 1;
        for (int i = 0; i < k; ++i) {
            i128 qm = 1, qk = 1;
            for (int t = 0; t < m - i; ++t) qm *= F.q();
            for (int t = 0; t < k - i; ++t) qk *= F.q();
            num *= qm - 1;
            den *= qk - 1;
        }
        total += i64(num / den);
    }
    return total;
}

std::vector<MatFq> all_subspaces(const Fq& F, int m, const SubspaceBound& bound) {
    i64 count = subspace_count(F, m);
    if (count > i64(bound.max_subspaces))
        throw BoundExceeded("subspace lattice of F_q^" + std::to_string(m) + " has " +
                            std::to_string(count) + " members, over the configured bound");
    std::vector<MatFq> out;
    out.reserve(size_t(count));
    for (int k = 0; k <= m; ++k) {
        // choose pivot columns c_0 < ... < c_{k-1}, then fill the free spots
        std::vector<int> piv(k);
        for (int i = 0; i < k; ++i) piv[i] = i;
        while (true) {
            std::vector<std::pair<int, int>> free_pos;
            std::vector<bool> is_piv(m, false);
            for (int c : piv) is_piv[c] = true;
            for (int i = 0; i < k; ++i)
                for (int j = piv[i] + 1; j < m; ++j)
                    if (!is_piv[j]) free_pos.emplace_back(i, j);

            std::vector<int> fill(free_pos.size(), 0);
            while (true) {
                MatFq R(k, m);
                for (int i = 0; i < k; ++i) R.at(i, piv[i]) = 1;
                for (size_t t = 0; t < free_pos.size(); ++t)
                    R.at(free_pos[t].first, free_pos[t].second) = Scalar(fill[t]);
                out.push_back(R);
                size_t pos = 0;
                while (pos < fill.size() && ++fill[pos] == F.q()) fill[pos++] = 0;
                if (pos == fill.size()) break;
            }

            // next pivot combination
            int i = k - 1;
            while (i >= 0 && piv[i] == m - k + i) --i;
            if (i < 0) break;
            ++piv[i];
            for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
        }
    }
    return out;
}

bool in_rowspace(const Fq& F, const MatFq& R, const std::vector<Scalar>& v) {
    std::vector<Scalar> w = v;
    for (int i = 0; i < R.rows(); ++i) {
        int piv = -1;
        for (int j = 0; j < R.cols(); ++j)
            if (R.at(i, j) != 0) {
                piv = j;
                break;
            }
        if (piv < 0) continue;
        if (w[piv] == 0) continue;
        Scalar c = w[piv];  // pivot entries are 1 in RREF
        for (int j = 0; j < R.cols(); ++j) w[j] = F.sub(w[j], F.mul(c, R.at(i, j)));
    }
    return std::all_of(w.begin(), w.end(), [](Scalar s) { return s == 0; });
}

namespace {

bool maps_into(const Fq& F, const MatFq& omega, const MatFq& B) {
    for (int i = 0; i < omega.rows(); ++i) {
        std::vector<Scalar> row(omega.cols());
        for (int j = 0; j < omega.cols(); ++j) row[j] = omega.at(i, j);
        if (!in_rowspace(F, omega, row_times_mat(F, row, B))) return false;
    }
    return true;
}

}  // namespace

std::vector<MatFq> invariant_subspaces(const Fq& F, const MatFq& B, const SubspaceBound& bound) {
    std::vector<MatFq> out;
    for (auto& omega : all_subspaces(F, B.rows(), bound))
        if (maps_into(F, omega, B)) out.push_back(std::move(omega));
    return out;
}

std::pair<CompressionPair, MatFq> compress(const Fq& F, const MatFq& B, const MatFq& omega) {
    int m = B.rows();
    if (!maps_into(F, omega, B)) throw NotInvariant("subspace is not invariant under B");
    int dim_omega = omega.rows();
    int k = m - dim_omega;

    // greedy complement: take row index i whenever e_i is independent of
    // Omega + previously chosen unit vectors; a matrix M with left kernel
    // Omega has exactly these rows independent, scanning top to bottom
    CompressionPair pair;
    MatFq work = omega;  // grows as an RREF basis
    for (int i = 0; i < m && int(pair.row_set.size()) < k; ++i) {
        std::vector<Scalar> e(m, 0);
        e[i] = 1;
        if (in_rowspace(F, work, e)) continue;
        pair.row_set.push_back(i);
        MatFq next(work.rows() + 1, m);
        for (int r = 0; r < work.rows(); ++r)
            for (int j = 0; j < m; ++j) next.at(r, j) = work.at(r, j);
        next.at(work.rows(), i) = 1;
        mat_rref(F, next);
        work = next;
    }

    pair.S = MatFq(k, m);
    for (int r = 0; r < k; ++r) pair.S.at(r, pair.row_set[r]) = 1;

    // T row i expresses e_i modulo Omega in the chosen complement basis:
    // solve e_i = sum_a t_a e_a + (element of Omega) via one matrix inverse
    MatFq M(m, m);
    for (int c = 0; c < k; ++c) M.at(pair.row_set[c], c) = 1;
    for (int c = 0; c < dim_omega; ++c)
        for (int j = 0; j < m; ++j) M.at(j, k + c) = omega.at(c, j);
    MatFq Minv = mat_inverse(F, M);
    pair.T = MatFq(m, k);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k; ++j) pair.T.at(i, j) = Minv.at(j, i);

    MatFq C = mat_mul(F, mat_mul(F, pair.S, B), pair.T);
    return {std::move(pair), std::move(C)};
}

}  // namespace scfq
