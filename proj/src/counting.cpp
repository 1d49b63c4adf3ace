#include "scfq/counting.hpp"

#include <algorithm>

#include "scfq/errors.hpp"

namespace scfq {

i64 btil(const Fq& F, const MatFq& B, const MatFq& g) {
    int m = B.rows(), N = g.rows();
    if (B.rows() != B.cols() || !mat_invertible(F, B)) throw SingularMatrix("B must be in G_m");
    if (g.rows() != g.cols() || !mat_invertible(F, g)) throw SingularMatrix("g must be in G_N");
    if (m == 0 || N == 0) {
        // the empty matrix is the single solution when m = 0; for N = 0 the
        // system M g = B M on 0 columns is vacuous as well
        return 1;
    }
    // unknowns M_{ik}, row-major; equation (i,j): sum_k M_{ik} g_{kj} = sum_l B_{il} M_{lj}
    int n = m * N;
    MatFq sys(n, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < N; ++j) {
            int row = i * N + j;
            for (int k = 0; k < N; ++k) sys.at(row, i * N + k) = g.at(k, j);
            for (int l = 0; l < m; ++l)
                sys.at(row, l * N + j) = F.sub(sys.at(row, l * N + j), B.at(i, l));
        }
    int nullity = n - mat_rank(F, sys);
    i64 out = 1;
    for (int t = 0; t < nullity; ++t) {
        if (out > (i64(1) << 62) / F.q()) throw BoundExceeded("btil value exceeds 2^62");
        out *= F.q();
    }
    return out;
}

i64 kernel_count(const Fq& F, const MatFq& B, const MatFq& g) {
    ClassLabel L = class_label(F, B);
    if (L.parts.size() != 1 || L.parts[0].second.size() != 1)
        throw NotSingleBlock("the generalized Jordan form of B has more than one block");
    const Poly& f = L.parts[0].first;
    int mult = L.parts[0].second[0];
    Poly charpoly = poly_pow(F, f, mult);
    MatFq K = mat_poly_eval(F, charpoly, g);
    int nullity = g.rows() - mat_rank(F, K);
    i64 out = 1;
    for (int t = 0; t < nullity; ++t) out *= F.q();
    return out;
}

const MatFq& Counting::rep(const ClassLabel& L) {
    std::string key = label_to_string(F_, L);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = rep_memo_.find(key);
        if (it != rep_memo_.end()) return it->second;
    }
    MatFq r = representative(F_, L);
    std::lock_guard<std::mutex> lock(mu_);
    return rep_memo_.try_emplace(key, std::move(r)).first->second;
}

const std::vector<ClassLabel>& Counting::decompose_full_rank(const ClassLabel& B) {
    std::string key = label_to_string(F_, B);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = dec_memo_.find(key);
        if (it != dec_memo_.end()) return it->second;
    }
    MatFq Bmat = rep(B);
    std::vector<ClassLabel> out;
    for (const auto& omega : invariant_subspaces(F_, Bmat, bound_)) {
        MatFq C = compress(F_, Bmat, omega).second;
        out.push_back(class_label(F_, C));
    }
    std::sort(out.begin(), out.end(), label_less);
    std::lock_guard<std::mutex> lock(mu_);
    return dec_memo_.try_emplace(key, std::move(out)).first->second;
}

std::vector<ClassLabel> Counting::decompose_full_rank(const MatFq& B) {
    return decompose_full_rank(class_label(F_, B));
}

i64 Counting::btil_fr(const ClassLabel& B, const ClassLabel& g) {
    if (B.n == 0) return 1;
    std::string key = label_to_string(F_, B) + "#" + label_to_string(F_, g);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = fr_memo_.find(key);
        if (it != fr_memo_.end()) return it->second;
    }
    i64 value = btil(F_, rep(B), rep(g));
    for (const auto& child : decompose_full_rank(B))
        if (child.n < B.n) value -= btil_fr(child, g);
    std::lock_guard<std::mutex> lock(mu_);
    fr_memo_.try_emplace(key, value);
    return value;
}

i64 Counting::btil_fr(const MatFq& B, const MatFq& g) {
    return btil_fr(class_label(F_, B), class_label(F_, g));
}

std::vector<i64> Counting::btil_row(const ClassLabel& B, int N, Exec exec) {
    auto classes = enumerate_classes(F_, N);
    std::vector<i64> out(classes.size());
    const MatFq& Bmat = rep(B);
    par_for(classes.size(), exec,
            [&](size_t i) { out[i] = btil(F_, Bmat, representative(F_, classes[i])); });
    return out;
}

std::vector<i64> Counting::btil_row_serial(const ClassLabel& B, int N) {
    return btil_row(B, N, Exec::serial);
}

std::vector<i64> Counting::btil_fr_row(const ClassLabel& B, int N, Exec exec) {
    auto classes = enumerate_classes(F_, N);
    std::vector<i64> out(classes.size());
    // resolve the decomposition up front so parallel workers only race on the
    // value memo, which tolerates duplicated computation
    decompose_full_rank(B);
    par_for(classes.size(), exec, [&](size_t i) { out[i] = btil_fr(B, classes[i]); });
    return out;
}

std::vector<i64> Counting::btil_fr_row_serial(const ClassLabel& B, int N) {
    return btil_fr_row(B, N, Exec::serial);
}

i64 btil_fr_brute(const Fq& F, const MatFq& B, const MatFq& g) {
    int m = B.rows(), N = g.rows();
    i64 count = 0;
    std::vector<int> digits(m * N, 0);
    MatFq M(m, N);
    while (true) {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < N; ++j) M.at(i, j) = Scalar(digits[i * N + j]);
        if (mat_rank(F, M) == m && mat_mul(F, M, g) == mat_mul(F, B, M)) ++count;
        int pos = 0;
        while (pos < m * N && ++digits[pos] == F.q()) digits[pos++] = 0;
        if (pos == m * N) break;
        if (m * N == 0) break;
    }
    return count;
}

}  // namespace scfq
