#include "scfq/classlabel.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "scfq/errors.hpp"

namespace scfq {

bool label_less(const ClassLabel& a, const ClassLabel& b) {
    if (a.n != b.n) return a.n < b.n;
    size_t n = std::min(a.parts.size(), b.parts.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.parts[i].first != b.parts[i].first)
            return poly_less(a.parts[i].first, b.parts[i].first);
        if (a.parts[i].second != b.parts[i].second)
            return partition_less(a.parts[i].second, b.parts[i].second);
    }
    return a.parts.size() < b.parts.size();
}

std::string label_to_string(const Fq& F, const ClassLabel& L) {
    std::string out = "{";
    for (size_t i = 0; i < L.parts.size(); ++i) {
        if (i) out += "|";
        out += poly_to_string(F, L.parts[i].first) + ":" + partition_to_string(L.parts[i].second);
    }
    out += "}";
    return out;
}

ClassLabel label_parse(const Fq& F, const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) s.push_back(c);
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        throw ParseError("class label must be brace-delimited: " + text);
    s = s.substr(1, s.size() - 2);
    ClassLabel L;
    if (s.empty()) return L;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, '|')) {
        auto colon = item.rfind(':');
        if (colon == std::string::npos) throw ParseError("missing ':' in class label entry: " + item);
        Poly f = poly_parse(F, item.substr(0, colon));
        if (!poly_is_monic(F, f) || !is_irreducible(F, f))
            throw ParseError("class label keys must be monic irreducibles: " + item);
        if (deg(f) == 1 && f[0] == 0) throw ParseError("class label key x is not allowed");
        Partition p;
        std::stringstream ps(item.substr(colon + 1));
        std::string tok;
        while (std::getline(ps, tok, ',')) p.push_back(std::stoi(tok));
        if (p.empty()) throw ParseError("empty partition in class label entry: " + item);
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if (p[i] < p[i + 1]) throw ParseError("partition parts must be non-increasing: " + item);
        if (p.back() <= 0) throw ParseError("partition parts must be positive: " + item);
        L.parts.emplace_back(std::move(f), std::move(p));
        L.n += deg(L.parts.back().first) * partition_weight(L.parts.back().second);
    }
    std::sort(L.parts.begin(), L.parts.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    for (size_t i = 0; i + 1 < L.parts.size(); ++i)
        if (L.parts[i].first == L.parts[i + 1].first)
            throw ParseError("duplicate polynomial in class label");
    return L;
}

ClassLabel class_label(const Fq& F, const MatFq& g) {
    if (g.rows() != g.cols()) throw SingularMatrix("class label needs a square matrix");
    int N = g.rows();
    ClassLabel L;
    L.n = N;
    if (N == 0) return L;
    if (!mat_invertible(F, g)) throw SingularMatrix("class label needs an invertible matrix");

    int total = 0;
    auto irr = irreducibles_up_to(F, N, /*exclude_x=*/true);
    for (const auto& f : irr) {
        if (total == N) break;
        int d = deg(f);
        if (d > N - total) continue;
        MatFq K = mat_poly_eval(F, f, g);
        int r_prev = N;
        int r = mat_rank(F, K);
        if (r == N) continue;
        // column lengths of the partition: (rk f(g)^{j-1} - rk f(g)^j)/deg f
        Partition cols;
        MatFq P = K;
        while (r < r_prev) {
            if ((r_prev - r) % d != 0)
                throw std::logic_error("rank drop not divisible by factor degree");
            cols.push_back((r_prev - r) / d);
            r_prev = r;
            P = mat_mul(F, P, K);
            r = mat_rank(F, P);
        }
        Partition lambda = partition_conjugate(cols);
        total += d * partition_weight(lambda);
        L.parts.emplace_back(f, std::move(lambda));
    }
    if (total != N) throw std::logic_error("class label does not exhaust the matrix size");
    return L;
}

MatFq companion(const Fq& F, const Poly& f) {
    int d = deg(f);
    MatFq C(d, d);
    for (int i = 1; i < d; ++i) C.at(i, i - 1) = 1;
    for (int i = 0; i < d; ++i) C.at(i, d - 1) = F.neg(f[i]);
    return C;
}

MatFq jordan_block(const Fq& F, Scalar lambda, int t) {
    MatFq B(t, t);
    for (int i = 0; i < t; ++i) B.at(i, i) = lambda;
    for (int i = 1; i < t; ++i) B.at(i, i - 1) = F.one();
    return B;
}

namespace {

// generalized Jordan block: companion blocks on the diagonal, corner-one
// coupling blocks below
MatFq generalized_jordan_block(const Fq& F, const Poly& f, int t) {
    int d = deg(f);
    MatFq C = companion(F, f);
    MatFq B(d * t, d * t);
    for (int k = 0; k < t; ++k)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) B.at(k * d + i, k * d + j) = C.at(i, j);
    for (int k = 0; k + 1 < t; ++k) B.at((k + 1) * d, k * d + (d - 1)) = F.one();
    return B;
}

}  // namespace

MatFq representative(const Fq& F, const ClassLabel& L) {
    MatFq B(0, 0);
    for (const auto& [f, lambda] : L.parts)
        for (int part : lambda) B = mat_block_diag(B, generalized_jordan_block(F, f, part));
    return B;
}

i64 group_order(const Fq& F, int N) {
    i128 qN = 1;
    for (int i = 0; i < N; ++i) qN *= F.q();
    i128 ord = 1;
    i128 qi = 1;
    const i128 lim = (i128(1) << 62);
    for (int i = 0; i < N; ++i) {
        ord *= qN - qi;
        qi *= F.q();
        if (ord >= lim) throw BoundExceeded("group order exceeds 2^62");
    }
    return i64(ord);
}

namespace {

// centralizer order of a single-polynomial part with partition lambda over
// the degree-d extension: Q^{sum lambda'_j^2} * prod_i phi_{m_i}(1/Q) with
// Q = q^d, written as an integer product
i128 centralizer_factor(i128 Q, const Partition& lambda) {
    Partition conj = partition_conjugate(lambda);
    long long expo = 0;
    for (int c : conj) expo += (long long)c * c;
    // multiplicities of each part size
    i128 out = 1;
    int maxpart = lambda.empty() ? 0 : lambda[0];
    for (int part = 1; part <= maxpart; ++part) {
        int mult = 0;
        for (int x : lambda)
            if (x == part) ++mult;
        i128 Qj = 1;
        for (int j = 1; j <= mult; ++j) {
            Qj *= Q;
            out *= Qj - 1;
            expo -= j;
        }
    }
    // expo = sum lambda'^2 - sum_i m_i(m_i+1)/2 >= 0
    for (long long i = 0; i < expo; ++i) out *= Q;
    return out;
}

}  // namespace

i64 centralizer_order(const Fq& F, const ClassLabel& L) {
    i128 out = 1;
    const i128 lim = (i128(1) << 62);
    for (const auto& [f, lambda] : L.parts) {
        i128 Q = 1;
        for (int i = 0; i < deg(f); ++i) Q *= F.q();
        out *= centralizer_factor(Q, lambda);
        if (out >= lim) throw BoundExceeded("centralizer order exceeds 2^62");
    }
    return i64(out);
}

std::vector<ClassLabel> enumerate_classes(const Fq& F, int N) {
    auto irr = irreducibles_up_to(F, N, /*exclude_x=*/true);
    std::vector<ClassLabel> out;
    ClassLabel cur;
    cur.n = N;
    auto rec = [&](auto&& self, size_t idx, int rest) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        if (idx == irr.size()) return;
        int d = deg(irr[idx]);
        // skip this polynomial entirely
        self(self, idx + 1, rest);
        for (int w = 1; w * d <= rest; ++w)
            for (const auto& lambda : partitions_of(w)) {
                cur.parts.emplace_back(irr[idx], lambda);
                self(self, idx + 1, rest - w * d);
                cur.parts.pop_back();
            }
    };
    rec(rec, 0, N);
    for (auto& L : out)
        std::sort(L.parts.begin(), L.parts.end(),
                  [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    std::sort(out.begin(), out.end(), label_less);
    return out;
}

}  // namespace scfq
