#include "scfq/nirpoly.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "scfq/classlabel.hpp"
#include "scfq/errors.hpp"
#include "scfq/rational.hpp"

namespace scfq {

MatFq jordan_matrix(const Fq& F, Scalar lambda, const Partition& mu) {
    MatFq B(0, 0);
    for (int part : mu) B = mat_block_diag(B, jordan_block(F, lambda, part));
    return B;
}

MatFq nilpotent_matrix(const Fq& F, const Partition& mu) {
    MatFq B = jordan_matrix(F, F.one(), mu);
    for (int i = 0; i < B.rows(); ++i) B.at(i, i) = 0;
    return B;
}

Partition nilpotent_partition(const Fq& F, const MatFq& T) {
    Partition cols;
    int prev = T.rows();
    MatFq P = T;
    while (true) {
        int r = mat_rank(F, P);
        if (r == prev) break;
        cols.push_back(prev - r);
        prev = r;
        if (r == 0) break;
        P = mat_mul(F, P, T);
    }
    return partition_conjugate(cols);
}

std::vector<Partition> nmultiset(const Fq& F, Scalar lambda, const Partition& mu,
                                 const SubspaceBound& bound) {
    if (lambda == 0) throw std::invalid_argument("lambda must be nonzero");
    MatFq B = jordan_matrix(F, lambda, mu);
    std::vector<Partition> out;
    for (const auto& omega : invariant_subspaces(F, B, bound)) {
        if (omega.rows() == 0) continue;  // only nonzero subspaces enter the multiset
        auto [pair, C] = compress(F, B, omega);
        MatFq nil = C;
        for (int i = 0; i < nil.rows(); ++i) nil.at(i, i) = F.sub(nil.at(i, i), lambda);
        out.push_back(nilpotent_partition(F, nil));
    }
    std::sort(out.begin(), out.end(), partition_less);
    return out;
}

namespace {

struct PartLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return partition_less(a, b);
    }
};

MultiPolyQ p_mu_rec(const Fq& F, const Partition& mu, const SubspaceBound& bound,
                    std::map<Partition, MultiPolyQ, PartLess>& memo) {
    auto it = memo.find(mu);
    if (it != memo.end()) return it->second;

    MultiPolyQ p = multipoly_one();
    if (!mu.empty()) {
        // prod over rows of (1 + x_1 + ... + x_{mu_i}), the block-diagonal
        // expansion of the plain count through single-block chains
        for (int part : mu) {
            MultiPolyQ factor = multipoly_one();
            for (int t = 1; t <= part; ++t) factor = multipoly_add(factor, multipoly_var(t));
            p = multipoly_mul(p, factor);
        }
        for (const auto& nu : nmultiset(F, F.one(), mu, bound))
            p = multipoly_sub(p, p_mu_rec(F, nu, bound, memo));
    }
    memo.emplace(mu, p);
    return p;
}

}  // namespace

MultiPolyQ p_mu_at_q(const Fq& F, const Partition& mu, const SubspaceBound& bound) {
    std::map<Partition, MultiPolyQ, PartLess> memo;
    return p_mu_rec(F, mu, bound, memo);
}

MultiPolyQ p_mu_fit(const Partition& mu, const std::vector<int>& qs, int holdout_q,
                    const SubspaceBound& bound) {
    if (qs.empty()) throw std::invalid_argument("need at least one sample q");
    std::vector<MultiPolyQ> samples;
    for (int q : qs) {
        Fq F(q);
        samples.push_back(p_mu_at_q(F, mu, bound));
    }

    // union of monomials across the samples
    std::map<Monomial, std::vector<long long>> values;
    for (size_t s = 0; s < samples.size(); ++s)
        for (const auto& [mono, c] : samples[s].terms) {
            auto [it, inserted] = values.try_emplace(mono, std::vector<long long>(qs.size(), 0));
            it->second[s] = c.coeffs.empty() ? 0 : c.coeffs[0];
        }

    MultiPolyQ fit;
    for (const auto& [mono, ys] : values) {
        // exact Lagrange interpolation of the coefficient as a polynomial in q
        size_t n = qs.size();
        std::vector<Rat> coeffs(n, Rat(0));
        for (size_t i = 0; i < n; ++i) {
            std::vector<Rat> basis{Rat(1)};
            Rat denom(1);
            for (size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                std::vector<Rat> next(basis.size() + 1, Rat(0));
                for (size_t t = 0; t < basis.size(); ++t) {
                    next[t + 1] = next[t + 1] + basis[t];
                    next[t] = next[t] - basis[t] * Rat(qs[j]);
                }
                basis = std::move(next);
                denom = denom * (Rat(qs[i]) - Rat(qs[j]));
            }
            for (size_t t = 0; t < basis.size(); ++t)
                coeffs[t] = coeffs[t] + basis[t] * Rat(ys[i]) / denom;
        }
        PolyQ cq;
        for (const auto& r : coeffs) {
            if (!r.is_integer())
                throw FitFailure("coefficient of " + fit.to_string() +
                                 " interpolates to a non-integer polynomial in q");
            cq.coeffs.push_back(r.as_int());
        }
        while (!cq.coeffs.empty() && cq.coeffs.back() == 0) cq.coeffs.pop_back();
        fit.add(mono, cq);
    }

    // held-out verification at a fresh prime power
    Fq Fh(holdout_q);
    MultiPolyQ expect = p_mu_at_q(Fh, mu, bound);
    if (!(fit.at_q(holdout_q) == expect))
        throw FitFailure("fitted polynomial disagrees with the held-out q = " +
                         std::to_string(holdout_q));
    return fit;
}

MatFq build_extension(const Fq& F, const NilpotentExtension& ext) {
    int w = partition_weight(ext.nu);
    int n = w + ext.s;
    MatFq T(n, n);
    // chain basis of W: e_off .. e_{off+part-1} with e_i T = e_{i+1}
    int off = 0;
    for (int part : ext.nu) {
        for (int i = 0; i + 1 < part; ++i) T.at(off + i, off + i + 1) = F.one();
        off += part;
    }
    // cyclic chain on top of W: v, vT, ..., vT^{s-1}, then vT^s lands in W
    for (int i = 0; i + 1 < ext.s; ++i) T.at(w + i, w + i + 1) = F.one();
    for (size_t t = 0; t < ext.support.size(); ++t)
        T.at(w + ext.s - 1, ext.support[t]) = ext.coeffs[t];
    return T;
}

ExtensionSupportReport extension_support_property(int trials, int max_dim, std::uint64_t seed) {
    ExtensionSupportReport rep;
    std::mt19937_64 rng(seed);
    std::vector<int> qs{2, 3, 5};

    for (int trial = 0; trial < trials; ++trial) {
        int q = qs[rng() % qs.size()];
        Fq F(q);

        // random nu and s within the dimension budget
        int w = 1 + int(rng() % std::max(1, max_dim - 1));
        auto parts = partitions_of(w);
        Partition nu = parts[rng() % parts.size()];
        int s = 1 + int(rng() % std::max(1, max_dim - w));

        // random support of the combination for v T^s
        std::vector<int> support;
        for (int i = 0; i < w; ++i)
            if (rng() % 3 == 0) support.push_back(i);

        NilpotentExtension ext;
        ext.nu = nu;
        ext.s = s;
        ext.support = support;

        Partition expected;
        bool first = true;
        int variants = support.empty() ? 1 : 4;
        for (int v = 0; v < variants; ++v) {
            ext.coeffs.clear();
            for (size_t i = 0; i < support.size(); ++i)
                ext.coeffs.push_back(Scalar(1 + rng() % (q - 1 == 0 ? 1 : q - 1)));
            MatFq T = build_extension(F, ext);
            Partition got = nilpotent_partition(F, T);
            if (first) {
                expected = got;
                first = false;
            } else {
                ++rep.comparisons;
                if (got != expected) return rep;  // pass stays false
            }
        }

        if (support.empty()) {
            // direct-sum case: the quotient chain detaches, appending a part s
            Partition direct = nu;
            direct.push_back(s);
            std::sort(direct.rbegin(), direct.rend());
            ++rep.comparisons;
            if (expected != direct) return rep;
        }

        // dimension bookkeeping: total size is |nu| + s
        ++rep.comparisons;
        if (partition_weight(expected) != w + s) return rep;
        ++rep.instances;
    }
    rep.pass = true;
    return rep;
}

}  // namespace scfq
