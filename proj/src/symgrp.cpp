#include "scfq/symgrp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace scfq {

Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

Perm perm_pow(const Perm& a, int k) {
    Perm r = perm_identity(int(a.size()));
    for (int i = 0; i < k; ++i) r = perm_mul(a, r);
    return r;
}

Perm perm_inverse(const Perm& a) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[a[i]] = int(i);
    return r;
}

Partition cycle_type(const Perm& g) {
    std::vector<bool> seen(g.size(), false);
    Partition type;
    for (size_t i = 0; i < g.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = size_t(g[j]);
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

Perm perm_from_type(const Partition& mu, int n) {
    Perm p = perm_identity(n);
    int at = 0;
    for (int part : mu) {
        for (int i = 0; i < part; ++i) p[at + i] = at + (i + 1) % part;
        at += part;
    }
    if (at > n) throw std::invalid_argument("cycle type does not fit in [n]");
    return p;
}

std::vector<Perm> enumerate_sym(int n) {
    std::vector<Perm> out;
    Perm p = perm_identity(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

s64 factorial(int n) {
    s64 r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

s64 z_order(const Partition& mu) {
    s64 z = 1;
    int maxpart = mu.empty() ? 0 : mu[0];
    for (int i = 1; i <= maxpart; ++i) {
        int a = 0;
        for (int x : mu)
            if (x == i) ++a;
        for (int t = 0; t < a; ++t) z *= i;
        z *= factorial(a);
    }
    return z;
}

std::vector<int> cycle_counts(const Partition& mu, int n) {
    std::vector<int> a(n + 1, 0);
    for (int x : mu)
        if (x <= n) ++a[x];
    return a;
}

namespace {

// Murnaghan-Nakayama by beta numbers: remove a border strip of length r from
// lambda for every legal position, with sign (-1)^height
s64 mn_value(const Partition& lambda, const std::vector<int>& mu, size_t idx) {
    if (idx == mu.size()) return lambda.empty() ? 1 : 0;
    int r = mu[idx];
    int L = int(lambda.size());
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = lambda[i] + (L - 1 - i);

    s64 total = 0;
    for (int i = 0; i < L; ++i) {
        int target = beta[i] - r;
        if (target < 0) continue;
        bool taken = false;
        int height = 0;
        for (int j = 0; j < L; ++j) {
            if (j == i) continue;
            if (beta[j] == target) taken = true;
            if (beta[j] > target && beta[j] < beta[i]) ++height;
        }
        if (taken) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        Partition nl;
        for (int j = 0; j < L; ++j) {
            int part = nb[j] - (L - 1 - j);
            if (part > 0) nl.push_back(part);
        }
        total += (height % 2 ? -1 : 1) * mn_value(nl, mu, idx + 1);
    }
    return total;
}

}  // namespace

SymCharTable::SymCharTable(int m) : m_(m) {
    rows_ = partitions_of(m);
    std::sort(rows_.begin(), rows_.end(), partition_less);
    values_.assign(rows_.size(), std::vector<s64>(rows_.size(), 0));
    for (size_t i = 0; i < rows_.size(); ++i)
        for (size_t j = 0; j < rows_.size(); ++j) {
            std::vector<int> mu(rows_[j].begin(), rows_[j].end());
            values_[i][j] = mn_value(rows_[i], mu, 0);
        }
}

int SymCharTable::class_index(const Partition& mu) const {
    for (size_t j = 0; j < rows_.size(); ++j)
        if (rows_[j] == mu) return int(j);
    throw std::invalid_argument("not a partition of m");
}

s64 SymCharTable::value(const Partition& lambda, const Partition& mu) const {
    return values_[class_index(lambda)][class_index(mu)];
}

int SymCharTable::degree(int row) const {
    return int(values_[row][class_index(Partition(size_t(m_), 1))]);
}

namespace {

s64 fix_of_power(const Partition& g_type, int k) {
    // fixed points of g^k: cycles of length dividing k stay pointwise fixed
    s64 fix = 0;
    for (int len : g_type)
        if (k % len == 0) fix += len;
    return fix;
}

}  // namespace

s64 sigma_til(const Partition& sigma_type, const Partition& g_type) {
    s64 out = 1;
    for (int part : sigma_type) out *= fix_of_power(g_type, part);
    return out;
}

s64 sigma_til_brute(const Perm& sigma, const Perm& g) {
    int m = int(sigma.size()), N = int(g.size());
    if (N == 0) return m == 0 ? 1 : 0;  // no maps into an empty set
    s64 count = 0;
    std::vector<int> phi(m, 0);
    while (true) {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) ok = g[phi[i]] == phi[sigma[i]];
        if (ok) ++count;
        int pos = 0;
        while (pos < m && ++phi[pos] == N) phi[pos++] = 0;
        if (pos == m) break;
    }
    return count;
}

s64 sigma_til_fr(const Partition& sigma_type, const Partition& g_type) {
    int m = partition_weight(sigma_type);
    auto r = cycle_counts(sigma_type, m);
    int n = partition_weight(g_type);
    auto a = cycle_counts(g_type, n);
    s64 out = 1;
    for (int i = 1; i <= m; ++i) {
        if (r[i] == 0) continue;
        s64 ai = i <= n ? a[i] : 0;
        for (int t = 0; t < r[i]; ++t) {
            out *= i;
            out *= ai - t;  // falling factorial (a_i)_{r_i}
        }
        if (out == 0) return 0;
    }
    return out;
}

s64 sigma_til_fr_brute(const Perm& sigma, const Perm& g) {
    int m = int(sigma.size()), N = int(g.size());
    if (m > N) return 0;
    s64 count = 0;
    std::vector<int> phi(m, 0);
    while (true) {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            for (int j = i + 1; j < m && ok; ++j) ok = phi[i] != phi[j];
        for (int i = 0; i < m && ok; ++i) ok = g[phi[i]] == phi[sigma[i]];
        if (ok) ++count;
        int pos = 0;
        while (pos < m && ++phi[pos] == N) phi[pos++] = 0;
        if (pos == m) break;
    }
    return count;
}

std::vector<s64> sym_induce_direct_serial(const SymCharTable& tm, int row, int N) {
    return sym_induce_direct(tm, row, N, Exec::serial);
}

std::vector<s64> sym_induce_direct(const SymCharTable& tm, int row, int N, Exec exec) {
    int m = tm.m();
    if (N < m) throw std::invalid_argument("need N >= m");
    auto classes_N = partitions_of(N);
    std::sort(classes_N.begin(), classes_N.end(), partition_less);
    auto sn = enumerate_sym(N);

    // per class of S_N, count conjugates landing in S_m x S_{N-m} by the
    // S_m-part cycle type, then pair with the character
    std::vector<s64> out(classes_N.size(), 0);
    par_for(classes_N.size(), exec, [&](size_t k) {
        Perm gk = perm_from_type(classes_N[k], N);
        std::vector<s64> counts(tm.rows().size(), 0);
        for (const auto& y : sn) {
            Perm h = perm_mul(perm_mul(y, gk), perm_inverse(y));
            bool stable = true;
            for (int i = 0; i < m && stable; ++i) stable = h[i] < m;
            if (!stable) continue;
            Perm top(h.begin(), h.begin() + m);
            counts[tm.class_index(cycle_type(top))] += 1;
        }
        s64 numer = 0;
        for (size_t t = 0; t < counts.size(); ++t) numer += counts[t] * tm.value(row, int(t));
        s64 denom = factorial(m) * factorial(N - m);
        if (numer % denom != 0) throw std::logic_error("induced character value is not integral");
        out[k] = numer / denom;
    });
    return out;
}

SymFourierReport sn_fourier_check(int m, int N, Exec exec) {
    SymFourierReport rep;
    rep.m = m;
    rep.N = N;
    SymCharTable tm(m);
    auto classes_N = partitions_of(N);
    std::sort(classes_N.begin(), classes_N.end(), partition_less);
    auto types_m = tm.classes();

    // induced values for every row of S_m
    std::vector<std::vector<s64>> ind;
    for (size_t row = 0; row < types_m.size(); ++row)
        ind.push_back(sym_induce_direct(tm, int(row), N, exec));

    rep.forward_ok = true;
    rep.backward_ok = true;
    for (size_t k = 0; k < classes_N.size(); ++k) {
        for (size_t row = 0; row < types_m.size(); ++row) {
            // m! (chi o 1)(g) = sum over types t of |C_t| chi(t) sigma_til_fr_t(g)
            s64 rhs = 0;
            for (size_t t = 0; t < types_m.size(); ++t)
                rhs += (factorial(m) / z_order(types_m[t])) * tm.value(int(row), int(t)) *
                       sigma_til_fr(types_m[t], classes_N[k]);
            if (factorial(m) * ind[row][k] != rhs) rep.forward_ok = false;
            ++rep.cases_checked;
        }
        for (size_t t = 0; t < types_m.size(); ++t) {
            // sigma_til_fr = sum_chi chi(sigma) (chi o 1); S_m characters are
            // integer valued so no conjugation appears
            s64 rhs = 0;
            for (size_t row = 0; row < types_m.size(); ++row)
                rhs += tm.value(int(row), int(t)) * ind[row][k];
            if (rhs != sigma_til_fr(types_m[t], classes_N[k])) rep.backward_ok = false;
            ++rep.cases_checked;
        }
    }
    return rep;
}

}  // namespace scfq
