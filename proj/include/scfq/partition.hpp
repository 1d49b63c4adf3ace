#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace scfq {

// Partition: weakly decreasing positive parts.  The empty partition is {}.
using Partition = std::vector<int>;

inline int partition_weight(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

inline Partition partition_conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    for (int i = 1; i <= p[0]; ++i) {
        int len = 0;
        for (int x : p)
            if (x >= i) ++len;
        c.push_back(len);
    }
    return c;
}

// ordering used for deterministic listings: lower weight first, then
// reverse-lexicographic within a weight, so (3) < (2,1) < (1,1,1)
inline bool partition_less(const Partition& a, const Partition& b) {
    int wa = partition_weight(a), wb = partition_weight(b);
    if (wa != wb) return wa < wb;
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        int x = i < a.size() ? a[i] : 0;
        int y = i < b.size() ? b[i] : 0;
        if (x != y) return x > y;
    }
    return false;
}

inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(rest, maxpart); part >= 1; --part) {
            cur.push_back(part);
            self(self, rest - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

// all partitions nu obtained from mu by adding r boxes, no two in the same
// column (nu/mu a horizontal strip): nu_1 >= mu_1 >= nu_2 >= mu_2 >= ...
inline std::vector<Partition> add_horizontal_strips(const Partition& mu, int r) {
    std::vector<Partition> out;
    int rows = int(mu.size()) + 1;
    Partition nu(rows, 0);
    auto rec = [&](auto&& self, int i, int rest) -> void {
        if (i == rows) {
            if (rest != 0) return;
            Partition v;
            for (int x : nu)
                if (x > 0) v.push_back(x);
            out.push_back(v);
            return;
        }
        int lo = i < int(mu.size()) ? mu[i] : 0;
        int hi = i == 0 ? lo + rest : std::min(mu[i - 1], lo + rest);
        for (int v = hi; v >= lo; --v) {
            if (i > 0 && v > nu[i - 1]) continue;
            nu[i] = v;
            self(self, i + 1, rest - (v - lo));
        }
        nu[i] = 0;
    };
    rec(rec, 0, r);
    std::sort(out.begin(), out.end(), partition_less);
    return out;
}

// all partitions nu obtained from mu by removing s boxes, no two from the
// same column (mu/nu a horizontal strip): mu_1 >= nu_1 >= mu_2 >= nu_2 >= ...
inline std::vector<Partition> remove_horizontal_strips(const Partition& mu, int s) {
    std::vector<Partition> out;
    int rows = int(mu.size());
    Partition nu(rows, 0);
    auto rec = [&](auto&& self, int i, int rest) -> void {
        if (i == rows) {
            if (rest != 0) return;
            Partition v;
            for (int x : nu)
                if (x > 0) v.push_back(x);
            out.push_back(v);
            return;
        }
        int hi = std::min(mu[i], i == 0 ? mu[i] : nu[i - 1]);
        int lo = std::max(i + 1 < rows ? mu[i + 1] : 0, mu[i] - rest);
        for (int v = hi; v >= lo; --v) {
            nu[i] = v;
            self(self, i + 1, rest - (mu[i] - v));
        }
        nu[i] = 0;
    };
    rec(rec, 0, s);
    std::sort(out.begin(), out.end(), partition_less);
    return out;
}

inline std::string partition_to_string(const Partition& p) {
    if (p.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s;
}

}  // namespace scfq
