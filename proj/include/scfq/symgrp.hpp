#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "scfq/parallel.hpp"
#include "scfq/partition.hpp"

namespace scfq {

using s64 = std::int64_t;

// Permutation of {0, ..., n-1} in one-line notation: images[i] is the image
// of i.  Composition (a * b)(i) = a(b(i)).
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_mul(const Perm& a, const Perm& b);
Perm perm_pow(const Perm& a, int k);
Perm perm_inverse(const Perm& a);
Partition cycle_type(const Perm& g);
// representative with cycles on consecutive blocks, longest first
Perm perm_from_type(const Partition& mu, int n);
std::vector<Perm> enumerate_sym(int n);  // all n! permutations

// order of the centralizer of a type-mu element in S_{|mu|}
s64 z_order(const Partition& mu);
s64 factorial(int n);

// number of i-cycles for each i up to n
std::vector<int> cycle_counts(const Partition& mu, int n);

// exact S_m character values by the Murnaghan-Nakayama recursion
class SymCharTable {
public:
    explicit SymCharTable(int m);

    int m() const { return m_; }
    const std::vector<Partition>& rows() const { return rows_; }      // irreps, by partition
    const std::vector<Partition>& classes() const { return rows_; }   // same index set
    s64 value(int row, int cls) const { return values_[row][cls]; }
    s64 value(const Partition& lambda, const Partition& mu) const;
    int class_index(const Partition& mu) const;
    int degree(int row) const;  // chi(identity)

private:
    int m_;
    std::vector<Partition> rows_;
    std::vector<std::vector<s64>> values_;
};

// #{maps phi : [m] -> [N] with g(phi(i)) = phi(sigma(i))}; product of fixed
// counts of powers of g, one factor per cycle of sigma
s64 sigma_til(const Partition& sigma_type, const Partition& g_type);
s64 sigma_til_brute(const Perm& sigma, const Perm& g);

// injective maps only: prod_i i^{r_i} (a_i)_{r_i} falling factorials
s64 sigma_til_fr(const Partition& sigma_type, const Partition& g_type);
s64 sigma_til_fr_brute(const Perm& sigma, const Perm& g);

// chi o 1 = Ind_{S_m x S_{N-m}}^{S_N}(chi boxtimes 1) evaluated on each class
// of S_N (classes in partitions_of(N) order, partition_less-sorted); exact
// integers, brute-force sum over S_N
std::vector<s64> sym_induce_direct(const SymCharTable& tm, int row, int N,
                                   Exec exec = default_exec());
std::vector<s64> sym_induce_direct_serial(const SymCharTable& tm, int row, int N);

struct SymFourierReport {
    int m = 0, N = 0;
    bool forward_ok = false;   // chi o 1 = (1/m!) sum_sigma chi(sigma) sigma_til_fr
    bool backward_ok = false;  // sigma_til_fr = sum_chi chi(sigma) (chi o 1)
    int cases_checked = 0;
};

SymFourierReport sn_fourier_check(int m, int N, Exec exec = default_exec());

}  // namespace scfq
