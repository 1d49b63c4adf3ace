#pragma once

#include <cstdint>
#include <vector>

#include "scfq/polyq.hpp"
#include "scfq/subspace.hpp"

namespace scfq {

// Jordan matrix B_{lambda,mu}: one Jordan block of size mu_i with eigenvalue
// lambda for every part, stacked block-diagonally.
MatFq jordan_matrix(const Fq& F, Scalar lambda, const Partition& mu);

// the nilpotent part B_mu = B_{lambda,mu} - lambda I (independent of lambda)
MatFq nilpotent_matrix(const Fq& F, const Partition& mu);

// Jordan partition of a nilpotent matrix from its rank sequence
Partition nilpotent_partition(const Fq& F, const MatFq& T);

// The multiset N_{lambda,mu}: over every nonzero subspace invariant under
// B_{lambda,mu}, the Jordan partition of the compressed matrix C - lambda I.
// Sorted with partition_less; the full space contributes the empty partition.
std::vector<Partition> nmultiset(const Fq& F, Scalar lambda, const Partition& mu,
                                 const SubspaceBound& bound = {});

// The polynomial p_mu at one fixed q (coefficients are plain integers):
// recursion p(mu) = prod_i (1 + x_1 + ... + x_{mu_i}) - sum_{nu in N_mu} p(nu)
MultiPolyQ p_mu_at_q(const Fq& F, const Partition& mu, const SubspaceBound& bound = {});

// Fit of the universal p_mu with Z[q] coefficients from exact per-q samples;
// integrality and a held-out prime power are both enforced (FitFailure).
MultiPolyQ p_mu_fit(const Partition& mu, const std::vector<int>& qs, int holdout_q,
                    const SubspaceBound& bound = {});

// Nilpotent extension experiment: V = W + cyclic vector chain of length s,
// with v T^s prescribed as a combination of the chain basis of W.  The Jordan
// partition of T depends only on (nu, s, support of the combination).
struct NilpotentExtension {
    Partition nu;                  // Jordan partition of T on W
    int s = 0;                     // dim V / W
    std::vector<int> support;      // indices into the chain basis of W
    std::vector<Scalar> coeffs;    // nonzero coefficients, same length
};

MatFq build_extension(const Fq& F, const NilpotentExtension& ext);

struct ExtensionSupportReport {
    int instances = 0;
    int comparisons = 0;
    bool pass = false;
};

// random instances: same (nu, s, support) with different nonzero coefficient
// choices must give the same partition; empty support appends a part s
ExtensionSupportReport extension_support_property(int trials, int max_dim, std::uint64_t seed);

}  // namespace scfq
