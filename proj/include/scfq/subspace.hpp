#pragma once

#include <cstddef>
#include <vector>

#include "scfq/classlabel.hpp"

namespace scfq {

// Subspaces of the row space F_q^m are carried around as reduced-row-echelon
// bases (possibly 0 x m).  Echelon form is canonical, so equality of bases is
// equality of subspaces.

struct SubspaceBound {
    // cap on the number of subspaces of F_q^m visited during enumeration;
    // sized so every workload in scope fits with room to spare
    std::size_t max_subspaces = 25000;
};

// number of subspaces of F_q^m of all dimensions (sum of Gaussian binomials)
i64 subspace_count(const Fq& F, int m);

// every subspace of F_q^m as an RREF basis, all dimensions including 0 and m,
// deterministically ordered; throws BoundExceeded against the bound
std::vector<MatFq> all_subspaces(const Fq& F, int m, const SubspaceBound& bound = {});

// is the row vector v in the row space of the RREF basis R?
bool in_rowspace(const Fq& F, const MatFq& R, const std::vector<Scalar>& v);

// subspaces Omega with Omega * B = Omega (B invertible: equivalent to
// Omega * B <= Omega); for singular B only containment is required
std::vector<MatFq> invariant_subspaces(const Fq& F, const MatFq& B,
                                       const SubspaceBound& bound = {});

// Row-selection pair for compressing matrices with prescribed left kernel
// Omega: S picks the rows indexed by A, T rebuilds all m rows from them.
// Invariants: S*T = I_k and T*S*L = L for every L with left kernel Omega.
struct CompressionPair {
    std::vector<int> row_set;  // A, the selected row indices
    MatFq S;                   // k x m
    MatFq T;                   // m x k
};

// compression C = S*B*T of B by an invariant subspace Omega (RREF basis);
// throws NotInvariant unless Omega*B <= Omega
std::pair<CompressionPair, MatFq> compress(const Fq& F, const MatFq& B, const MatFq& omega);

}  // namespace scfq
