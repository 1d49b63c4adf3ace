#pragma once

#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "scfq/parallel.hpp"
#include "scfq/subspace.hpp"

namespace scfq {

// btil(B, g): number of m x N matrices M over F_q with M g = B M, computed as
// q^(nullity of the linear system), never by enumerating M.  Depends only on
// the classes of B and g.
i64 btil(const Fq& F, const MatFq& B, const MatFq& g);

// |ker(f(g))| with f the characteristic polynomial of B, for B whose
// generalized Jordan form is a single block (minimal = characteristic
// polynomial); equals btil(B, g).  Throws NotSingleBlock otherwise.
i64 kernel_count(const Fq& F, const MatFq& B, const MatFq& g);

// Evaluator for the full-rank counts btil_fr through the recursion
//
//   btil_fr(B, g) = btil(B, g) - sum over invariant Omega != 0 of
//                   btil_fr(C_Omega, g),
//
// grounded at m = 0, with the memo keyed on (class of C, class of g).  The
// memo is a concurrent-safe idempotent cache: duplicated work is possible,
// corruption is not.
class Counting {
public:
    explicit Counting(const Fq& F, SubspaceBound bound = {}) : F_(F), bound_(bound) {}

    const Fq& field() const { return F_; }

    i64 btil_fr(const ClassLabel& B, const ClassLabel& g);
    i64 btil_fr(const MatFq& B, const MatFq& g);

    // multiset {class of C_Omega} over all invariant Omega (the Omega = 0
    // term contributes the class of B itself), sorted by label_less
    const std::vector<ClassLabel>& decompose_full_rank(const ClassLabel& B);
    std::vector<ClassLabel> decompose_full_rank(const MatFq& B);

    // rows of counting values over the classes of G_N, one entry per class in
    // enumerate_classes order; the _serial twins are the reference
    // implementations for the OpenMP kernels
    std::vector<i64> btil_row(const ClassLabel& B, int N, Exec exec = default_exec());
    std::vector<i64> btil_row_serial(const ClassLabel& B, int N);
    std::vector<i64> btil_fr_row(const ClassLabel& B, int N, Exec exec = default_exec());
    std::vector<i64> btil_fr_row_serial(const ClassLabel& B, int N);

private:
    const Fq& F_;
    SubspaceBound bound_;
    std::mutex mu_;
    std::unordered_map<std::string, i64> fr_memo_;
    std::unordered_map<std::string, std::vector<ClassLabel>> dec_memo_;
    std::unordered_map<std::string, MatFq> rep_memo_;

    const MatFq& rep(const ClassLabel& L);
};

// direct enumeration of full-rank solutions, exponential in m*N; test oracle
// for the recursion at tiny sizes
i64 btil_fr_brute(const Fq& F, const MatFq& B, const MatFq& g);

}  // namespace scfq
