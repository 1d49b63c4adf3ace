#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "scfq/mat.hpp"
#include "scfq/partition.hpp"

namespace scfq {

using i64 = std::int64_t;
using i128 = __int128;

// Canonical name of a conjugacy class of GL_n(q): a partition attached to
// each monic irreducible polynomial f != x, with sum of deg(f)*|lambda_f|
// equal to n.  Entries are kept sorted by poly_less, so equality of labels is
// structural.
struct ClassLabel {
    int n = 0;
    std::vector<std::pair<Poly, Partition>> parts;

    bool operator==(const ClassLabel& o) const { return n == o.n && parts == o.parts; }
    bool operator!=(const ClassLabel& o) const { return !(*this == o); }
};

bool label_less(const ClassLabel& a, const ClassLabel& b);

// "{x+1:2,1|x^2+x+1:1}"; the empty label (n = 0) prints as "{}"
std::string label_to_string(const Fq& F, const ClassLabel& L);
ClassLabel label_parse(const Fq& F, const std::string& text);

// class of an invertible matrix, from the rank sequences of f(g)^j
ClassLabel class_label(const Fq& F, const MatFq& g);

// block-diagonal of generalized Jordan blocks realizing the label
MatFq representative(const Fq& F, const ClassLabel& L);

// companion matrix of a monic polynomial (subdiagonal ones, negated
// coefficients in the last column)
MatFq companion(const Fq& F, const Poly& f);

// single Jordan block with eigenvalue lambda, subdiagonal ones
MatFq jordan_block(const Fq& F, Scalar lambda, int t);

// |GL_N(q)| = prod_{i<N} (q^N - q^i); throws BoundExceeded past 2^62
i64 group_order(const Fq& F, int N);

i64 centralizer_order(const Fq& F, const ClassLabel& L);
inline i64 class_size(const Fq& F, const ClassLabel& L) {
    return group_order(F, L.n) / centralizer_order(F, L);
}

// every conjugacy class of GL_N(q), complete and deterministically ordered
std::vector<ClassLabel> enumerate_classes(const Fq& F, int N);

}  // namespace scfq
