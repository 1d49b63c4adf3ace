#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "scfq/counting.hpp"
#include "scfq/groupenum.hpp"
#include "scfq/hermeig.hpp"

namespace scfq {

// Numeric character table of GL_m(q).  Rows are irreducible characters in a
// deterministic order: degree ascending, then value tuples compared
// lexicographically with larger real part first, which places the trivial
// character in row 0.  Values are complex doubles; every identity consumed
// downstream is checked against exact integer data where available.
struct CharacterTable {
    int m = 0;
    std::shared_ptr<const GroupData> group;
    std::vector<int> degrees;
    std::vector<std::vector<cplx>> values;  // rows x classes
    double tolerance = 1e-8;

    int num_rows() const { return int(values.size()); }
    int num_classes() const { return int(group->classes.size()); }
    int trivial_row() const { return 0; }

    // <row_i, row_j> under the class-size weighting
    cplx row_inner(int i, int j) const;
};

struct TableOptions {
    std::uint64_t seed = 12345;
    double tol = 1e-8;
    i64 max_group_order = 25000;
    int max_attempts = 32;
};

// class-sum structure constants a[i][j][k] = #{(x,y) in C_i x C_j : xy = z_k},
// flattened as a[(i*r + j)*r + k]; the OpenMP kernel and its serial reference
std::vector<long long> structure_constants(const Fq& F, const GroupData& gd,
                                           Exec exec = default_exec());
std::vector<long long> structure_constants_serial(const Fq& F, const GroupData& gd);

CharacterTable character_table(const Fq& F, int m, const TableOptions& opt = {});

// Character-table engine with caching for tables, parabolic-induction count
// tensors, and the Fourier-side evaluations.  Class functions are carried as
// value vectors aligned with enumerate_classes order.
class CharTables {
public:
    CharTables(const Fq& F, Counting& counting, TableOptions opt = {});

    const Fq& field() const { return F_; }
    Counting& counting() { return cnt_; }
    const TableOptions& options() const { return opt_; }

    const CharacterTable& table(int m);

    // induced character of (chi_1 boxtimes chi_2)^* from the block-upper
    // parabolic, evaluated on every class of G_{m+r}; direct summation over
    // the group, so bounded by max_group_order
    std::vector<cplx> induce_pair(int m, int row1, int r, int row2,
                                  Exec exec = default_exec());

    // chi o 1: chi_2 replaced by the trivial character of G_{N-m}
    std::vector<cplx> induce_direct(int m, int row, int N, Exec exec = default_exec());

    // chi o 1 through the Fourier formula over full-rank counts: scalable in
    // N, exact-integer core
    std::vector<cplx> chi_circ_one(int m, int row, int N, Exec exec = default_exec());

    // full-rank count reconstructed from the parabolic basis
    std::vector<cplx> btil_fr_via_P(const ClassLabel& B, int N, Exec exec = default_exec());

    // joint class-pair counts behind induce_pair: per class k of G_{m+r}, the
    // number of y in G_N with y z_k y^{-1} block-triangular of blocks in the
    // given classes of G_m and G_r
    struct InducedCounts {
        int m = 0, r = 0;
        std::vector<std::vector<long long>> counts;  // [k][cm * numclasses_r + cr]
    };
    const InducedCounts& induced_counts(int m, int r, Exec exec = default_exec());

private:
    const Fq& F_;
    Counting& cnt_;
    TableOptions opt_;
    std::map<int, CharacterTable> tables_;
    std::map<std::pair<int, int>, InducedCounts> counts_;
};

// <f1, f2> = (1/|G_N|) sum_g f1(g) conj(f2(g)), via centralizer orders
cplx inner_product_on_classes(const Fq& F, int N, const std::vector<cplx>& f1,
                              const std::vector<cplx>& f2);

// E_N[f] = (1/|G_N|) sum_g f(g)
cplx expectation_on_classes(const Fq& F, int N, const std::vector<cplx>& f);

}  // namespace scfq
