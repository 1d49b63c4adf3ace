#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scfq/chartab.hpp"
#include "scfq/rational.hpp"

namespace scfq {

// A cuspidal irreducible of G_n, addressed by its position in the cuspidal
// list for that n.  The trivial character of G_1 is always (n=1, index=0).
struct CuspidalLabel {
    int n = 0;
    int index = 0;
    bool operator==(const CuspidalLabel& o) const { return n == o.n && index == o.index; }
    bool operator<(const CuspidalLabel& o) const {
        return n != o.n ? n < o.n : index < o.index;
    }
};

inline const CuspidalLabel kTrivialCuspidal{1, 0};

// Finitely supported map from cuspidals to partitions; parametrizes the
// stable irreducible characters.  Entries sorted, empty partitions dropped.
struct MuVec {
    std::vector<std::pair<CuspidalLabel, Partition>> support;

    int norm() const;  // sum of d(rho) * |partition|
    Partition at_one() const;
    MuVec with_one(const Partition& p) const;  // replace the part at the trivial cuspidal
    void canonicalize();

    bool operator==(const MuVec& o) const { return support == o.support; }
    bool operator<(const MuVec& o) const;

    std::string to_string() const;  // e.g. "{1.0:2,1|2.0:1}", "{}" when empty
    static MuVec parse(const std::string& text);
};

// all nu obtained from mu by adding r boxes to the partition at the trivial
// cuspidal, no two in one column; pure combinatorics
std::vector<MuVec> pieri_expand(const MuVec& mu, int r);

// prepend a first row of size N - ||mu|| at the trivial cuspidal
MuVec mu_of_N(const MuVec& mu, int N);  // throws TooSmallN

enum class BasisTag { R, Rfr, P, I };
std::string tag_name(BasisTag t);
BasisTag tag_parse(const std::string& s);

struct BasisLabel {
    BasisTag tag = BasisTag::R;
    ClassLabel cls;  // R / Rfr payload
    int m = 0;       // P payload: level and row of the character table
    int row = 0;
    MuVec mu;        // I payload

    bool operator<(const BasisLabel& o) const;
    bool operator==(const BasisLabel& o) const;
};

// finite linear combination in one of the four bases
struct StableFunction {
    BasisTag tag = BasisTag::R;
    std::map<BasisLabel, cplx> terms;

    static StableFunction single(BasisLabel label, cplx coeff = 1.0);
    void add(const BasisLabel& label, cplx coeff, double eps = 1e-10);
    void prune(double eps = 1e-10);
};

struct RingOptions {
    TableOptions table;
    SubspaceBound subspaces;
    int max_cuspidal_level = 2;
    double coeff_eps = 1e-10;
};

struct FamilyRank {
    std::string name;
    int generators = 0;
    int rank = 0;
};

struct FiltrationReport {
    int m = 0, N = 0;
    int target_rank = 0;
    std::vector<FamilyRank> families;
    double max_containment_residual = 0;  // over all ordered family pairs
    bool pass = false;
};

// The ring of stable class functions at one fixed q: owns the counting
// engine, the character tables, cuspidal data and the mu <-> Irr(G_m)
// identification, and provides evaluation, basis changes and the
// verification suites.
class StableRing {
public:
    explicit StableRing(const Fq& F, RingOptions opt = {});

    const Fq& field() const { return F_; }
    Counting& counting() { return cnt_; }
    CharTables& tables() { return tabs_; }
    const RingOptions& options() const { return opt_; }

    struct Cuspidal {
        int row;  // row in the character table of G_n
        int dim;
    };
    const std::vector<Cuspidal>& cuspidals(int n);

    // identification of mu with a character-table row of G_{||mu||}
    int row_of_mu(const MuVec& mu);
    MuVec mu_of_row(int m, int row);
    std::vector<MuVec> all_muvecs(int m);  // every mu with ||mu|| = m

    // class function of the stable irreducible character on G_N
    std::vector<cplx> stable_irr_char(const MuVec& mu, int N);

    std::vector<cplx> evaluate_label(const BasisLabel& label, int N);
    std::vector<cplx> evaluate(const StableFunction& f, int N);

    StableFunction change_basis(const StableFunction& f, BasisTag target);

    cplx expectation(const StableFunction& f, int N);
    cplx expectation(const std::vector<cplx>& values, int N);
    cplx inner_product(const StableFunction& f1, const StableFunction& f2, int N);

    FiltrationReport verify_filtration_equality(int m, int N);

    // h with h(q^N) = dim of the stable irreducible at mu, exact rational
    // coefficients, degree ||mu||; verified on a held-out N
    std::vector<Rat> dim_polynomial(const MuVec& mu);

    // convenience class functions
    std::vector<cplx> fix_function(int N);    // btil of (1) in G_1
    std::vector<cplx> chi_projective(int N);  // the irreducible from the projective action

    int identity_class_index(int N);

private:
    const Fq& F_;
    RingOptions opt_;
    Counting cnt_;
    CharTables tabs_;
    std::map<int, std::vector<Cuspidal>> cusp_;
    std::map<int, std::map<MuVec, int>> mu_to_row_;
    std::map<int, std::vector<MuVec>> row_to_mu_;
    std::map<std::pair<std::string, int>, std::vector<cplx>> irr_cache_;
    std::map<std::string, StableFunction> rfr_in_R_;
    std::map<std::string, StableFunction> i_in_P_;

    void build_identification(int m);
    StableFunction step_toward(const StableFunction& f, BasisTag next);
};

}  // namespace scfq
