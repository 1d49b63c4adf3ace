#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "scfq/classlabel.hpp"
#include "scfq/groupenum.hpp"
#include "scfq/mat.hpp"

using namespace scfq;

TEST_SUITE_BEGIN("mat");

namespace {

MatFq random_invertible(const Fq& F, int n, std::mt19937& rng) {
    while (true) {
        MatFq g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g.at(i, j) = Scalar(rng() % F.q());
        if (mat_invertible(F, g)) return g;
    }
}

}  // namespace

TEST_CASE("rank and left kernel") {
    Fq F2(2);
    auto [r0, k0] = rank_kernel(F2, MatFq::identity(3));
    CHECK(r0 == 3);
    CHECK(k0.rows() == 0);

    auto [r1, k1] = rank_kernel(F2, MatFq::zero(2, 3));
    CHECK(r1 == 0);
    CHECK(k1.rows() == 2);  // all of F_q^2

    Fq F3(3);
    MatFq m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 1;
    // det = 1 - 4 = 0 mod 3
    CHECK(mat_rank(F3, m) == 1);
    auto [r2, k2] = rank_kernel(F3, m);
    CHECK(r2 + k2.rows() == 2);
    for (int i = 0; i < k2.rows(); ++i) {
        std::vector<Scalar> v(2);
        v[0] = k2.at(i, 0);
        v[1] = k2.at(i, 1);
        auto prod = row_times_mat(F3, v, m);
        CHECK(prod == std::vector<Scalar>{0, 0});
    }
}

TEST_CASE("rank + kernel dimension = rows, random") {
    std::mt19937 rng(5);
    for (int q : {2, 3, 4}) {
        Fq F(q);
        for (int trial = 0; trial < 25; ++trial) {
            int rows = 1 + int(rng() % 4), cols = 1 + int(rng() % 4);
            MatFq A(rows, cols);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) A.at(i, j) = Scalar(rng() % q);
            auto [r, ker] = rank_kernel(F, A);
            CHECK(r + ker.rows() == rows);
            for (int i = 0; i < ker.rows(); ++i) {
                std::vector<Scalar> v(rows);
                for (int j = 0; j < rows; ++j) v[j] = ker.at(i, j);
                auto prod = row_times_mat(F, v, A);
                CHECK(std::count(prod.begin(), prod.end(), 0) == cols);
            }
        }
    }
}

TEST_CASE("inverse") {
    std::mt19937 rng(17);
    for (int q : {2, 3, 5}) {
        Fq F(q);
        for (int trial = 0; trial < 10; ++trial) {
            int n = 1 + int(rng() % 4);
            MatFq g = random_invertible(F, n, rng);
            CHECK(mat_mul(F, g, mat_inverse(F, g)) == MatFq::identity(n));
        }
    }
    Fq F2(2);
    CHECK_THROWS_AS(mat_inverse(F2, MatFq::zero(2, 2)), SingularMatrix);
}

TEST_CASE("singular inputs are rejected") {
    Fq F2(2);
    CHECK_THROWS_AS(class_label(F2, MatFq::zero(2, 2)), SingularMatrix);
    MatFq rect(2, 3);
    CHECK_THROWS_AS(class_label(F2, rect), SingularMatrix);
}

TEST_CASE("class labels of basic matrices") {
    Fq F2(2);
    // identity: {x+1 -> (1,...,1)}
    auto L = class_label(F2, MatFq::identity(3));
    REQUIRE(L.parts.size() == 1);
    CHECK(poly_to_string(F2, L.parts[0].first) == "x+1");
    CHECK(L.parts[0].second == Partition{1, 1, 1});

    // single Jordan block with eigenvalue 1: {x+1 -> (2)}
    auto L2 = class_label(F2, jordan_block(F2, 1, 2));
    CHECK(label_to_string(F2, L2) == "{x+1:2}");

    // companion of x^2+x+1: irreducible char poly
    auto L3 = class_label(F2, companion(F2, poly_parse(F2, "x^2+x+1")));
    CHECK(label_to_string(F2, L3) == "{x^2+x+1:1}");
}

TEST_CASE("representative round trips through class_label") {
    for (int q : {2, 3}) {
        Fq F(q);
        for (int N = 0; N <= 4; ++N) {
            if (q == 3 && N > 3) continue;
            for (const auto& L : enumerate_classes(F, N)) {
                MatFq rep = representative(F, L);
                CHECK(rep.rows() == N);
                CHECK(class_label(F, rep) == L);
            }
        }
    }
}

TEST_CASE("generalized Jordan block layout: companion blocks, corner-one couplings") {
    Fq F2(2);
    // {x^2+x+1 -> (2)}: 4x4, two copies of the 2x2 companion on the diagonal,
    // a single 1 in the upper-right corner of the coupling block below
    ClassLabel L;
    L.n = 4;
    L.parts.emplace_back(poly_parse(F2, "x^2+x+1"), Partition{2});
    MatFq B = representative(F2, L);
    REQUIRE(B.rows() == 4);
    MatFq C = companion(F2, poly_parse(F2, "x^2+x+1"));
    CHECK(C.at(0, 1) == 1);  // -a_0 = 1
    CHECK(C.at(1, 0) == 1);
    CHECK(C.at(1, 1) == 1);  // -a_1 = 1
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) CHECK(B.at(2 * k + i, 2 * k + j) == C.at(i, j));
    // coupling block: sole nonzero entry in its upper right corner
    CHECK(B.at(2, 1) == 1);
    CHECK(B.at(2, 0) == 0);
    CHECK(B.at(3, 0) == 0);
    CHECK(B.at(3, 1) == 0);
    // upper-right block is zero
    for (int i = 0; i < 2; ++i)
        for (int j = 2; j < 4; ++j) CHECK(B.at(i, j) == 0);
    CHECK(class_label(F2, B) == L);
}

TEST_CASE("label serialization round trip") {
    for (int q : {2, 3}) {
        Fq F(q);
        for (int N = 0; N <= 3; ++N)
            for (const auto& L : enumerate_classes(F, N)) {
                auto text = label_to_string(F, L);
                auto back = label_parse(F, text);
                CHECK(back == L);
                CHECK(label_to_string(F, back) == text);
            }
    }
}

TEST_CASE("class label is conjugation invariant") {
    std::mt19937 rng(23);
    for (int q : {2, 3}) {
        Fq F(q);
        for (int N = 1; N <= 4; ++N) {
            if (q == 3 && N > 3) continue;
            for (int trial = 0; trial < 12; ++trial) {
                MatFq g = random_invertible(F, N, rng);
                MatFq x = random_invertible(F, N, rng);
                MatFq conj = mat_mul(F, mat_mul(F, x, g), mat_inverse(F, x));
                CHECK(class_label(F, conj) == class_label(F, g));
            }
        }
    }
}

TEST_CASE("class counts") {
    Fq F2(2);
    auto c22 = enumerate_classes(F2, 2);
    REQUIRE(c22.size() == 3);  // GL_2(2) = S_3
    std::set<std::string> names;
    for (const auto& L : c22) names.insert(label_to_string(F2, L));
    CHECK(names.count("{x+1:1,1}") == 1);
    CHECK(names.count("{x+1:2}") == 1);
    CHECK(names.count("{x^2+x+1:1}") == 1);

    Fq F3(3);
    CHECK(enumerate_classes(F3, 2).size() == 8);
    CHECK(enumerate_classes(F2, 0).size() == 1);  // the empty label
}

TEST_CASE("class equation") {
    for (int q : {2, 3}) {
        Fq F(q);
        int maxN = q == 2 ? 4 : 3;
        for (int N = 1; N <= maxN; ++N) {
            i64 total = 0;
            for (const auto& L : enumerate_classes(F, N)) total += class_size(F, L);
            CHECK(total == group_order(F, N));
        }
    }
}

TEST_CASE("centralizer orders against brute force") {
    // enumerate the centralizer directly in small groups
    for (int q : {2, 3}) {
        Fq F(q);
        int maxN = q == 2 ? 3 : 2;
        for (int N = 1; N <= maxN; ++N) {
            auto G = enumerate_group(F, N, 25000);
            for (const auto& L : enumerate_classes(F, N)) {
                MatFq rep = representative(F, L);
                i64 cnt = 0;
                for (const auto& x : G)
                    if (mat_mul(F, x, rep) == mat_mul(F, rep, x)) ++cnt;
                CHECK(cnt == centralizer_order(F, L));
            }
        }
    }
    Fq F2(2);
    CHECK(centralizer_order(F2, label_parse(F2, "{x+1:2}")) == 2);
    CHECK(centralizer_order(F2, label_parse(F2, "{x+1:1,1,1}")) == group_order(F2, 3));
}

TEST_CASE("class count matches brute-force orbit counting") {
    struct Case {
        int q, N;
    };
    for (auto [q, N] : {Case{2, 2}, Case{2, 3}, Case{2, 4}, Case{3, 2}, Case{3, 3},
                        Case{4, 2}, Case{5, 2}}) {
        Fq F(q);
        if (group_order(F, N) > 25000) continue;
        auto G = enumerate_group(F, N, 25000);
        std::map<std::string, i64> orbit_sizes;
        for (const auto& g : G) orbit_sizes[label_to_string(F, class_label(F, g))] += 1;
        auto classes = enumerate_classes(F, N);
        CHECK(orbit_sizes.size() == classes.size());
        for (const auto& L : classes) {
            auto it = orbit_sizes.find(label_to_string(F, L));
            REQUIRE(it != orbit_sizes.end());
            CHECK(it->second == class_size(F, L));
        }
    }
}

TEST_SUITE_END();
