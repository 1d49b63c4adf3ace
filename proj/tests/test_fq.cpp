#include "doctest.h"

#include <random>

#include "scfq/fq.hpp"
#include "scfq/poly.hpp"

using namespace scfq;

TEST_SUITE_BEGIN("fq");

TEST_CASE("field axioms, exhaustive for q <= 9") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        Fq F(q);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                CHECK(F.add(Scalar(a), Scalar(b)) == F.add(Scalar(b), Scalar(a)));
                CHECK(F.mul(Scalar(a), Scalar(b)) == F.mul(Scalar(b), Scalar(a)));
                for (int c = 0; c < q; ++c) {
                    CHECK(F.add(F.add(Scalar(a), Scalar(b)), Scalar(c)) ==
                          F.add(Scalar(a), F.add(Scalar(b), Scalar(c))));
                    CHECK(F.mul(F.mul(Scalar(a), Scalar(b)), Scalar(c)) ==
                          F.mul(Scalar(a), F.mul(Scalar(b), Scalar(c))));
                    CHECK(F.mul(Scalar(a), F.add(Scalar(b), Scalar(c))) ==
                          F.add(F.mul(Scalar(a), Scalar(b)), F.mul(Scalar(a), Scalar(c))));
                }
            }
        for (int a = 1; a < q; ++a) {
            CHECK(F.mul(Scalar(a), F.inv(Scalar(a))) == F.one());
        }
        CHECK_THROWS_AS(F.inv(0), DivisionByZero);
    }
}

TEST_CASE("small field facts") {
    Fq F2(2);
    CHECK(F2.add(1, 1) == 0);

    Fq F3(3);
    CHECK(F3.mul(2, 2) == 1);

    // q = 4 with modulus x^2+x+1: x*x = x+1
    Fq F4(4);
    Scalar x = F4.gen();
    CHECK(F4.mul(x, x) == F4.add(x, F4.one()));
}

TEST_CASE("generator is primitive") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        Fq F(q);
        Scalar g = F.gen();
        Scalar x = F.one();
        int order = 0;
        do {
            x = F.mul(x, g);
            ++order;
        } while (x != F.one());
        CHECK(order == q - 1);
    }
}

TEST_CASE("scalar text round trip") {
    for (int q : {2, 5, 4, 9}) {
        Fq F(q);
        for (auto a : F.elements()) {
            CHECK(F.parse(F.to_string(a)) == a);
        }
    }
    Fq F9(9);
    CHECK(F9.parse("[1,2]") == F9.from_coeffs({1, 2}));
    CHECK(F9.parse("g^8") == F9.one());
}

TEST_CASE("irreducibles_up_to matches the stated lists") {
    Fq F2(2);
    auto l1 = irreducibles_up_to(F2, 1, true);
    REQUIRE(l1.size() == 1);
    CHECK(poly_to_string(F2, l1[0]) == "x+1");

    auto l2 = irreducibles_up_to(F2, 2, true);
    REQUIRE(l2.size() == 2);
    CHECK(poly_to_string(F2, l2[0]) == "x+1");
    CHECK(poly_to_string(F2, l2[1]) == "x^2+x+1");

    Fq F3(3);
    auto l3 = irreducibles_up_to(F3, 1, true);
    REQUIRE(l3.size() == 2);
    CHECK(poly_to_string(F3, l3[0]) == "x+1");
    CHECK(poly_to_string(F3, l3[1]) == "x+2");
}

TEST_CASE("irreducible counts match necklace counting") {
    // (1/d) sum_{k|d} moebius(k) q^{d/k} for d <= 4
    auto necklace = [](long long q, int d) {
        auto ipow = [](long long b, int e) {
            long long r = 1;
            while (e--) r *= b;
            return r;
        };
        switch (d) {
            case 1: return ipow(q, 1);
            case 2: return (ipow(q, 2) - q) / 2;
            case 3: return (ipow(q, 3) - q) / 3;
            case 4: return (ipow(q, 4) - ipow(q, 2)) / 4;
        }
        return 0LL;
    };
    for (int q : {2, 3}) {
        Fq F(q);
        auto all = irreducibles_up_to(F, 4, false);
        for (int d = 1; d <= 4; ++d) {
            long long cnt = 0;
            for (const auto& f : all)
                if (deg(f) == d) ++cnt;
            CHECK(cnt == necklace(q, d));
        }
    }
}

TEST_CASE("factor_monic examples") {
    Fq F3(3);
    // x^2 - 1 = (x+1)(x+2) over F_3
    Poly f = poly_parse(F3, "x^2+2");
    auto fac = factor_monic(F3, f);
    REQUIRE(fac.size() == 2);
    CHECK(poly_to_string(F3, fac[0].first) == "x+1");
    CHECK(fac[0].second == 1);
    CHECK(poly_to_string(F3, fac[1].first) == "x+2");
    CHECK(fac[1].second == 1);

    Fq F2(2);
    auto fac2 = factor_monic(F2, poly_parse(F2, "x^2+x+1"));
    REQUIRE(fac2.size() == 1);
    CHECK(fac2[0].second == 1);
    CHECK(poly_to_string(F2, fac2[0].first) == "x^2+x+1");

    auto fac3 = factor_monic(F2, poly_parse(F2, "x^4+x^2"));
    REQUIRE(fac3.size() == 2);
    CHECK(poly_to_string(F2, fac3[0].first) == "x");
    CHECK(fac3[0].second == 2);
    CHECK(poly_to_string(F2, fac3[1].first) == "x+1");
    CHECK(fac3[1].second == 2);
}

TEST_CASE("factorizations re-multiply to the input") {
    std::mt19937 rng(7);
    for (int q : {2, 3, 4, 5}) {
        Fq F(q);
        for (int trial = 0; trial < 40; ++trial) {
            int d = 1 + int(rng() % 6);
            Poly f(d + 1, 0);
            for (int i = 0; i < d; ++i) f[i] = Scalar(rng() % q);
            f[d] = 1;
            auto fac = factor_monic(F, f);
            Poly prod = poly_const(F, F.one());
            for (const auto& [g, mult] : fac)
                for (int i = 0; i < mult; ++i) prod = poly_mul(F, prod, g);
            CHECK(prod == f);
            for (const auto& [g, mult] : fac) CHECK(is_irreducible(F, g));
        }
    }
}

TEST_CASE("polynomial text round trip") {
    Fq F4(4);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int d = int(rng() % 5);
        Poly f(d + 1, 0);
        for (int i = 0; i <= d; ++i) f[i] = Scalar(rng() % 4);
        while (!f.empty() && f.back() == 0) f.pop_back();
        CHECK(poly_parse(F4, poly_to_string(F4, f)) == f);
    }
    Fq F3(3);
    CHECK(poly_parse(F3, "x^2 - 1") == poly_parse(F3, "x^2+2"));

    // extension fields with nontrivial coefficients
    for (int q : {8, 9, 16}) {
        Fq F(q);
        std::mt19937 rng(q);
        for (int trial = 0; trial < 25; ++trial) {
            int d = int(rng() % 4);
            Poly f(d + 1, 0);
            for (int i = 0; i <= d; ++i) f[i] = Scalar(rng() % q);
            while (!f.empty() && f.back() == 0) f.pop_back();
            CHECK(poly_parse(F, poly_to_string(F, f)) == f);
        }
    }
}

TEST_SUITE_END();
