#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "scfq/rational.hpp"

namespace scfq {

// Integer polynomial in the field-size variable q, low-to-high, trailing
// zeros trimmed.
struct PolyQ {
    std::vector<long long> coeffs;

    static PolyQ constant(long long c);
    bool is_zero() const { return coeffs.empty(); }
    long long eval(long long q) const;
    std::string to_string() const;  // e.g. "q^2-q+1"

    friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.coeffs == b.coeffs; }
};

// Monomial exponents in x_1..x_t (index 0 is x_1); trailing zeros trimmed so
// equal monomials compare equal.
using Monomial = std::vector<int>;

// Polynomial in x_1..x_t with PolyQ coefficients; houses the universal
// polynomials expressing full-rank Jordan counts in the single-block ones.
struct MultiPolyQ {
    std::map<Monomial, PolyQ> terms;

    void add(const Monomial& mono, const PolyQ& c);
    int degree() const;  // total degree in the x variables
    bool operator==(const MultiPolyQ& o) const { return terms == o.terms; }

    // specialize q, keeping the x variables
    MultiPolyQ at_q(long long q) const;
    // evaluate at integer points, exact
    __int128 eval(long long q, const std::vector<long long>& xs) const;

    // "x1^2 - (q-1)*x1" style; monomials in graded reverse-lex order
    std::string to_string() const;
};

MultiPolyQ multipoly_one();
MultiPolyQ multipoly_var(int index_one_based);  // x_t
MultiPolyQ multipoly_mul(const MultiPolyQ& a, const MultiPolyQ& b);
MultiPolyQ multipoly_add(const MultiPolyQ& a, const MultiPolyQ& b);
MultiPolyQ multipoly_sub(const MultiPolyQ& a, const MultiPolyQ& b);

}  // namespace scfq
