#pragma once

#include <string>
#include <utility>
#include <vector>

#include "scfq/fq.hpp"

namespace scfq {

// Univariate polynomial over F_q: coefficients low-to-high, trailing zeros
// trimmed.  The zero polynomial is the empty vector.  Polynomials are plain
// values; the field context is passed to every operation.
using Poly = std::vector<Scalar>;

inline int deg(const Poly& f) { return int(f.size()) - 1; }
inline bool is_zero(const Poly& f) { return f.empty(); }

Poly poly_x(const Fq& F);                       // the monomial x
Poly poly_const(const Fq& F, Scalar c);
Poly poly_add(const Fq& F, const Poly& a, const Poly& b);
Poly poly_sub(const Fq& F, const Poly& a, const Poly& b);
Poly poly_mul(const Fq& F, const Poly& a, const Poly& b);
Poly poly_scale(const Fq& F, Scalar c, const Poly& a);
// division with remainder; b must be nonzero
std::pair<Poly, Poly> poly_divmod(const Fq& F, const Poly& a, const Poly& b);
Poly poly_pow(const Fq& F, const Poly& a, int n);
Scalar poly_eval(const Fq& F, const Poly& f, Scalar x);
bool poly_is_monic(const Fq& F, const Poly& f);
Poly poly_make_monic(const Fq& F, const Poly& f);

// total order used wherever polynomial ties must break: by degree, then by
// the coefficient tuple read constant-term first
bool poly_less(const Poly& a, const Poly& b);

bool is_irreducible(const Fq& F, const Poly& f);

// all monic irreducibles of degree <= d, in poly_less order; "x" is the
// unique monic linear polynomial with zero constant term
std::vector<Poly> irreducibles_up_to(const Fq& F, int d, bool exclude_x);

// multiset of (irreducible factor, multiplicity), factors in poly_less order;
// requires deg f >= 1 and f monic
std::vector<std::pair<Poly, int>> factor_monic(const Fq& F, const Poly& f);

// text form "x^2+x+1"; extension-field coefficients print as g-powers,
// e.g. "x^2+g*x+g^2"
std::string poly_to_string(const Fq& F, const Poly& f);
Poly poly_parse(const Fq& F, const std::string& text);

}  // namespace scfq
