#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scfq/errors.hpp"

namespace scfq {

// Element of F_q, stored as a canonical code in [0, q).  For q = p^e the code
// packs the residue polynomial c_0 + c_1 x + ... + c_{e-1} x^{e-1} mod the
// field modulus as c_0 + c_1 p + ... + c_{e-1} p^{e-1}.  Equality of codes is
// equality of elements.
using Scalar = std::uint8_t;

// Arithmetic context for one finite field F_q, q = p^e <= 16.  Extension
// fields use a fixed table of Conway moduli so labels are reproducible across
// runs.  All operations are table lookups; the object is immutable after
// construction and safe to share between threads.
class Fq {
public:
    explicit Fq(int q);

    int q() const { return q_; }
    int p() const { return p_; }
    int e() const { return e_; }

    // modulus coefficients, low-to-high, length e+1, leading 1 (primes: x - x? not used)
    const std::vector<int>& modulus() const { return modulus_; }

    Scalar zero() const { return 0; }
    Scalar one() const { return 1; }
    // residue class of x; for prime fields a fixed primitive root
    Scalar gen() const { return gen_; }

    Scalar add(Scalar a, Scalar b) const { return add_[idx(a, b)]; }
    Scalar sub(Scalar a, Scalar b) const { return add_[idx(a, neg_[b])]; }
    Scalar neg(Scalar a) const { return neg_[a]; }
    Scalar mul(Scalar a, Scalar b) const { return mul_[idx(a, b)]; }
    Scalar inv(Scalar a) const {
        if (a == 0) throw DivisionByZero{};
        return inv_[a];
    }
    Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
    Scalar pow(Scalar a, long long n) const;

    // coefficient tuple of the residue polynomial, length e, low-to-high
    std::vector<int> coeffs(Scalar a) const;
    Scalar from_coeffs(const std::vector<int>& c) const;

    // all field elements in canonical (code) order
    std::vector<Scalar> elements() const;
    std::vector<Scalar> nonzero_elements() const;

    // "0", "1", "2", ... for prime fields; "0", "1", "g", "g^2", ... otherwise
    std::string to_string(Scalar a) const;
    // accepts the to_string forms plus coefficient tuples "[c0,c1,...]"
    Scalar parse(const std::string& text) const;

private:
    int idx(Scalar a, Scalar b) const { return int(a) * q_ + int(b); }

    int q_, p_, e_;
    Scalar gen_;
    std::vector<int> modulus_;
    std::vector<Scalar> add_, mul_, neg_, inv_;
    std::vector<int> log_;  // discrete log base gen_, log_[0] unused
};

}  // namespace scfq
