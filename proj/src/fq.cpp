#include "scfq/fq.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace scfq {

namespace {

struct ConwayEntry {
    int p, e;
    std::vector<int> mod;  // low-to-high, length e+1
};

// Conway polynomials for the extension fields with q <= 16.
const ConwayEntry kConway[] = {
    {2, 2, {1, 1, 1}},        // x^2 + x + 1
    {2, 3, {1, 1, 0, 1}},     // x^3 + x + 1
    {2, 4, {1, 1, 0, 0, 1}},  // x^4 + x + 1
    {3, 2, {2, 2, 1}},        // x^2 + 2x + 2
};

int smallest_prime_factor(int n) {
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;
}

int primitive_root_mod_p(int p) {
    if (p == 2) return 1;
    auto order = [p](int a) {
        int o = 1;
        long long x = a;
        while (x != 1) {
            x = x * a % p;
            ++o;
        }
        return o;
    };
    for (int a = 2; a < p; ++a)
        if (order(a) == p - 1) return a;
    return 1;  // unreachable for prime p
}

}  // namespace

Fq::Fq(int q) : q_(q) {
    if (q < 2 || q > 16) throw std::invalid_argument("field size must be a prime power in [2,16]");
    p_ = smallest_prime_factor(q);
    e_ = 0;
    int t = q;
    while (t > 1) {
        if (t % p_ != 0) throw std::invalid_argument("field size is not a prime power");
        t /= p_;
        ++e_;
    }

    if (e_ == 1) {
        modulus_ = {0, 1};  // unused for prime fields
        gen_ = Scalar(primitive_root_mod_p(p_));
    } else {
        const ConwayEntry* found = nullptr;
        for (const auto& ce : kConway)
            if (ce.p == p_ && ce.e == e_) found = &ce;
        if (!found) throw std::invalid_argument("no modulus on record for this field");
        modulus_ = found->mod;
        gen_ = Scalar(p_);  // the class of x, primitive for Conway moduli
    }

    // residue arithmetic on packed coefficient vectors
    auto unpack = [this](int a) {
        std::vector<int> c(e_);
        for (int i = 0; i < e_; ++i) {
            c[i] = a % p_;
            a /= p_;
        }
        return c;
    };
    auto pack = [this](const std::vector<int>& c) {
        int a = 0;
        for (int i = e_ - 1; i >= 0; --i) a = a * p_ + c[i];
        return a;
    };

    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        auto ca = unpack(a);
        std::vector<int> nc(e_);
        for (int i = 0; i < e_; ++i) nc[i] = (p_ - ca[i]) % p_;
        neg_[a] = Scalar(pack(nc));
        for (int b = 0; b < q_; ++b) {
            auto cb = unpack(b);
            std::vector<int> s(e_);
            for (int i = 0; i < e_; ++i) s[i] = (ca[i] + cb[i]) % p_;
            add_[idx(Scalar(a), Scalar(b))] = Scalar(pack(s));

            // schoolbook product, then reduce by the modulus
            std::vector<int> prod(2 * e_ - 1, 0);
            for (int i = 0; i < e_; ++i)
                for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
            for (int d = int(prod.size()) - 1; d >= e_; --d) {
                int c = prod[d];
                if (c == 0) continue;
                prod[d] = 0;
                for (int i = 0; i < e_; ++i)
                    prod[d - e_ + i] = ((prod[d - e_ + i] - c * modulus_[i]) % p_ + p_ * p_) % p_;
            }
            prod.resize(e_);
            mul_[idx(Scalar(a), Scalar(b))] = Scalar(pack(prod));
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[idx(Scalar(a), Scalar(b))] == 1) inv_[a] = Scalar(b);

    log_.assign(q_, 0);
    Scalar x = 1;
    for (int k = 0; k < q_ - 1; ++k) {
        log_[x] = k;
        x = mul(x, gen_);
    }
}

Scalar Fq::pow(Scalar a, long long n) const {
    if (a == 0) {
        if (n < 0) throw DivisionByZero{};
        return n == 0 ? one() : zero();
    }
    long long m = n % (q_ - 1);
    if (m < 0) m += q_ - 1;
    Scalar r = 1, b = a;
    while (m > 0) {
        if (m & 1) r = mul(r, b);
        b = mul(b, b);
        m >>= 1;
    }
    return r;
}

std::vector<int> Fq::coeffs(Scalar a) const {
    std::vector<int> c(e_);
    int v = a;
    for (int i = 0; i < e_; ++i) {
        c[i] = v % p_;
        v /= p_;
    }
    return c;
}

Scalar Fq::from_coeffs(const std::vector<int>& c) const {
    int a = 0;
    for (int i = e_ - 1; i >= 0; --i) {
        int ci = i < int(c.size()) ? c[i] : 0;
        if (ci < 0 || ci >= p_) throw ParseError("scalar coefficient out of range");
        a = a * p_ + ci;
    }
    return Scalar(a);
}

std::vector<Scalar> Fq::elements() const {
    std::vector<Scalar> out(q_);
    for (int a = 0; a < q_; ++a) out[a] = Scalar(a);
    return out;
}

std::vector<Scalar> Fq::nonzero_elements() const {
    std::vector<Scalar> out(q_ - 1);
    for (int a = 1; a < q_; ++a) out[a - 1] = Scalar(a);
    return out;
}

std::string Fq::to_string(Scalar a) const {
    if (e_ == 1) return std::to_string(int(a));
    if (a == 0) return "0";
    int k = log_[a];
    if (k == 0) return "1";
    if (k == 1) return "g";
    return "g^" + std::to_string(k);
}

Scalar Fq::parse(const std::string& text) const {
    std::string s;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) s.push_back(c);
    if (s.empty()) throw ParseError("empty scalar");
    if (s.front() == '[') {
        if (s.back() != ']') throw ParseError("unterminated scalar tuple");
        std::vector<int> c;
        std::stringstream ss(s.substr(1, s.size() - 2));
        std::string tok;
        while (std::getline(ss, tok, ',')) c.push_back(std::stoi(tok));
        if (int(c.size()) > e_) throw ParseError("scalar tuple longer than extension degree");
        return from_coeffs(c);
    }
    if (s[0] == 'g') {
        long long k = 1;
        if (s.size() > 1) {
            if (s[1] != '^') throw ParseError("bad scalar: " + text);
            k = std::stoll(s.substr(2));
        }
        return pow(gen_, k);
    }
    long long v = std::stoll(s);
    v %= p_;
    if (v < 0) v += p_;
    // integers embed through the prime subfield
    Scalar r = 0;
    for (long long i = 0; i < v; ++i) r = add(r, one());
    return r;
}

}  // namespace scfq
