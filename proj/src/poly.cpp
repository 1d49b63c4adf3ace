#include "scfq/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace scfq {

namespace {
void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
}  // namespace

Poly poly_x(const Fq&) { return Poly{0, 1}; }

Poly poly_const(const Fq&, Scalar c) { return c == 0 ? Poly{} : Poly{c}; }

Poly poly_add(const Fq& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        Scalar x = i < a.size() ? a[i] : Scalar(0);
        Scalar y = i < b.size() ? b[i] : Scalar(0);
        r[i] = F.add(x, y);
    }
    trim(r);
    return r;
}

Poly poly_sub(const Fq& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        Scalar x = i < a.size() ? a[i] : Scalar(0);
        Scalar y = i < b.size() ? b[i] : Scalar(0);
        r[i] = F.sub(x, y);
    }
    trim(r);
    return r;
}

Poly poly_mul(const Fq& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

Poly poly_scale(const Fq& F, Scalar c, const Poly& a) {
    if (c == 0) return {};
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
    trim(r);
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Fq& F, const Poly& a, const Poly& b) {
    if (b.empty()) throw DivisionByZero{};
    Poly rem = a;
    if (deg(a) < deg(b)) return {Poly{}, rem};
    Poly quo(deg(a) - deg(b) + 1, 0);
    Scalar lead_inv = F.inv(b.back());
    for (int d = deg(rem); d >= deg(b); --d) {
        if (int(rem.size()) - 1 != d || rem[d] == 0) continue;
        Scalar c = F.mul(rem[d], lead_inv);
        quo[d - deg(b)] = c;
        for (int i = 0; i <= deg(b); ++i)
            rem[d - deg(b) + i] = F.sub(rem[d - deg(b) + i], F.mul(c, b[i]));
        trim(rem);
    }
    trim(quo);
    return {quo, rem};
}

Poly poly_pow(const Fq& F, const Poly& a, int n) {
    Poly r = poly_const(F, F.one());
    for (int i = 0; i < n; ++i) r = poly_mul(F, r, a);
    return r;
}

Scalar poly_eval(const Fq& F, const Poly& f, Scalar x) {
    Scalar r = 0;
    for (int i = deg(f); i >= 0; --i) r = F.add(F.mul(r, x), f[i]);
    return r;
}

bool poly_is_monic(const Fq&, const Poly& f) { return !f.empty() && f.back() == 1; }

Poly poly_make_monic(const Fq& F, const Poly& f) {
    if (f.empty()) return f;
    return poly_scale(F, F.inv(f.back()), f);
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

bool is_irreducible(const Fq& F, const Poly& f) {
    int d = deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    auto divisors = irreducibles_up_to(F, d / 2, false);
    for (const auto& g : divisors)
        if (poly_divmod(F, f, g).second.empty()) return false;
    return true;
}

std::vector<Poly> irreducibles_up_to(const Fq& F, int d, bool exclude_x) {
    std::vector<Poly> out;
    for (int k = 1; k <= d; ++k) {
        // monic degree-k candidates in coefficient-tuple order
        long long count = 1;
        for (int i = 0; i < k; ++i) count *= F.q();
        for (long long code = 0; code < count; ++code) {
            Poly f(k + 1, 0);
            long long c = code;
            for (int i = 0; i < k; ++i) {
                f[i] = Scalar(c % F.q());
                c /= F.q();
            }
            f[k] = 1;
            bool ok = true;
            for (const auto& g : out) {
                if (2 * deg(g) > k) break;
                if (poly_divmod(F, f, g).second.empty()) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.push_back(f);
        }
    }
    if (exclude_x)
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const Poly& f) { return deg(f) == 1 && f[0] == 0; }),
                  out.end());
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

std::vector<std::pair<Poly, int>> factor_monic(const Fq& F, const Poly& f) {
    if (deg(f) < 1) throw std::invalid_argument("factor_monic needs deg >= 1");
    if (!poly_is_monic(F, f)) throw std::invalid_argument("factor_monic needs a monic input");
    std::vector<std::pair<Poly, int>> out;
    Poly rest = f;
    auto small = irreducibles_up_to(F, deg(f) / 2, false);
    for (const auto& g : small) {
        if (deg(rest) < deg(g)) break;
        int mult = 0;
        while (true) {
            auto [q, r] = poly_divmod(F, rest, g);
            if (!r.empty()) break;
            rest = q;
            ++mult;
        }
        if (mult > 0) out.emplace_back(g, mult);
    }
    // anything left has no factor of low degree, hence is irreducible
    if (deg(rest) >= 1) out.emplace_back(rest, 1);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

std::string poly_to_string(const Fq& F, const Poly& f) {
    if (f.empty()) return "0";
    std::string out;
    for (int i = deg(f); i >= 0; --i) {
        if (f[i] == 0) continue;
        if (!out.empty()) out += "+";
        std::string coef = F.to_string(f[i]);
        if (i == 0) {
            out += coef;
        } else {
            if (f[i] != 1) out += coef + "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Poly poly_parse(const Fq& F, const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) s.push_back(c);
    if (s.empty()) throw ParseError("empty polynomial");
    // split into signed terms
    Poly out;
    size_t i = 0;
    while (i < s.size()) {
        bool negative = false;
        if (s[i] == '+' || s[i] == '-') {
            negative = s[i] == '-';
            ++i;
        }
        size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') {
            // keep exponent signs like g^-1 out of scope: exponents are unsigned here
            ++j;
        }
        std::string term = s.substr(i, j - i);
        if (term.empty()) throw ParseError("bad polynomial: " + text);
        i = j;

        Scalar coef = F.one();
        int expo = 0;
        size_t xpos = term.find('x');
        if (xpos == std::string::npos) {
            coef = F.parse(term);
        } else {
            std::string chead = term.substr(0, xpos);
            if (!chead.empty()) {
                if (chead.back() == '*') chead.pop_back();
                if (!chead.empty()) coef = F.parse(chead);
            }
            expo = 1;
            std::string tail = term.substr(xpos + 1);
            if (!tail.empty()) {
                if (tail[0] != '^') throw ParseError("bad polynomial term: " + term);
                expo = std::stoi(tail.substr(1));
                if (expo < 0) throw ParseError("negative exponent in polynomial");
            }
        }
        if (negative) coef = F.neg(coef);
        if (int(out.size()) <= expo) out.resize(expo + 1, 0);
        out[expo] = F.add(out[expo], coef);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

}  // namespace scfq
