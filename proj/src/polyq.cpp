#include "scfq/polyq.hpp"

#include <algorithm>

namespace scfq {

namespace {
void trim(std::vector<long long>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}
void trim_mono(Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}
}  // namespace

PolyQ PolyQ::constant(long long c) {
    PolyQ p;
    if (c != 0) p.coeffs = {c};
    return p;
}

long long PolyQ::eval(long long q) const {
    long long r = 0;
    for (size_t i = coeffs.size(); i-- > 0;) r = r * q + coeffs[i];
    return r;
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
    PolyQ r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (size_t i = 0; i < r.coeffs.size(); ++i) {
        if (i < a.coeffs.size()) r.coeffs[i] += a.coeffs[i];
        if (i < b.coeffs.size()) r.coeffs[i] += b.coeffs[i];
    }
    trim(r.coeffs);
    return r;
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) {
    PolyQ r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (size_t i = 0; i < r.coeffs.size(); ++i) {
        if (i < a.coeffs.size()) r.coeffs[i] += a.coeffs[i];
        if (i < b.coeffs.size()) r.coeffs[i] -= b.coeffs[i];
    }
    trim(r.coeffs);
    return r;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    PolyQ r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    trim(r.coeffs);
    return r;
}

std::string PolyQ::to_string() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (size_t i = coeffs.size(); i-- > 0;) {
        long long c = coeffs[i];
        if (c == 0) continue;
        std::string term;
        long long mag = c < 0 ? -c : c;
        if (i == 0) {
            term = std::to_string(mag);
        } else {
            if (mag != 1) term = std::to_string(mag) + "*";
            term += "q";
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? "-" : "+") + term;
    }
    return out;
}

void MultiPolyQ::add(const Monomial& mono, const PolyQ& c) {
    if (c.is_zero()) return;
    Monomial m = mono;
    trim_mono(m);
    auto [it, inserted] = terms.try_emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

int MultiPolyQ::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms) {
        int t = 0;
        for (int e : m) t += e;
        d = std::max(d, t);
    }
    return d;
}

MultiPolyQ MultiPolyQ::at_q(long long q) const {
    MultiPolyQ out;
    for (const auto& [m, c] : terms) out.add(m, PolyQ::constant(c.eval(q)));
    return out;
}

__int128 MultiPolyQ::eval(long long q, const std::vector<long long>& xs) const {
    __int128 total = 0;
    for (const auto& [m, c] : terms) {
        __int128 t = c.eval(q);
        for (size_t v = 0; v < m.size(); ++v)
            for (int e = 0; e < m[v]; ++e) t *= xs.at(v);
        total += t;
    }
    return total;
}

namespace {

// graded reverse-lexicographic listing order, highest degree first
bool mono_display_less(const Monomial& a, const Monomial& b) {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da > db;
    return a > b;
}

std::string mono_str(const Monomial& m) {
    std::string out;
    for (size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(v + 1);
        if (m[v] > 1) out += "^" + std::to_string(m[v]);
    }
    return out;
}

}  // namespace

std::string MultiPolyQ::to_string() const {
    if (terms.empty()) return "0";
    std::vector<const std::pair<const Monomial, PolyQ>*> order;
    for (const auto& t : terms) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](auto* a, auto* b) { return mono_display_less(a->first, b->first); });

    std::string out;
    for (auto* t : order) {
        const auto& [mono, coef] = *t;
        std::string ms = mono_str(mono);
        // negate for display when the leading q-coefficient is negative
        bool neg = !coef.coeffs.empty() && coef.coeffs.back() < 0;
        PolyQ shown = neg ? PolyQ::constant(0) - coef : coef;
        std::string cs = shown.to_string();
        bool simple = shown.coeffs.size() <= 1 ||
                      std::count_if(shown.coeffs.begin(), shown.coeffs.end(),
                                    [](long long c) { return c != 0; }) == 1;
        std::string term;
        if (ms.empty())
            term = simple ? cs : "(" + cs + ")";
        else if (cs == "1")
            term = ms;
        else
            term = (simple ? cs : "(" + cs + ")") + "*" + ms;
        if (out.empty())
            out = (neg ? "-" : "") + term;
        else
            out += std::string(neg ? " - " : " + ") + term;
    }
    return out;
}

MultiPolyQ multipoly_one() {
    MultiPolyQ p;
    p.add({}, PolyQ::constant(1));
    return p;
}

MultiPolyQ multipoly_var(int index_one_based) {
    MultiPolyQ p;
    Monomial m(size_t(index_one_based), 0);
    m[index_one_based - 1] = 1;
    p.add(m, PolyQ::constant(1));
    return p;
}

MultiPolyQ multipoly_mul(const MultiPolyQ& a, const MultiPolyQ& b) {
    MultiPolyQ out;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            Monomial m(std::max(ma.size(), mb.size()), 0);
            for (size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
            for (size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
            out.add(m, ca * cb);
        }
    return out;
}

MultiPolyQ multipoly_add(const MultiPolyQ& a, const MultiPolyQ& b) {
    MultiPolyQ out = a;
    for (const auto& [m, c] : b.terms) out.add(m, c);
    return out;
}

MultiPolyQ multipoly_sub(const MultiPolyQ& a, const MultiPolyQ& b) {
    MultiPolyQ out = a;
    for (const auto& [m, c] : b.terms) out.add(m, PolyQ::constant(0) - c);
    return out;
}

}  // namespace scfq
