#include "scfq/stablering.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "scfq/errors.hpp"

namespace scfq {

int MuVec::norm() const {
    int s = 0;
    for (const auto& [c, p] : support) s += c.n * partition_weight(p);
    return s;
}

Partition MuVec::at_one() const {
    for (const auto& [c, p] : support)
        if (c == kTrivialCuspidal) return p;
    return {};
}

MuVec MuVec::with_one(const Partition& p) const {
    MuVec out = *this;
    out.support.erase(std::remove_if(out.support.begin(), out.support.end(),
                                     [](const auto& e) { return e.first == kTrivialCuspidal; }),
                      out.support.end());
    if (!p.empty()) out.support.emplace_back(kTrivialCuspidal, p);
    out.canonicalize();
    return out;
}

void MuVec::canonicalize() {
    support.erase(std::remove_if(support.begin(), support.end(),
                                 [](const auto& e) { return e.second.empty(); }),
                  support.end());
    std::sort(support.begin(), support.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
}

bool MuVec::operator<(const MuVec& o) const {
    size_t n = std::min(support.size(), o.support.size());
    for (size_t i = 0; i < n; ++i) {
        if (!(support[i].first == o.support[i].first)) return support[i].first < o.support[i].first;
        if (support[i].second != o.support[i].second)
            return partition_less(support[i].second, o.support[i].second);
    }
    return support.size() < o.support.size();
}

std::string MuVec::to_string() const {
    std::string out = "{";
    for (size_t i = 0; i < support.size(); ++i) {
        if (i) out += "|";
        out += std::to_string(support[i].first.n) + "." + std::to_string(support[i].first.index) +
               ":" + partition_to_string(support[i].second);
    }
    return out + "}";
}

MuVec MuVec::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) s.push_back(c);
    MuVec out;
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        throw ParseError("mu must be brace-delimited: " + text);
    s = s.substr(1, s.size() - 2);
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, '|')) {
        auto colon = item.find(':');
        auto dot = item.find('.');
        if (colon == std::string::npos || dot == std::string::npos || dot > colon)
            throw ParseError("bad mu entry: " + item);
        CuspidalLabel c;
        c.n = std::stoi(item.substr(0, dot));
        c.index = std::stoi(item.substr(dot + 1, colon - dot - 1));
        Partition p;
        std::stringstream ps(item.substr(colon + 1));
        std::string tok;
        while (std::getline(ps, tok, ',')) p.push_back(std::stoi(tok));
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if (p[i] < p[i + 1]) throw ParseError("partition parts must be non-increasing: " + item);
        if (!p.empty() && p.back() <= 0) throw ParseError("partition parts must be positive: " + item);
        out.support.emplace_back(c, p);
    }
    out.canonicalize();
    return out;
}

std::vector<MuVec> pieri_expand(const MuVec& mu, int r) {
    std::vector<MuVec> out;
    for (const auto& nu : add_horizontal_strips(mu.at_one(), r)) out.push_back(mu.with_one(nu));
    std::sort(out.begin(), out.end());
    return out;
}

MuVec mu_of_N(const MuVec& mu, int N) {
    Partition nu = mu.at_one();
    int first = N - mu.norm();
    int need = nu.empty() ? 0 : nu[0];
    if (first < need) throw TooSmallN("need N >= ||mu|| + mu(1)_1");
    Partition stacked;
    if (first > 0) stacked.push_back(first);
    for (int part : nu) stacked.push_back(part);
    return mu.with_one(stacked);
}

std::string tag_name(BasisTag t) {
    switch (t) {
        case BasisTag::R: return "R";
        case BasisTag::Rfr: return "Rfr";
        case BasisTag::P: return "P";
        case BasisTag::I: return "I";
    }
    return "?";
}

BasisTag tag_parse(const std::string& s) {
    if (s == "R") return BasisTag::R;
    if (s == "Rfr") return BasisTag::Rfr;
    if (s == "P") return BasisTag::P;
    if (s == "I") return BasisTag::I;
    throw ParseError("unknown basis tag: " + s);
}

bool BasisLabel::operator<(const BasisLabel& o) const {
    if (tag != o.tag) return int(tag) < int(o.tag);
    switch (tag) {
        case BasisTag::R:
        case BasisTag::Rfr:
            if (cls == o.cls) return false;
            return label_less(cls, o.cls);
        case BasisTag::P:
            return m != o.m ? m < o.m : row < o.row;
        case BasisTag::I:
            return mu < o.mu;
    }
    return false;
}

bool BasisLabel::operator==(const BasisLabel& o) const {
    return !(*this < o) && !(o < *this);
}

StableFunction StableFunction::single(BasisLabel label, cplx coeff) {
    StableFunction f;
    f.tag = label.tag;
    f.terms.emplace(std::move(label), coeff);
    return f;
}

void StableFunction::add(const BasisLabel& label, cplx coeff, double eps) {
    auto [it, inserted] = terms.try_emplace(label, coeff);
    if (!inserted) it->second += coeff;
    if (std::abs(it->second) < eps) terms.erase(it);
}

void StableFunction::prune(double eps) {
    for (auto it = terms.begin(); it != terms.end();)
        it = std::abs(it->second) < eps ? terms.erase(it) : std::next(it);
}

StableRing::StableRing(const Fq& F, RingOptions opt)
    : F_(F), opt_(opt), cnt_(F, opt.subspaces), tabs_(F, cnt_, opt.table) {}

const std::vector<StableRing::Cuspidal>& StableRing::cuspidals(int n) {
    auto it = cusp_.find(n);
    if (it != cusp_.end()) return it->second;
    if (n < 1) throw std::invalid_argument("cuspidals are defined for n >= 1");
    if (n > opt_.max_cuspidal_level)
        throw BoundExceeded("cuspidal level " + std::to_string(n) + " is out of scope");

    std::vector<Cuspidal> out;
    const CharacterTable& tn = tabs_.table(n);
    if (n == 1) {
        for (int row = 0; row < tn.num_rows(); ++row) out.push_back({row, tn.degrees[row]});
    } else {
        // an irrep is cuspidal when it meets no parabolic induction from a
        // proper block decomposition
        std::vector<bool> constituent(tn.num_rows(), false);
        for (int j = 1; j <= n - 1; ++j) {
            const CharacterTable& tj = tabs_.table(j);
            const CharacterTable& tr = tabs_.table(n - j);
            for (int r1 = 0; r1 < tj.num_rows(); ++r1)
                for (int r2 = 0; r2 < tr.num_rows(); ++r2) {
                    auto ind = tabs_.induce_pair(j, r1, n - j, r2);
                    for (int row = 0; row < tn.num_rows(); ++row) {
                        cplx ip = inner_product_on_classes(F_, n, ind, tn.values[row]);
                        long long nearest = std::llround(ip.real());
                        if (std::abs(ip - cplx(double(nearest), 0)) > 1e-6)
                            throw NumericalFailure("non-integral constituent multiplicity");
                        if (std::abs(ip) >= 0.5) constituent[row] = true;
                    }
                }
        }
        for (int row = 0; row < tn.num_rows(); ++row)
            if (!constituent[row]) out.push_back({row, tn.degrees[row]});
    }
    return cusp_.emplace(n, std::move(out)).first->second;
}

void StableRing::build_identification(int m) {
    if (mu_to_row_.count(m)) return;
    std::map<MuVec, int> fwd;
    const CharacterTable& tab = tabs_.table(m);
    std::vector<MuVec> back(tab.num_rows());

    auto assign = [&](const MuVec& mu, int row) {
        if (fwd.count(mu) || row < 0)
            throw UnidentifiedIrrep("identification clash at " + mu.to_string());
        fwd[mu] = row;
        back[row] = mu;
    };
    auto constituents = [&](const std::vector<cplx>& ind) {
        std::vector<int> rows;
        for (int row = 0; row < tab.num_rows(); ++row) {
            cplx ip = inner_product_on_classes(F_, m, ind, tab.values[row]);
            long long nearest = std::llround(ip.real());
            if (std::abs(ip - cplx(double(nearest), 0)) > 1e-6)
                throw UnidentifiedIrrep("non-integral constituent multiplicity");
            if (nearest < 0 || nearest > 1)
                throw UnidentifiedIrrep("induction is not multiplicity-free");
            if (nearest == 1) rows.push_back(row);
        }
        return rows;
    };

    if (m == 0) {
        assign(MuVec{}, 0);
    } else if (m == 1) {
        for (size_t i = 0; i < cuspidals(1).size(); ++i) {
            MuVec mu;
            mu.support.emplace_back(CuspidalLabel{1, int(i)}, Partition{1});
            assign(mu, cuspidals(1)[i].row);
        }
    } else if (m == 2) {
        const auto& c1 = cuspidals(1);
        // the trivial cuspidal must sit at index 0 for the (1.0:...) notation
        if (c1.empty() || c1[0].row != 0)
            throw UnidentifiedIrrep("unexpected cuspidal ordering for G_1");

        // row of 1 o 1: trivial plus one more constituent
        {
            auto ind = tabs_.induce_pair(1, c1[0].row, 1, c1[0].row);
            auto rows = constituents(ind);
            if (rows.size() != 2 || rows[0] != 0)
                throw UnidentifiedIrrep("unexpected decomposition of 1 o 1");
            MuVec mu2;  // {1.0:(2)} -> trivial
            mu2.support.emplace_back(kTrivialCuspidal, Partition{2});
            assign(mu2, 0);
            MuVec mu11;  // {1.0:(1,1)} -> the complement in 1 o 1
            mu11.support.emplace_back(kTrivialCuspidal, Partition{1, 1});
            assign(mu11, rows[1]);
        }
        // nontrivial alpha: alpha o alpha splits by dimension, alpha o beta
        // and alpha o 1 are irreducible
        for (size_t a = 1; a < c1.size(); ++a) {
            auto ind = tabs_.induce_pair(1, c1[a].row, 1, c1[a].row);
            auto rows = constituents(ind);
            if (rows.size() != 2) throw UnidentifiedIrrep("unexpected decomposition of a o a");
            int small = tab.degrees[rows[0]] <= tab.degrees[rows[1]] ? rows[0] : rows[1];
            int large = small == rows[0] ? rows[1] : rows[0];
            if (tab.degrees[small] == tab.degrees[large])
                throw UnidentifiedIrrep("dimension tie in a o a");
            MuVec mu2;
            mu2.support.emplace_back(CuspidalLabel{1, int(a)}, Partition{2});
            assign(mu2, small);
            MuVec mu11;
            mu11.support.emplace_back(CuspidalLabel{1, int(a)}, Partition{1, 1});
            assign(mu11, large);

            for (size_t b = 0; b < a; ++b) {
                auto mix = tabs_.induce_pair(1, c1[a].row, 1, c1[b].row);
                auto mrows = constituents(mix);
                if (mrows.size() != 1)
                    throw UnidentifiedIrrep("principal series a o b is not irreducible");
                MuVec mu;
                mu.support.emplace_back(CuspidalLabel{1, int(b)}, Partition{1});
                mu.support.emplace_back(CuspidalLabel{1, int(a)}, Partition{1});
                mu.canonicalize();
                assign(mu, mrows[0]);
            }
        }
        for (size_t i = 0; i < cuspidals(2).size(); ++i) {
            MuVec mu;
            mu.support.emplace_back(CuspidalLabel{2, int(i)}, Partition{1});
            assign(mu, cuspidals(2)[i].row);
        }
    } else {
        throw BoundExceeded("mu identification is scoped to ||mu|| <= 2");
    }

    if (int(fwd.size()) != tab.num_rows())
        throw UnidentifiedIrrep("identification is not a bijection at m = " + std::to_string(m));
    row_to_mu_[m] = std::move(back);
    mu_to_row_[m] = std::move(fwd);
}

int StableRing::row_of_mu(const MuVec& mu) {
    int m = mu.norm();
    build_identification(m);
    auto it = mu_to_row_[m].find(mu);
    if (it == mu_to_row_[m].end())
        throw UnidentifiedIrrep("no character-table row for " + mu.to_string());
    return it->second;
}

MuVec StableRing::mu_of_row(int m, int row) {
    build_identification(m);
    return row_to_mu_[m].at(row);
}

std::vector<MuVec> StableRing::all_muvecs(int m) {
    build_identification(m);
    std::vector<MuVec> out;
    for (const auto& [mu, row] : mu_to_row_[m]) out.push_back(mu);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<cplx> StableRing::stable_irr_char(const MuVec& mu, int N) {
    auto key = std::make_pair(mu.to_string(), N);
    auto it = irr_cache_.find(key);
    if (it != irr_cache_.end()) return it->second;

    int m = mu.norm();
    std::vector<cplx> out;
    if (m == 0) {
        out.assign(enumerate_classes(F_, N).size(), cplx(1, 0));
    } else {
        Partition one = mu.at_one();
        if (N - m < (one.empty() ? 0 : one[0]))
            throw TooSmallN("stable character undefined: N < ||mu|| + mu(1)_1");
        out = tabs_.chi_circ_one(m, row_of_mu(mu), N);
        for (int s = 1; s <= partition_weight(one); ++s)
            for (const auto& shrunk : remove_horizontal_strips(one, s)) {
                auto sub = stable_irr_char(mu.with_one(shrunk), N);
                for (size_t k = 0; k < out.size(); ++k) out[k] -= sub[k];
            }
    }
    return irr_cache_.emplace(key, std::move(out)).first->second;
}

std::vector<cplx> StableRing::evaluate_label(const BasisLabel& label, int N) {
    switch (label.tag) {
        case BasisTag::R: {
            auto row = cnt_.btil_row(label.cls, N);
            std::vector<cplx> out(row.size());
            for (size_t i = 0; i < row.size(); ++i) out[i] = double(row[i]);
            return out;
        }
        case BasisTag::Rfr: {
            auto row = cnt_.btil_fr_row(label.cls, N);
            std::vector<cplx> out(row.size());
            for (size_t i = 0; i < row.size(); ++i) out[i] = double(row[i]);
            return out;
        }
        case BasisTag::P:
            return tabs_.chi_circ_one(label.m, label.row, N);
        case BasisTag::I:
            return stable_irr_char(label.mu, N);
    }
    throw std::logic_error("unreachable");
}

std::vector<cplx> StableRing::evaluate(const StableFunction& f, int N) {
    std::vector<cplx> out(enumerate_classes(F_, N).size(), cplx(0, 0));
    for (const auto& [label, coeff] : f.terms) {
        auto v = evaluate_label(label, N);
        for (size_t k = 0; k < out.size(); ++k) out[k] += coeff * v[k];
    }
    return out;
}

StableFunction StableRing::step_toward(const StableFunction& f, BasisTag next) {
    StableFunction out;
    out.tag = next;
    const double eps = opt_.coeff_eps;

    for (const auto& [label, coeff] : f.terms) {
        if (f.tag == BasisTag::R && next == BasisTag::Rfr) {
            for (const auto& child : cnt_.decompose_full_rank(label.cls)) {
                BasisLabel L;
                L.tag = BasisTag::Rfr;
                L.cls = child;
                out.add(L, coeff, eps);
            }
        } else if (f.tag == BasisTag::Rfr && next == BasisTag::R) {
            // triangular inversion of the decomposition, memoized per class
            std::string key = label_to_string(F_, label.cls);
            auto it = rfr_in_R_.find(key);
            if (it == rfr_in_R_.end()) {
                StableFunction expand;
                expand.tag = BasisTag::R;
                BasisLabel self;
                self.tag = BasisTag::R;
                self.cls = label.cls;
                expand.add(self, 1.0, eps);
                for (const auto& child : cnt_.decompose_full_rank(label.cls)) {
                    if (child.n >= label.cls.n) continue;
                    BasisLabel sub;
                    sub.tag = BasisTag::Rfr;
                    sub.cls = child;
                    auto rec = step_toward(StableFunction::single(sub), BasisTag::R);
                    for (const auto& [l2, c2] : rec.terms) expand.add(l2, -c2, eps);
                }
                it = rfr_in_R_.emplace(key, std::move(expand)).first;
            }
            for (const auto& [l2, c2] : it->second.terms) out.add(l2, coeff * c2, eps);
        } else if (f.tag == BasisTag::Rfr && next == BasisTag::P) {
            int m = label.cls.n;
            const CharacterTable& tab = tabs_.table(m);
            int cB = -1;
            for (int c = 0; c < tab.num_classes(); ++c)
                if (tab.group->classes[c] == label.cls) cB = c;
            if (cB < 0) throw std::logic_error("class not found in its own group");
            for (int row = 0; row < tab.num_rows(); ++row) {
                BasisLabel L;
                L.tag = BasisTag::P;
                L.m = m;
                L.row = row;
                out.add(L, coeff * std::conj(tab.values[row][cB]), eps);
            }
        } else if (f.tag == BasisTag::P && next == BasisTag::Rfr) {
            const CharacterTable& tab = tabs_.table(label.m);
            for (int c = 0; c < tab.num_classes(); ++c) {
                BasisLabel L;
                L.tag = BasisTag::Rfr;
                L.cls = tab.group->classes[c];
                cplx w = double(tab.group->sizes[c]) * tab.values[label.row][c] /
                         double(tab.group->order);
                out.add(L, coeff * w, eps);
            }
        } else if (f.tag == BasisTag::P && next == BasisTag::I) {
            MuVec mu = mu_of_row(label.m, label.row);
            Partition one = mu.at_one();
            for (int s = 0; s <= partition_weight(one); ++s)
                for (const auto& shrunk : remove_horizontal_strips(one, s)) {
                    BasisLabel L;
                    L.tag = BasisTag::I;
                    L.mu = mu.with_one(shrunk);
                    out.add(L, coeff, eps);
                }
        } else if (f.tag == BasisTag::I && next == BasisTag::P) {
            std::string key = label.mu.to_string();
            auto it = i_in_P_.find(key);
            if (it == i_in_P_.end()) {
                StableFunction expand;
                expand.tag = BasisTag::P;
                int m = label.mu.norm();
                BasisLabel base;
                base.tag = BasisTag::P;
                base.m = m;
                base.row = row_of_mu(label.mu);
                expand.add(base, 1.0, eps);
                Partition one = label.mu.at_one();
                for (int s = 1; s <= partition_weight(one); ++s)
                    for (const auto& shrunk : remove_horizontal_strips(one, s)) {
                        BasisLabel sub;
                        sub.tag = BasisTag::I;
                        sub.mu = label.mu.with_one(shrunk);
                        auto rec = step_toward(StableFunction::single(sub), BasisTag::P);
                        for (const auto& [l2, c2] : rec.terms) expand.add(l2, -c2, eps);
                    }
                it = i_in_P_.emplace(key, std::move(expand)).first;
            }
            for (const auto& [l2, c2] : it->second.terms) out.add(l2, coeff * c2, eps);
        } else {
            throw std::logic_error("not a neighboring basis pair");
        }
    }
    return out;
}

StableFunction StableRing::change_basis(const StableFunction& f, BasisTag target) {
    StableFunction cur = f;
    while (cur.tag != target) {
        int from = int(cur.tag), to = int(target);
        BasisTag next = BasisTag(from + (to > from ? 1 : -1));
        cur = step_toward(cur, next);
    }
    return cur;
}

cplx StableRing::expectation(const std::vector<cplx>& values, int N) {
    return expectation_on_classes(F_, N, values);
}

cplx StableRing::expectation(const StableFunction& f, int N) {
    return expectation_on_classes(F_, N, evaluate(f, N));
}

cplx StableRing::inner_product(const StableFunction& f1, const StableFunction& f2, int N) {
    return inner_product_on_classes(F_, N, evaluate(f1, N), evaluate(f2, N));
}

int StableRing::identity_class_index(int N) {
    auto classes = enumerate_classes(F_, N);
    ClassLabel id;
    id.n = N;
    if (N > 0) {
        Poly xm1{F_.neg(F_.one()), F_.one()};
        id.parts.emplace_back(xm1, Partition(size_t(N), 1));
    }
    for (size_t k = 0; k < classes.size(); ++k)
        if (classes[k] == id) return int(k);
    throw std::logic_error("identity class not found");
}

std::vector<cplx> StableRing::fix_function(int N) {
    ClassLabel one;
    one.n = 1;
    Poly xm1{F_.neg(F_.one()), F_.one()};
    one.parts.emplace_back(xm1, Partition{1});
    auto row = cnt_.btil_row(one, N);
    std::vector<cplx> out(row.size());
    for (size_t i = 0; i < row.size(); ++i) out[i] = double(row[i]);
    return out;
}

std::vector<cplx> StableRing::chi_projective(int N) {
    // -1 + (q-1)^{-1} sum over nonzero lambda of (btil((lambda)) - 1)
    size_t classes = enumerate_classes(F_, N).size();
    std::vector<cplx> out(classes, cplx(-1, 0));
    for (Scalar lambda : F_.nonzero_elements()) {
        ClassLabel L;
        L.n = 1;
        Poly f{F_.neg(lambda), F_.one()};
        L.parts.emplace_back(f, Partition{1});
        auto row = cnt_.btil_row(L, N);
        for (size_t k = 0; k < classes; ++k)
            out[k] += (double(row[k]) - 1.0) / double(F_.q() - 1);
    }
    return out;
}

FiltrationReport StableRing::verify_filtration_equality(int m, int N) {
    FiltrationReport rep;
    rep.m = m;
    rep.N = N;

    std::vector<std::string> names;
    std::vector<std::vector<std::vector<cplx>>> families;

    std::vector<std::vector<cplx>> famR, famRfr, famP, famI;
    rep.target_rank = 0;
    for (int j = 0; j <= m; ++j) {
        auto classes_j = enumerate_classes(F_, j);
        rep.target_rank += int(classes_j.size());
        for (const auto& L : classes_j) {
            auto r = cnt_.btil_row(L, N);
            auto rf = cnt_.btil_fr_row(L, N);
            std::vector<cplx> vr(r.size()), vf(rf.size());
            for (size_t k = 0; k < r.size(); ++k) vr[k] = double(r[k]);
            for (size_t k = 0; k < rf.size(); ++k) vf[k] = double(rf[k]);
            famR.push_back(std::move(vr));
            famRfr.push_back(std::move(vf));
        }
        const CharacterTable& tab = tabs_.table(j);
        for (int row = 0; row < tab.num_rows(); ++row)
            famP.push_back(tabs_.chi_circ_one(j, row, N));
        if (m <= opt_.max_cuspidal_level)
            for (const auto& mu : all_muvecs(j)) {
                Partition one = mu.at_one();
                // below the stability threshold some stable irreducibles do
                // not exist at this N; list the ones that do
                if (N - j < (one.empty() ? 0 : one[0])) continue;
                famI.push_back(stable_irr_char(mu, N));
            }
    }
    names.push_back("btil");
    families.push_back(std::move(famR));
    names.push_back("btil_fr");
    families.push_back(std::move(famRfr));
    names.push_back("parabolic");
    families.push_back(std::move(famP));
    if (!famI.empty()) {
        names.push_back("stable_irr");
        families.push_back(std::move(famI));
    }

    // normalize generators to unit norm in the class inner product
    for (auto& fam : families)
        for (auto& v : fam) {
            double n2 = inner_product_on_classes(F_, N, v, v).real();
            double scale = 1.0 / std::sqrt(std::max(n2, 1e-300));
            for (auto& x : v) x *= scale;
        }

    auto gram = [&](const std::vector<std::vector<cplx>>& A) {
        CMat G(int(A.size()));
        for (size_t i = 0; i < A.size(); ++i)
            for (size_t j = 0; j < A.size(); ++j)
                G.at(int(i), int(j)) = inner_product_on_classes(F_, N, A[i], A[j]);
        return G;
    };

    bool ranks_ok = true;
    std::vector<HermEig> eigs;
    for (size_t fi = 0; fi < families.size(); ++fi) {
        CMat G = gram(families[fi]);
        HermEig eig = hermitian_eig(G);
        double lmax = eig.values.empty() ? 0 : eig.values.back();
        int rank = 0;
        for (double l : eig.values)
            if (l > 1e-7 * std::max(lmax, 1.0)) ++rank;
        rep.families.push_back({names[fi], int(families[fi].size()), rank});
        if (rank != rep.target_rank) ranks_ok = false;
        eigs.push_back(std::move(eig));
    }

    // span containments: project each generator of one family onto the span
    // of another through the pseudo-inverse of its Gram matrix
    rep.max_containment_residual = 0;
    for (size_t a = 0; a < families.size(); ++a)
        for (size_t b = 0; b < families.size(); ++b) {
            if (a == b) continue;
            const auto& eigB = eigs[b];
            int nb = int(families[b].size());
            for (const auto& v : families[a]) {
                std::vector<cplx> p(nb);
                for (int i = 0; i < nb; ++i)
                    p[i] = inner_product_on_classes(F_, N, families[b][i], v);
                // x = G_B^+ p via the eigen decomposition
                std::vector<cplx> x(nb, cplx(0, 0));
                double lmax = eigB.values.empty() ? 0 : eigB.values.back();
                for (int k = 0; k < nb; ++k) {
                    if (eigB.values[k] < 1e-10 * std::max(lmax, 1.0)) continue;
                    cplx proj = 0;
                    for (int i = 0; i < nb; ++i)
                        proj += std::conj(eigB.vectors.at(i, k)) * p[i];
                    proj /= eigB.values[k];
                    for (int i = 0; i < nb; ++i) x[i] += eigB.vectors.at(i, k) * proj;
                }
                cplx proj_norm = 0;
                for (int i = 0; i < nb; ++i) proj_norm += std::conj(p[i]) * x[i];
                double res2 = 1.0 - proj_norm.real();
                rep.max_containment_residual =
                    std::max(rep.max_containment_residual, std::sqrt(std::max(res2, 0.0)));
            }
        }

    rep.pass = ranks_ok && rep.max_containment_residual < 1e-6;
    return rep;
}

std::vector<Rat> StableRing::dim_polynomial(const MuVec& mu) {
    int m = mu.norm();
    if (m == 0) return {Rat(1)};
    Partition one = mu.at_one();
    int start = std::max(2 * m, m + (one.empty() ? 0 : one[0]));

    auto dim_at = [&](int N) -> long long {
        cplx v = stable_irr_char(mu, N)[identity_class_index(N)];
        long long nearest = std::llround(v.real());
        if (std::abs(v - cplx(double(nearest), 0)) > 1e-6 * std::max(1.0, std::abs(v)))
            throw NumericalFailure("stable dimension is not close to an integer");
        return nearest;
    };

    // Lagrange interpolation in x = q^N through m+1 points, exact rationals
    std::vector<long long> xs, ys;
    for (int i = 0; i <= m; ++i) {
        long long x = 1;
        for (int t = 0; t < start + i; ++t) x *= F_.q();
        xs.push_back(x);
        ys.push_back(dim_at(start + i));
    }
    std::vector<Rat> coeffs(size_t(m) + 1, Rat(0));
    for (int i = 0; i <= m; ++i) {
        std::vector<Rat> basis{Rat(1)};
        Rat denom(1);
        for (int j = 0; j <= m; ++j) {
            if (j == i) continue;
            // basis *= (x - x_j)
            std::vector<Rat> next(basis.size() + 1, Rat(0));
            for (size_t t = 0; t < basis.size(); ++t) {
                next[t + 1] = next[t + 1] + basis[t];
                next[t] = next[t] - basis[t] * Rat(xs[j]);
            }
            basis = std::move(next);
            denom = denom * (Rat(xs[i]) - Rat(xs[j]));
        }
        for (size_t t = 0; t < basis.size(); ++t)
            coeffs[t] = coeffs[t] + basis[t] * Rat(ys[i]) / denom;
    }

    // held-out check one step past the sample window
    int holdN = start + m + 1;
    long long xh = 1;
    for (int t = 0; t < holdN; ++t) xh *= F_.q();
    Rat predicted(0);
    Rat xpow(1);
    for (size_t t = 0; t < coeffs.size(); ++t) {
        predicted = predicted + coeffs[t] * xpow;
        xpow = xpow * Rat(xh);
    }
    if (!(predicted == Rat(dim_at(holdN))))
        throw FitFailure("dimension polynomial failed the held-out check");
    return coeffs;
}

}  // namespace scfq
