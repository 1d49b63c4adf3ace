#include "scfq/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "scfq/errors.hpp"

namespace scfq {

cplx CharacterTable::row_inner(int i, int j) const {
    cplx s = 0;
    for (int k = 0; k < num_classes(); ++k)
        s += double(group->sizes[k]) * values[i][k] * std::conj(values[j][k]);
    return s / double(group->order);
}

std::vector<long long> structure_constants_serial(const Fq& F, const GroupData& gd) {
    return structure_constants(F, gd, Exec::serial);
}

std::vector<long long> structure_constants(const Fq& F, const GroupData& gd, Exec exec) {
    int r = int(gd.classes.size());
    size_t sz = size_t(r) * r * r;
    std::vector<long long> acc(sz, 0);

    // precompute the class of x^{-1} * z_k for every element x
    if (exec == Exec::openmp && sz <= (1u << 21)) {
        int chunks = std::max(1, hardware_threads());
        std::vector<std::vector<long long>> local(chunks, std::vector<long long>(sz, 0));
        size_t n = gd.elements.size();
        par_for(size_t(chunks), exec, [&](size_t c) {
            size_t lo = n * c / chunks, hi = n * (c + 1) / chunks;
            auto& a = local[c];
            for (size_t x = lo; x < hi; ++x) {
                int i = gd.class_of[x];
                const MatFq& xinv = gd.elements[gd.inverse_of[x]];
                for (int k = 0; k < r; ++k) {
                    MatFq y = mat_mul(F, xinv, gd.elements[gd.rep_elem[k]]);
                    int j = gd.class_of[gd.element_index(y)];
                    a[(size_t(i) * r + j) * r + k] += 1;
                }
            }
        });
        for (const auto& a : local)
            for (size_t t = 0; t < sz; ++t) acc[t] += a[t];
        return acc;
    }

    for (size_t x = 0; x < gd.elements.size(); ++x) {
        int i = gd.class_of[x];
        const MatFq& xinv = gd.elements[gd.inverse_of[x]];
        for (int k = 0; k < r; ++k) {
            MatFq y = mat_mul(F, xinv, gd.elements[gd.rep_elem[k]]);
            int j = gd.class_of[gd.element_index(y)];
            acc[(size_t(i) * r + j) * r + k] += 1;
        }
    }
    return acc;
}

namespace {

struct RowCandidate {
    int degree;
    std::vector<cplx> values;
};

bool row_less(const RowCandidate& a, const RowCandidate& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    for (size_t j = 0; j < a.values.size(); ++j) {
        double re_a = std::round(a.values[j].real() * 1e6) / 1e6;
        double re_b = std::round(b.values[j].real() * 1e6) / 1e6;
        if (re_a != re_b) return re_a > re_b;
        double im_a = std::round(a.values[j].imag() * 1e6) / 1e6;
        double im_b = std::round(b.values[j].imag() * 1e6) / 1e6;
        if (im_a != im_b) return im_a > im_b;
    }
    return false;
}

}  // namespace

CharacterTable character_table(const Fq& F, int m, const TableOptions& opt) {
    CharacterTable tab;
    tab.m = m;
    tab.tolerance = opt.tol;
    tab.group = group_data(F, m, opt.max_group_order);
    const GroupData& gd = *tab.group;
    int r = int(gd.classes.size());

    if (gd.order == 1) {
        tab.degrees = {1};
        tab.values = {std::vector<cplx>(r, cplx(1, 0))};
        return tab;
    }

    auto a = structure_constants(F, gd);
    // similarity by sqrt(class sizes) makes the class-sum matrices normal
    std::vector<double> sqrt_sizes(r);
    for (int j = 0; j < r; ++j) sqrt_sizes[j] = std::sqrt(double(gd.sizes[j]));
    std::vector<std::vector<double>> B(r, std::vector<double>(size_t(r) * r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                B[i][size_t(j) * r + k] =
                    double(a[(size_t(i) * r + j) * r + k]) * sqrt_sizes[k] / sqrt_sizes[j];

    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
        // random real combination of the class matrices, split into its
        // symmetric and skew parts to form one Hermitian matrix with the same
        // simultaneous eigenbasis
        std::vector<double> coef(r);
        for (int i = 0; i < r; ++i) coef[i] = gauss(rng);
        double gamma = gauss(rng);

        CMat H(r);
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) {
                double combo_jk = 0, combo_kj = 0;
                for (int i = 0; i < r; ++i) {
                    combo_jk += coef[i] * B[i][size_t(j) * r + k];
                    combo_kj += coef[i] * B[i][size_t(k) * r + j];
                }
                H.at(j, k) = cplx((combo_jk + combo_kj) / 2, gamma * (combo_jk - combo_kj) / 2);
            }

        HermEig eig;
        try {
            eig = hermitian_eig(H);
        } catch (const NumericalFailure&) {
            continue;
        }
        double span = eig.values.back() - eig.values.front();
        double min_gap = span;
        for (int i = 0; i + 1 < r; ++i)
            min_gap = std::min(min_gap, eig.values[i + 1] - eig.values[i]);
        if (r > 1 && min_gap < 1e-8 * std::max(1.0, span)) continue;

        // each eigenvector carries one central character: omega_i is its
        // eigenvalue under the i-th class matrix
        std::vector<RowCandidate> rows;
        bool ok = true;
        for (int v = 0; v < r && ok; ++v) {
            std::vector<cplx> omega(r);
            for (int i = 0; i < r; ++i) {
                cplx s = 0;
                for (int j = 0; j < r; ++j) {
                    cplx bx = 0;
                    for (int k = 0; k < r; ++k)
                        bx += B[i][size_t(j) * r + k] * eig.vectors.at(k, v);
                    s += std::conj(eig.vectors.at(j, v)) * bx;
                }
                omega[i] = s;
            }
            double denom = 0;
            for (int j = 0; j < r; ++j) denom += std::norm(omega[j]) / double(gd.sizes[j]);
            double dsq = double(gd.order) / denom;
            double dref = std::sqrt(dsq);
            int d = int(std::lround(dref));
            if (d < 1 || std::abs(dref - d) > 1e-5 * std::max(1.0, dref)) {
                ok = false;
                break;
            }
            RowCandidate rc;
            rc.degree = d;
            rc.values.resize(r);
            for (int j = 0; j < r; ++j)
                rc.values[j] = double(d) * omega[j] / double(gd.sizes[j]);
            rows.push_back(std::move(rc));
        }
        if (!ok) continue;

        std::sort(rows.begin(), rows.end(), row_less);
        tab.degrees.clear();
        tab.values.clear();
        for (auto& rc : rows) {
            tab.degrees.push_back(rc.degree);
            tab.values.push_back(std::move(rc.values));
        }

        // validation: orthonormal rows, trivial character first
        bool valid = true;
        long long sum_sq = 0;
        for (int i = 0; i < r; ++i) sum_sq += (long long)tab.degrees[i] * tab.degrees[i];
        if (sum_sq != gd.order) valid = false;
        for (int i = 0; i < r && valid; ++i)
            for (int j = i; j < r && valid; ++j) {
                cplx ip = tab.row_inner(i, j);
                if (std::abs(ip - (i == j ? 1.0 : 0.0)) > opt.tol) valid = false;
            }
        for (int j = 0; j < r && valid; ++j)
            if (std::abs(tab.values[0][j] - cplx(1, 0)) > opt.tol) valid = false;
        if (!valid) continue;
        return tab;
    }
    throw NumericalFailure("character table iteration did not separate the eigenvalues");
}

CharTables::CharTables(const Fq& F, Counting& counting, TableOptions opt)
    : F_(F), cnt_(counting), opt_(opt) {}

const CharacterTable& CharTables::table(int m) {
    auto it = tables_.find(m);
    if (it != tables_.end()) return it->second;
    return tables_.emplace(m, character_table(F_, m, opt_)).first->second;
}

const CharTables::InducedCounts& CharTables::induced_counts(int m, int r, Exec exec) {
    auto key = std::make_pair(m, r);
    auto it = counts_.find(key);
    if (it != counts_.end()) return it->second;

    int N = m + r;
    auto gdN = group_data(F_, N, opt_.max_group_order);
    auto gdm = group_data(F_, m, opt_.max_group_order);
    auto gdr = group_data(F_, r, opt_.max_group_order);
    int rm = int(gdm->classes.size());
    int rr = int(gdr->classes.size());
    int rN = int(gdN->classes.size());

    InducedCounts ic;
    ic.m = m;
    ic.r = r;
    ic.counts.assign(rN, std::vector<long long>(size_t(rm) * rr, 0));

    par_for(size_t(rN), exec, [&](size_t k) {
        const MatFq& z = gdN->elements[gdN->rep_elem[k]];
        auto& row = ic.counts[k];
        MatFq Bm(m, m), Dr(r, r);
        for (size_t yi = 0; yi < gdN->elements.size(); ++yi) {
            const MatFq& y = gdN->elements[yi];
            const MatFq& yinv = gdN->elements[gdN->inverse_of[yi]];
            MatFq p = mat_mul(F_, mat_mul(F_, y, z), yinv);
            bool block = true;
            for (int i = m; i < N && block; ++i)
                for (int j = 0; j < m && block; ++j)
                    if (p.at(i, j) != 0) block = false;
            if (!block) continue;
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) Bm.at(i, j) = p.at(i, j);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) Dr.at(i, j) = p.at(m + i, m + j);
            int cm = m == 0 ? 0 : gdm->class_of[gdm->element_index(Bm)];
            int cr = r == 0 ? 0 : gdr->class_of[gdr->element_index(Dr)];
            row[size_t(cm) * rr + cr] += 1;
        }
    });

    return counts_.emplace(key, std::move(ic)).first->second;
}

std::vector<cplx> CharTables::induce_pair(int m, int row1, int r, int row2, Exec exec) {
    const CharacterTable& tm = table(m);
    const CharacterTable& tr = table(r);
    const InducedCounts& ic = induced_counts(m, r, exec);
    int rm = tm.num_classes(), rr = tr.num_classes();

    // |P_{m,r}| = |G_m| |G_r| q^{mr}
    double parabolic = double(tm.group->order) * double(tr.group->order);
    for (int i = 0; i < m * r; ++i) parabolic *= F_.q();

    std::vector<cplx> out(ic.counts.size(), cplx(0, 0));
    for (size_t k = 0; k < ic.counts.size(); ++k) {
        cplx s = 0;
        for (int cm = 0; cm < rm; ++cm)
            for (int cr = 0; cr < rr; ++cr) {
                long long c = ic.counts[k][size_t(cm) * rr + cr];
                if (c) s += double(c) * tm.values[row1][cm] * tr.values[row2][cr];
            }
        out[k] = s / parabolic;
    }
    return out;
}

std::vector<cplx> CharTables::induce_direct(int m, int row, int N, Exec exec) {
    if (N < m) throw std::invalid_argument("induce_direct needs N >= m");
    const CharacterTable& tm = table(m);
    const InducedCounts& ic = induced_counts(m, N - m, exec);
    int rm = tm.num_classes();
    int rr = int(group_data(F_, N - m, opt_.max_group_order)->classes.size());

    double parabolic = double(tm.group->order) *
                       double(group_data(F_, N - m, opt_.max_group_order)->order);
    for (int i = 0; i < m * (N - m); ++i) parabolic *= F_.q();

    std::vector<cplx> out(ic.counts.size(), cplx(0, 0));
    for (size_t k = 0; k < ic.counts.size(); ++k) {
        cplx s = 0;
        for (int cm = 0; cm < rm; ++cm) {
            long long c = 0;
            for (int cr = 0; cr < rr; ++cr) c += ic.counts[k][size_t(cm) * rr + cr];
            if (c) s += double(c) * tm.values[row][cm];
        }
        out[k] = s / parabolic;
    }
    return out;
}

std::vector<cplx> CharTables::chi_circ_one(int m, int row, int N, Exec exec) {
    const CharacterTable& tm = table(m);
    auto classes_N = enumerate_classes(F_, N);
    std::vector<cplx> out(classes_N.size(), cplx(0, 0));

    // (1/|G_m|) sum over classes B of G_m of |B^G| chi(B) btil_fr(B, .)
    for (int cm = 0; cm < tm.num_classes(); ++cm) {
        auto fr = cnt_.btil_fr_row(tm.group->classes[cm], N, exec);
        cplx w = double(tm.group->sizes[cm]) * tm.values[row][cm] / double(tm.group->order);
        for (size_t k = 0; k < out.size(); ++k) out[k] += w * double(fr[k]);
    }
    return out;
}

std::vector<cplx> CharTables::btil_fr_via_P(const ClassLabel& B, int N, Exec exec) {
    const CharacterTable& tm = table(B.n);
    int cB = -1;
    for (int c = 0; c < tm.num_classes(); ++c)
        if (tm.group->classes[c] == B) cB = c;
    if (cB < 0) throw std::invalid_argument("label is not a class of G_m");

    std::vector<cplx> out(enumerate_classes(F_, N).size(), cplx(0, 0));
    for (int row = 0; row < tm.num_rows(); ++row) {
        auto ind = chi_circ_one(B.n, row, N, exec);
        cplx w = std::conj(tm.values[row][cB]);
        for (size_t k = 0; k < out.size(); ++k) out[k] += w * ind[k];
    }
    return out;
}

cplx inner_product_on_classes(const Fq& F, int N, const std::vector<cplx>& f1,
                              const std::vector<cplx>& f2) {
    auto classes = enumerate_classes(F, N);
    cplx s = 0;
    for (size_t k = 0; k < classes.size(); ++k)
        s += f1[k] * std::conj(f2[k]) / double(centralizer_order(F, classes[k]));
    return s;
}

cplx expectation_on_classes(const Fq& F, int N, const std::vector<cplx>& f) {
    auto classes = enumerate_classes(F, N);
    cplx s = 0;
    for (size_t k = 0; k < classes.size(); ++k)
        s += f[k] / double(centralizer_order(F, classes[k]));
    return s;
}

}  // namespace scfq
