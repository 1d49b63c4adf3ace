#include "scfq/hermeig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "scfq/errors.hpp"

namespace scfq {

namespace {

double offdiag_norm(const CMat& A) {
    double s = 0;
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j)
            if (i != j) s += std::norm(A.at(i, j));
    return std::sqrt(s);
}

}  // namespace

HermEig hermitian_eig(const CMat& A0) {
    int n = A0.n;
    CMat A = A0;
    CMat V(n);
    for (int i = 0; i < n; ++i) V.at(i, i) = 1;

    double scale = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(A.at(i, j)));
    if (scale == 0) scale = 1;

    const double tol = 1e-14 * scale * n;
    for (int sweep = 0; sweep < 80 && offdiag_norm(A) > tol; ++sweep) {
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                cplx apq = A.at(p, q);
                double b = std::abs(apq);
                if (b <= 1e-300) continue;
                cplx phase = apq / b;  // apq = b * e^{i phi}

                double app = A.at(p, p).real();
                double aqq = A.at(q, q).real();
                double tau = (aqq - app) / (2 * b);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
                double c = 1 / std::sqrt(1 + t * t);
                double s = t * c;

                // unitary rotation on the (p,q) plane: columns
                //   u_p = c * e_p - s * conj(phase) * e_q
                //   u_q = s * phase * e_p + c * e_q  ... realized below via
                // U[p][p]=c, U[p][q]=s, U[q][p]=-s*conj(phase), U[q][q]=c*conj(phase)
                cplx upp = c, upq = s;
                cplx uqp = -s * std::conj(phase), uqq = c * std::conj(phase);

                // A <- U^H A U : first columns, then rows
                for (int i = 0; i < n; ++i) {
                    cplx aip = A.at(i, p), aiq = A.at(i, q);
                    A.at(i, p) = aip * upp + aiq * uqp;
                    A.at(i, q) = aip * upq + aiq * uqq;
                }
                for (int j = 0; j < n; ++j) {
                    cplx apj = A.at(p, j), aqj = A.at(q, j);
                    A.at(p, j) = std::conj(upp) * apj + std::conj(uqp) * aqj;
                    A.at(q, j) = std::conj(upq) * apj + std::conj(uqq) * aqj;
                }
                for (int i = 0; i < n; ++i) {
                    cplx vip = V.at(i, p), viq = V.at(i, q);
                    V.at(i, p) = vip * upp + viq * uqp;
                    V.at(i, q) = vip * upq + viq * uqq;
                }
                // clamp the rotated pair to exact Hermitian form
                A.at(p, q) = std::conj(A.at(q, p));
            }
    }
    if (offdiag_norm(A) > 1e6 * tol)
        throw NumericalFailure("Jacobi iteration failed to converge");

    HermEig out;
    out.values.resize(n);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return A.at(i, i).real() < A.at(j, j).real(); });
    out.vectors = CMat(n);
    for (int k = 0; k < n; ++k) {
        out.values[k] = A.at(order[k], order[k]).real();
        for (int i = 0; i < n; ++i) out.vectors.at(i, k) = V.at(i, order[k]);
    }
    return out;
}

}  // namespace scfq
