#pragma once

#include <complex>
#include <vector>

namespace scfq {

using cplx = std::complex<double>;

// Dense complex matrix, row-major; just enough linear algebra for the
// character-table and verification numerics.
struct CMat {
    int n = 0;
    std::vector<cplx> a;

    CMat() = default;
    explicit CMat(int n_) : n(n_), a(size_t(n_) * n_, cplx(0, 0)) {}
    cplx& at(int i, int j) { return a[size_t(i) * n + j]; }
    cplx at(int i, int j) const { return a[size_t(i) * n + j]; }
};

// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
// Returns eigenvalues ascending with the matching orthonormal eigenvectors as
// columns of V.
struct HermEig {
    std::vector<double> values;
    CMat vectors;
};

HermEig hermitian_eig(const CMat& A);

}  // namespace scfq
