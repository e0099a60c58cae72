#pragma once

#include "qpoly/types.hpp"

namespace qpoly {

struct EigResult {
    RVector eigenvalues;   // ascending
    CMatrix eigenvectors;  // orthonormal columns, eigenvectors.col(k) <-> eigenvalues(k)
};

/// Eigendecomposition of a Hermitian matrix. Throws std::invalid_argument if
/// M is not square or deviates from Hermitian by more than 1e-10.
EigResult hermitian_eig(const CMatrix& M);

/// Number of singular values above rel_tol * sigma_max.
int numerical_rank(const RMatrix& M, double rel_tol = 1e-8);

/// Entrywise max |A - B| <= tol. Throws on shape mismatch.
bool matrices_close(const CMatrix& A, const CMatrix& B, double tol);

double max_abs_diff(const CMatrix& A, const CMatrix& B);

/// Tr(A^dag B) in O(n^2).
inline cplx trace_adj_prod(const CMatrix& A, const CMatrix& B) {
    return A.conjugate().cwiseProduct(B).sum();
}

}  // namespace qpoly
