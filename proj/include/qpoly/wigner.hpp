#pragma once

#include "qpoly/linalg.hpp"
#include "qpoly/pauli.hpp"

#include <vector>

namespace qpoly {

/// Index u in Z_d^{d+1} of a phase point operator. u[0] selects the Z-basis
/// projector, u[1+b] the XZ^b-basis projector.
struct PhasePointIndex {
    int d = 2;
    std::vector<int> u;  // length d+1, reduced mod d

    PhasePointIndex() = default;
    PhasePointIndex(int d_, std::vector<int> u_);
};

struct PhasePointOperator {
    PhasePointIndex index;
    CMatrix matrix;  // d x d Hermitian, trace 1/d
};

/// Bandyopadhyay eigenvector of X Z^b with eigenvalue w^k:
/// psi[m] = (1/sqrt d) w^{k(d-m)} w^{-b s_m}, s_m = sum_{q=m}^{d-1} q.
/// Odd prime d only; the qubit MUB uses the standard Z/X/Y eigenvectors.
CVector mub_vector(int b, int k, int d);

PhasePointOperator phase_point_operator(const PhasePointIndex& u);

/// Tr(rho A(u)) via direct trace.
double wigner_value(const CMatrix& rho, const PhasePointIndex& u);

/// Same value via the omega-matrix dot product with the Pauli coefficients
/// of rho (the independent evaluation path).
double wigner_value_coeff(const CMatrix& rho, const PhasePointIndex& u);

struct NegativityResult {
    double negativity = 0.0;        // |min_u Tr(rho A(u))| when negative, else 0
    double min_value = 0.0;         // min_u Tr(rho A(u))
    PhasePointIndex argmin;
};

/// Exact minimum over all d^{d+1} phase point operators. The minimum
/// separates per MUB basis, so this runs in O(d^2) projector expectations
/// while agreeing exactly with the exhaustive scan.
NegativityResult negativity_full(const CMatrix& rho, int d);

double negativity(const CMatrix& rho, int d);

/// p* = 1 - 1/(d^2 |N| + 1).
double state_robustness(const CMatrix& rho, int d);
double robustness_from_negativity(double neg, int d);

/// The d^2 (d-1)/2 maximally robust pure states of odd prime dimension d:
/// the -1/d eigenvectors of A(u*), u* = ((d+1)/2, 0, ..., 0), displaced by
/// every Pauli. Each returned ket has negativity exactly 1/d.
std::vector<CVector> robust_state_family(int d);

/// u* = ((d+1)/2, 0, ..., 0).
PhasePointIndex maximally_negative_index(int d);

}  // namespace qpoly
