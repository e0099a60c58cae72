#pragma once

#include "qpoly/pauli.hpp"

#include <array>
#include <vector>

namespace qpoly {

/// Single-qudit Clifford element: symplectic part F in SL(2,Z_d), displacement
/// chi in Z_d^2, realized unitary with canonical global phase.
struct CliffordElement {
    int d = 2;
    std::array<std::array<int, 2>, 2> F{{{1, 0}, {0, 1}}};
    std::array<int, 2> chi{0, 0};
    CMatrix matrix;
};

/// Divide by the phase of the first nonzero entry in column-major order.
CMatrix canonical_phase(const CMatrix& U);

/// Dedup key: canonical-phase entries rounded to 12 decimals, serialized.
std::string matrix_key(const CMatrix& U, int decimals = 12);

/// Appleby metaplectic unitary C_(F,chi) = D_chi C_F for odd prime d;
/// requires det F = 1 mod d. d = 2 is handled by enumerate_clifford.
CMatrix clifford_unitary(const std::array<std::array<int, 2>, 2>& F,
                         const std::array<int, 2>& chi, int d);

/// All d^3 (d^2 - 1) single-qudit Clifford gates, distinct modulo phase.
std::vector<CliffordElement> enumerate_clifford(int d);

/// Action on Pauli labels: C P_(x|z) C^dag = w^t P_(x'|z').
/// entry(x, z) -> {x', z', t}; exact integers recovered from the matrix.
struct LabelAction {
    int d = 2;
    std::vector<std::array<int, 3>> map;  // index x*d + z
    const std::array<int, 3>& operator()(int x, int z) const { return map[x * d + z]; }
};

LabelAction label_action(const CMatrix& C, int d);

/// Choi-Jamiolkowski state |J_U> = (I (x) U) sum_j |jj> / sqrt(d) and its
/// real coordinate vector in the fixed weight-2 Hermitian basis.
struct ChoiVector {
    int d = 2;
    CVector j_state;   // dimension d^2
    RVector real_vec;  // dimension (d^2-1)^2
};

ChoiVector choi_state(const CMatrix& U);

/// Lex-sorted representatives of the weight-2 label pairs {l, -l}; the
/// real embedding has one coordinate per self-paired rep and two otherwise.
const std::vector<std::array<int, 4>>& weight2_reps(int d);

/// Real coordinates of a Hermitian two-qudit operator in the same basis
/// (sqrt(2) Re c_l, sqrt(2) Im c_l per pair; c_l for self-paired labels).
RVector weight2_real_vec(const CMatrix& tau, int d);

/// Appendix-A self test: C' = P_((d+1)/2|0) C_(F0,0) P^dag with
/// F0 = [[-1,0],[-1,-1]] has (|0> - |1>)/sqrt(2) as eigenvector with
/// eigenvalue -w^k. Throws if the verification fails.
struct EigenvectorCertificate {
    CMatrix cprime;
    cplx eigenvalue;
    int k;  // eigenvalue = -w^k
};

EigenvectorCertificate robust_eigenvector_certificate(int d);

}  // namespace qpoly
