#pragma once

#include "qpoly/types.hpp"

#include <array>
#include <map>

namespace qpoly {

/// Symplectic label of a (multi-)qudit Pauli operator w^c X^x Z^z.
/// For d = 2 the displacement part uses the Hermitian convention
/// P_(a|b) = i^{ab} sx^a sz^b per factor, and the phase exponent c lives in
/// Z_4 (powers of i); for odd prime d the phase is w^c with c in Z_d.
struct PauliLabel {
    int d = 2;
    int n = 1;  // 1 or 2 qudits
    std::array<int, 2> x{0, 0};
    std::array<int, 2> z{0, 0};
    int c = 0;  // phase exponent

    static PauliLabel single(int d, int x, int z, int c = 0);
    static PauliLabel two(int d, int x1, int x2, int z1, int z2, int c = 0);

    int phase_modulus() const { return d == 2 ? 4 : d; }
    cplx phase() const;
    bool is_identity_label() const { return x[0] == 0 && x[1] == 0 && z[0] == 0 && z[1] == 0; }
    int dot_xz() const { return mod_pos(1LL * x[0] * z[0] + 1LL * x[1] * z[1], d); }

    bool operator==(const PauliLabel& o) const = default;
};

/// Matrix realization, d^n x d^n. Qudit 1 is the left tensor factor.
CMatrix pauli_matrix(const PauliLabel& label);

/// x.z' - x'.z mod d; zero iff the realizations commute.
int symplectic_product(const PauliLabel& l1, const PauliLabel& l2);

/// Label of P^m with the exact phase: x -> mx, z -> mz,
/// c -> c*m + (1/2) m(m-1) x.z (odd d). For d = 2 the Hermitian convention
/// gives P^2 = I, so powers reduce mod 2.
PauliLabel pauli_power(const PauliLabel& label, int m);

/// Label of the product P1 P2 with tracked phase.
PauliLabel pauli_compose(const PauliLabel& l1, const PauliLabel& l2);

/// Serialization used by the CLI: "(x1,x2|z1,z2)[c]".
std::string label_str(const PauliLabel& label);

struct PauliCoefficients {
    int d = 2;
    int n = 1;
    // key: (x1,x2,z1,z2), single-qudit labels use x2 = z2 = 0
    std::map<std::array<int, 4>, cplx> c;

    cplx at(int x1, int x2, int z1, int z2) const;
};

/// c_(x|z) = Tr(P_(x|z)^dag rho) for all d^(2n) labels.
PauliCoefficients pauli_coefficients(const CMatrix& rho, int d, int n);

/// rho = (1/d^n) sum c_(x|z) P_(x|z).
CMatrix from_pauli_coefficients(const PauliCoefficients& coeffs);

}  // namespace qpoly
