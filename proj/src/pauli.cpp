#include "qpoly/pauli.hpp"

#include <sstream>

namespace qpoly {

PauliLabel PauliLabel::single(int d, int x, int z, int c) {
    if (!is_prime(d)) throw std::invalid_argument("PauliLabel: d must be prime");
    PauliLabel l;
    l.d = d;
    l.n = 1;
    l.x = {mod_pos(x, d), 0};
    l.z = {mod_pos(z, d), 0};
    l.c = mod_pos(c, l.phase_modulus());
    return l;
}

PauliLabel PauliLabel::two(int d, int x1, int x2, int z1, int z2, int c) {
    if (!is_prime(d)) throw std::invalid_argument("PauliLabel: d must be prime");
    PauliLabel l;
    l.d = d;
    l.n = 2;
    l.x = {mod_pos(x1, d), mod_pos(x2, d)};
    l.z = {mod_pos(z1, d), mod_pos(z2, d)};
    l.c = mod_pos(c, l.phase_modulus());
    return l;
}

cplx PauliLabel::phase() const {
    if (d == 2) {
        static const cplx i_pows[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        return i_pows[mod_pos(c, 4)];
    }
    return omega_pow(d, c);
}

namespace {

// Single-qudit displacement X^a Z^b (times i^{ab} for d = 2).
CMatrix displacement1(int d, int a, int b) {
    CMatrix M = CMatrix::Zero(d, d);
    for (int j = 0; j < d; ++j)
        M(mod_pos(j + a, d), j) = omega_pow(d, 1LL * b * j);
    if (d == 2 && (a & 1) && (b & 1)) M *= cplx(0, 1);
    return M;
}

}  // namespace

CMatrix pauli_matrix(const PauliLabel& l) {
    CMatrix M = displacement1(l.d, l.x[0], l.z[0]);
    if (l.n == 2) {
        CMatrix M2 = displacement1(l.d, l.x[1], l.z[1]);
        CMatrix K(l.d * l.d, l.d * l.d);
        for (int r = 0; r < l.d; ++r)
            for (int c = 0; c < l.d; ++c)
                K.block(r * l.d, c * l.d, l.d, l.d) = M(r, c) * M2;
        M = std::move(K);
    }
    return l.phase() * M;
}

int symplectic_product(const PauliLabel& l1, const PauliLabel& l2) {
    if (l1.d != l2.d || l1.n != l2.n)
        throw std::invalid_argument("symplectic_product: dimension mismatch");
    long long s = 0;
    for (int i = 0; i < l1.n; ++i)
        s += 1LL * l1.x[i] * l2.z[i] - 1LL * l2.x[i] * l1.z[i];
    return mod_pos(s, l1.d);
}

PauliLabel pauli_power(const PauliLabel& l, int m) {
    PauliLabel r = l;
    if (l.d == 2) {
        int mm = mod_pos(m, 2);  // Hermitian convention: P^2 = I up to c
        for (int i = 0; i < l.n; ++i) {
            r.x[i] = mm * l.x[i];
            r.z[i] = mm * l.z[i];
        }
        r.c = mod_pos(1LL * l.c * m, 4);
        return r;
    }
    int d = l.d;
    long long xz = 0;
    for (int i = 0; i < l.n; ++i) xz += 1LL * l.x[i] * l.z[i];
    // (P)^m = w^{(1/2) m(m-1) x.z} P_(mx|mz), 1/2 = (d+1)/2 mod d
    long long extra = 1LL * half_mod(d) * mod_pos(1LL * m * (m - 1), d) % d * mod_pos(xz, d);
    for (int i = 0; i < l.n; ++i) {
        r.x[i] = mod_pos(1LL * m * l.x[i], d);
        r.z[i] = mod_pos(1LL * m * l.z[i], d);
    }
    r.c = mod_pos(1LL * l.c * m + extra, d);
    return r;
}

PauliLabel pauli_compose(const PauliLabel& l1, const PauliLabel& l2) {
    if (l1.d != l2.d || l1.n != l2.n)
        throw std::invalid_argument("pauli_compose: dimension mismatch");
    int d = l1.d;
    PauliLabel r = l1;
    if (d == 2) {
        // i^{x1.z1} i^{x2.z2} (-1)^{z1.x2} = i^{(x1+x2).(z1+z2) mod 4 correction}
        long long c4 = l1.c + l2.c;
        for (int i = 0; i < l1.n; ++i) {
            c4 += 1LL * l1.x[i] * l1.z[i] + 1LL * l2.x[i] * l2.z[i] + 2LL * l1.z[i] * l2.x[i];
            int xs = mod_pos(l1.x[i] + l2.x[i], 2);
            int zs = mod_pos(l1.z[i] + l2.z[i], 2);
            c4 -= 1LL * xs * zs;
            r.x[i] = xs;
            r.z[i] = zs;
        }
        r.c = mod_pos(c4, 4);
        return r;
    }
    // X^x Z^z X^x' Z^z' = w^{z.x'} X^{x+x'} Z^{z+z'}
    long long c = l1.c + l2.c;
    for (int i = 0; i < l1.n; ++i) {
        c += 1LL * l1.z[i] * l2.x[i];
        r.x[i] = mod_pos(l1.x[i] + l2.x[i], d);
        r.z[i] = mod_pos(l1.z[i] + l2.z[i], d);
    }
    r.c = mod_pos(c, d);
    return r;
}

std::string label_str(const PauliLabel& l) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < l.n; ++i) os << (i ? "," : "") << l.x[i];
    os << "|";
    for (int i = 0; i < l.n; ++i) os << (i ? "," : "") << l.z[i];
    os << ")[" << l.c << "]";
    return os.str();
}

cplx PauliCoefficients::at(int x1, int x2, int z1, int z2) const {
    auto it = c.find({x1, x2, z1, z2});
    return it == c.end() ? cplx(0, 0) : it->second;
}

PauliCoefficients pauli_coefficients(const CMatrix& rho, int d, int n) {
    int dim = 1;
    for (int i = 0; i < n; ++i) dim *= d;
    if (rho.rows() != dim || rho.cols() != dim)
        throw std::invalid_argument("pauli_coefficients: shape mismatch");
    PauliCoefficients out;
    out.d = d;
    out.n = n;
    auto scan = [&](const PauliLabel& l, const std::array<int, 4>& key) {
        CMatrix P = pauli_matrix(l);
        out.c[key] = (P.adjoint() * rho).trace();
    };
    if (n == 1) {
        for (int x = 0; x < d; ++x)
            for (int z = 0; z < d; ++z)
                scan(PauliLabel::single(d, x, z), {x, 0, z, 0});
    } else {
        for (int x1 = 0; x1 < d; ++x1)
            for (int x2 = 0; x2 < d; ++x2)
                for (int z1 = 0; z1 < d; ++z1)
                    for (int z2 = 0; z2 < d; ++z2)
                        scan(PauliLabel::two(d, x1, x2, z1, z2), {x1, x2, z1, z2});
    }
    return out;
}

CMatrix from_pauli_coefficients(const PauliCoefficients& coeffs) {
    int d = coeffs.d, n = coeffs.n;
    int dim = n == 1 ? d : d * d;
    CMatrix rho = CMatrix::Zero(dim, dim);
    for (const auto& [key, val] : coeffs.c) {
        PauliLabel l = n == 1 ? PauliLabel::single(d, key[0], key[2])
                              : PauliLabel::two(d, key[0], key[1], key[2], key[3]);
        rho += val * pauli_matrix(l);
    }
    return rho / static_cast<double>(dim);
}

}  // namespace qpoly
