#include "qpoly/wigner.hpp"

#include "qpoly/stabilizer.hpp"

#include <cmath>

namespace qpoly {

PhasePointIndex::PhasePointIndex(int d_, std::vector<int> u_) : d(d_), u(std::move(u_)) {
    if (!is_prime(d)) throw std::invalid_argument("PhasePointIndex: d must be prime");
    if (u.size() != static_cast<std::size_t>(d + 1))
        throw std::invalid_argument("PhasePointIndex: u must have d+1 components");
    for (auto& v : u) v = mod_pos(v, d);
}

CVector mub_vector(int b, int k, int d) {
    b = mod_pos(b, d);
    k = mod_pos(k, d);
    CVector psi(d);
    if (d == 2) {
        // eigenvectors of X and of P_(1|1) = sigma_y
        psi(0) = 1.0;
        psi(1) = (b == 0) ? cplx(k == 0 ? 1.0 : -1.0, 0.0)
                          : cplx(0.0, k == 0 ? 1.0 : -1.0);
        return psi / std::sqrt(2.0);
    }
    for (int m = 0; m < d; ++m) {
        long long s_m = 0;
        for (int q = m; q < d; ++q) s_m += q;
        psi(m) = omega_pow(d, 1LL * k * (d - m) - 1LL * b * s_m);
    }
    return psi / std::sqrt(static_cast<double>(d));
}

PhasePointOperator phase_point_operator(const PhasePointIndex& u) {
    const int d = u.d;
    CMatrix M = projector_single(0, 1, u.u[0], d);
    for (int b = 0; b < d; ++b)
        M += projector_single(1, b, u.u[1 + b], d);
    M -= CMatrix::Identity(d, d);
    return PhasePointOperator{u, M / d};
}

double wigner_value(const CMatrix& rho, const PhasePointIndex& u) {
    const int d = u.d;
    if (rho.rows() != d || rho.cols() != d)
        throw std::invalid_argument("wigner_value: shape mismatch");
    cplx t = (rho * phase_point_operator(u).matrix).trace();
    if (std::abs(t.imag()) > 1e-10)
        throw std::runtime_error("wigner_value: non-real expectation");
    return t.real();
}

double wigner_value_coeff(const CMatrix& rho, const PhasePointIndex& u) {
    const int d = u.d;
    if (rho.rows() != d || rho.cols() != d)
        throw std::invalid_argument("wigner_value_coeff: shape mismatch");
    PauliCoefficients cf = pauli_coefficients(rho, d, 1);
    cplx total = cf.at(0, 0, 0, 0);
    // bases: (a,b) = (0,1) indexed by u[0], then (1,b) indexed by u[1+b]
    for (int i = 0; i <= d; ++i) {
        int a = (i == 0) ? 0 : 1;
        int b = (i == 0) ? 1 : i - 1;
        int k = u.u[i];
        for (int p = 1; p < d; ++p) {
            if (d == 2) {
                total += (k == 0 ? 1.0 : -1.0) * cf.at(a, 0, b, 0);
            } else {
                long long phi = 1LL * half_mod(d) * (1LL * p * (p - 1) % d) % d * (1LL * a * b % d);
                total += omega_pow(d, 1LL * p * k - phi) *
                         cf.at(mod_pos(p * a, d), 0, mod_pos(p * b, d), 0);
            }
        }
    }
    total /= static_cast<double>(d * d);
    if (std::abs(total.imag()) > 1e-9)
        throw std::runtime_error("wigner_value_coeff: non-real expectation");
    return total.real();
}

NegativityResult negativity_full(const CMatrix& rho, int d) {
    if (rho.rows() != d || rho.cols() != d)
        throw std::invalid_argument("negativity: shape mismatch");
    // The minimum over u factorizes: A(u) picks one projector per basis, so
    // min_u Tr(rho A(u)) = (sum_i min_k Tr(rho Pi_i[k]) - 1)/d.
    std::vector<int> argmin(d + 1, 0);
    double total = 0.0;
    for (int i = 0; i <= d; ++i) {
        int a = (i == 0) ? 0 : 1;
        int b = (i == 0) ? 1 : i - 1;
        double best = 0.0;
        int bestk = 0;
        for (int k = 0; k < d; ++k) {
            double v = (rho * projector_single(a, b, k, d)).trace().real();
            if (k == 0 || v < best) {
                best = v;
                bestk = k;
            }
        }
        total += best;
        argmin[i] = bestk;
    }
    NegativityResult res;
    res.min_value = (total - 1.0) / d;
    res.negativity = res.min_value < 0.0 ? -res.min_value : 0.0;
    res.argmin = PhasePointIndex(d, argmin);
    return res;
}

double negativity(const CMatrix& rho, int d) { return negativity_full(rho, d).negativity; }

double robustness_from_negativity(double neg, int d) {
    return 1.0 - 1.0 / (d * d * neg + 1.0);
}

double state_robustness(const CMatrix& rho, int d) {
    return robustness_from_negativity(negativity(rho, d), d);
}

PhasePointIndex maximally_negative_index(int d) {
    std::vector<int> u(d + 1, 0);
    u[0] = half_mod(d);
    return PhasePointIndex(d, u);
}

std::vector<CVector> robust_state_family(int d) {
    if (d == 2 || !is_prime(d))
        throw std::invalid_argument("robust_state_family: d must be an odd prime");
    PhasePointOperator A = phase_point_operator(maximally_negative_index(d));
    EigResult eig = hermitian_eig(A.matrix);
    const double lam = -1.0 / d;
    std::vector<CVector> space;
    for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i)
        if (std::abs(eig.eigenvalues(i) - lam) <= 1e-9) space.push_back(eig.eigenvectors.col(i));
    if (static_cast<int>(space.size()) != (d - 1) / 2)
        throw std::runtime_error("robust_state_family: unexpected -1/d eigenspace dimension");

    // Deterministic basis seeded with nu1 = (|0> - |1>)/sqrt(2), which lies
    // in the eigenspace; remaining directions Gram-Schmidt against it.
    CVector nu1 = CVector::Zero(d);
    nu1(0) = 1.0 / std::sqrt(2.0);
    nu1(1) = -1.0 / std::sqrt(2.0);
    CVector proj = CVector::Zero(d);
    for (const auto& v : space) proj += v * v.dot(nu1);
    if ((proj - nu1).norm() > 1e-9)
        throw std::runtime_error("robust_state_family: nu1 not in -1/d eigenspace");
    std::vector<CVector> basis{nu1};
    for (const auto& v : space) {
        CVector w = v;
        for (const auto& b : basis) w -= b * b.dot(w);
        if (w.norm() > 1e-6) basis.push_back(w.normalized());
        if (static_cast<int>(basis.size()) == (d - 1) / 2) break;
    }
    if (static_cast<int>(basis.size()) != (d - 1) / 2)
        throw std::runtime_error("robust_state_family: basis construction failed");

    std::vector<CVector> family;
    for (int x = 0; x < d; ++x)
        for (int z = 0; z < d; ++z) {
            CMatrix D = pauli_matrix(PauliLabel::single(d, x, z));
            for (const auto& b : basis) {
                CVector s = D * b;
                bool dup = false;
                for (const auto& f : family)
                    if (std::abs(std::abs(f.dot(s)) - 1.0) < 1e-9) {
                        dup = true;
                        break;
                    }
                if (!dup) family.push_back(s);
            }
        }
    if (static_cast<int>(family.size()) != d * d * (d - 1) / 2)
        throw std::runtime_error("robust_state_family: unexpected family size");
    return family;
}

}  // namespace qpoly
