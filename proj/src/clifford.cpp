#include "qpoly/clifford.hpp"

#include "qpoly/linalg.hpp"

#include <cmath>
#include <cstdio>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace qpoly {

CMatrix canonical_phase(const CMatrix& U) {
    for (Eigen::Index c = 0; c < U.cols(); ++c)
        for (Eigen::Index r = 0; r < U.rows(); ++r)
            if (std::abs(U(r, c)) > 1e-9)
                return U / (U(r, c) / std::abs(U(r, c)));
    return U;
}

std::string matrix_key(const CMatrix& U, int decimals) {
    CMatrix C = canonical_phase(U);
    const double scale = std::pow(10.0, decimals);
    std::string key;
    key.reserve(static_cast<std::size_t>(C.size()) * 16);
    char buf[40];
    for (Eigen::Index c = 0; c < C.cols(); ++c)
        for (Eigen::Index r = 0; r < C.rows(); ++r) {
            long long re = std::llround(C(r, c).real() * scale);
            long long im = std::llround(C(r, c).imag() * scale);
            if (re == 0) re = 0;  // normalize -0
            if (im == 0) im = 0;
            std::snprintf(buf, sizeof buf, "%lld,%lld;", re, im);
            key += buf;
        }
    return key;
}

namespace {

// tau = exp(i pi (d+1)/d) = w^{(d+1)/2}, order d for odd d.
cplx tau_pow(int d, long long e) { return omega_pow(d, 1LL * half_mod(d) * mod_pos(e, d)); }

CMatrix appleby_cf(const std::array<std::array<int, 2>, 2>& F, int d) {
    int al = mod_pos(F[0][0], d), be = mod_pos(F[0][1], d);
    int ga = mod_pos(F[1][0], d), de = mod_pos(F[1][1], d);
    CMatrix M = CMatrix::Zero(d, d);
    if (be != 0) {
        int binv = inv_mod(be, d);
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                long long e = 1LL * binv * (1LL * al * k * k - 2LL * j * k + 1LL * de * j * j);
                M(j, k) = tau_pow(d, e);
            }
        M /= std::sqrt(static_cast<double>(d));
    } else {
        for (int j = 0; j < d; ++j)
            M(mod_pos(1LL * al * j, d), j) = tau_pow(d, 1LL * al * ga * j * j);
    }
    return M;
}

CMatrix weyl_displacement(const std::array<int, 2>& chi, int d) {
    // D_chi = tau^{chi1 chi2} X^{chi1} Z^{chi2}
    CMatrix P = pauli_matrix(PauliLabel::single(d, chi[0], chi[1]));
    return tau_pow(d, 1LL * chi[0] * chi[1]) * P;
}

}  // namespace

CMatrix clifford_unitary(const std::array<std::array<int, 2>, 2>& F,
                         const std::array<int, 2>& chi, int d) {
    if (d == 2 || !is_prime(d))
        throw std::invalid_argument("clifford_unitary: odd prime d required "
                                    "(qubit gates come from enumerate_clifford)");
    long long det = 1LL * F[0][0] * F[1][1] - 1LL * F[0][1] * F[1][0];
    if (mod_pos(det, d) != 1)
        throw std::invalid_argument("clifford_unitary: det F != 1 mod d");
    return weyl_displacement({mod_pos(chi[0], d), mod_pos(chi[1], d)}, d) * appleby_cf(F, d);
}

namespace {

std::vector<CliffordElement> enumerate_qubit_clifford() {
    CMatrix H(2, 2), S(2, 2);
    H << 1, 1, 1, -1;
    H /= std::sqrt(2.0);
    S << 1, 0, 0, cplx(0, 1);

    std::unordered_map<std::string, CMatrix> seen;
    std::deque<CMatrix> frontier;
    CMatrix I = CMatrix::Identity(2, 2);
    seen.emplace(matrix_key(I), canonical_phase(I));
    frontier.push_back(I);
    while (!frontier.empty()) {
        CMatrix M = frontier.front();
        frontier.pop_front();
        for (const CMatrix* G : {&H, &S}) {
            CMatrix N = canonical_phase(*G * M);
            auto key = matrix_key(N);
            if (seen.emplace(key, N).second) frontier.push_back(N);
        }
    }
    std::vector<CliffordElement> out;
    for (auto& [key, M] : seen) {
        CliffordElement e;
        e.d = 2;
        e.matrix = M;
        // recover F from label action, chi from the phase pattern
        LabelAction act = label_action(M, 2);
        auto ax = act(1, 0);
        auto az = act(0, 1);
        e.F = {{{ax[0], az[0]}, {ax[1], az[1]}}};
        e.chi = {mod_pos(az[2], 2), mod_pos(ax[2], 2)};
        out.push_back(std::move(e));
    }
    // deterministic order regardless of hash iteration
    std::sort(out.begin(), out.end(), [](const CliffordElement& a, const CliffordElement& b) {
        return matrix_key(a.matrix) < matrix_key(b.matrix);
    });
    return out;
}

}  // namespace

std::vector<CliffordElement> enumerate_clifford(int d) {
    if (!is_prime(d)) throw std::invalid_argument("enumerate_clifford: d must be prime");
    if (d == 2) return enumerate_qubit_clifford();
    std::vector<CliffordElement> out;
    out.reserve(static_cast<std::size_t>(d) * d * d * (d * d - 1));
    for (int al = 0; al < d; ++al)
        for (int be = 0; be < d; ++be)
            for (int ga = 0; ga < d; ++ga)
                for (int de = 0; de < d; ++de) {
                    if (mod_pos(1LL * al * de - 1LL * be * ga, d) != 1) continue;
                    std::array<std::array<int, 2>, 2> F{{{al, be}, {ga, de}}};
                    CMatrix CF = appleby_cf(F, d);
                    for (int x = 0; x < d; ++x)
                        for (int z = 0; z < d; ++z) {
                            CliffordElement e;
                            e.d = d;
                            e.F = F;
                            e.chi = {x, z};
                            e.matrix = canonical_phase(weyl_displacement({x, z}, d) * CF);
                            out.push_back(std::move(e));
                        }
                }
    return out;
}

LabelAction label_action(const CMatrix& C, int d) {
    LabelAction act;
    act.d = d;
    act.map.resize(static_cast<std::size_t>(d) * d);
    for (int x = 0; x < d; ++x)
        for (int z = 0; z < d; ++z) {
            if (x == 0 && z == 0) {
                act.map[0] = {0, 0, 0};
                continue;
            }
            CMatrix M = C * pauli_matrix(PauliLabel::single(d, x, z)) * C.adjoint();
            // identify x' from column 0: P_(x'|z')|0> = phase * |x'>
            int xp = 0;
            double best = 0.0;
            for (int r = 0; r < d; ++r)
                if (std::abs(M(r, 0)) > best) {
                    best = std::abs(M(r, 0));
                    xp = r;
                }
            cplx ph = M(xp, 0);
            // P_(x'|z')|1> = i^{x'z'}-free phase w^{z'}|1+x'> relative to column 0
            cplx rel = M((xp + 1) % d, 1) / ph;
            int zp = mod_pos(std::llround(std::arg(rel) * d / (2.0 * M_PI)), d);
            cplx unit = (d == 2 && (xp & 1) && (zp & 1)) ? cplx(0, 1) : cplx(1, 0);
            int t = mod_pos(std::llround(std::arg(ph / unit) * d / (2.0 * M_PI)), d);
            CMatrix expect = omega_pow(d, t) * pauli_matrix(PauliLabel::single(d, xp, zp));
            if (max_abs_diff(M, expect) > 1e-8)
                throw std::runtime_error("label_action: matrix is not Clifford");
            act.map[static_cast<std::size_t>(x) * d + z] = {xp, zp, t};
        }
    return act;
}

const std::vector<std::array<int, 4>>& weight2_reps(int d) {
    static std::unordered_map<int, std::vector<std::array<int, 4>>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    std::vector<std::array<int, 4>> reps;
    for (int x1 = 0; x1 < d; ++x1)
        for (int x2 = 0; x2 < d; ++x2)
            for (int z1 = 0; z1 < d; ++z1)
                for (int z2 = 0; z2 < d; ++z2) {
                    if ((x1 == 0 && z1 == 0) || (x2 == 0 && z2 == 0)) continue;
                    std::array<int, 4> l{x1, x2, z1, z2};
                    std::array<int, 4> neg{mod_pos(-x1, d), mod_pos(-x2, d), mod_pos(-z1, d),
                                           mod_pos(-z2, d)};
                    if (l <= neg) reps.push_back(l);
                }
    return cache.emplace(d, std::move(reps)).first->second;
}

namespace {

struct Weight2Basis {
    std::vector<CMatrix> pauli_conj;  // conj(P_l) per rep, for O(n^2) traces
    std::vector<bool> self_paired;
};

const Weight2Basis& weight2_basis(int d) {
    static std::unordered_map<int, Weight2Basis> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    Weight2Basis basis;
    for (const auto& l : weight2_reps(d)) {
        basis.pauli_conj.push_back(
            pauli_matrix(PauliLabel::two(d, l[0], l[1], l[2], l[3])).conjugate());
        std::array<int, 4> neg{mod_pos(-l[0], d), mod_pos(-l[1], d), mod_pos(-l[2], d),
                               mod_pos(-l[3], d)};
        basis.self_paired.push_back(neg == l);
    }
    return cache.emplace(d, std::move(basis)).first->second;
}

}  // namespace

RVector weight2_real_vec(const CMatrix& tau, int d) {
    const auto& basis = weight2_basis(d);
    const int D = (d * d - 1) * (d * d - 1);
    RVector v(D);
    int idx = 0;
    const double sq2 = std::sqrt(2.0);
    for (std::size_t i = 0; i < basis.pauli_conj.size(); ++i) {
        cplx c = basis.pauli_conj[i].cwiseProduct(tau).sum();  // Tr(P^dag tau)
        if (basis.self_paired[i]) {
            v(idx++) = c.real();
        } else {
            v(idx++) = sq2 * c.real();
            v(idx++) = sq2 * c.imag();
        }
    }
    if (idx != D) throw std::logic_error("weight2_real_vec: dimension mismatch");
    return v;
}

ChoiVector choi_state(const CMatrix& U) {
    const int d = static_cast<int>(U.rows());
    if (U.rows() != U.cols()) throw std::invalid_argument("choi_state: non-square input");
    if ((U.adjoint() * U - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-8)
        throw std::invalid_argument("choi_state: input is not unitary");
    ChoiVector cv;
    cv.d = d;
    cv.j_state = CVector::Zero(d * d);
    for (int j = 0; j < d; ++j)
        cv.j_state.segment(static_cast<Eigen::Index>(j) * d, d) += U.col(j);
    cv.j_state /= std::sqrt(static_cast<double>(d));
    CMatrix tau = cv.j_state * cv.j_state.adjoint();
    cv.real_vec = weight2_real_vec(tau, d);
    return cv;
}

EigenvectorCertificate robust_eigenvector_certificate(int d) {
    if (d == 2 || !is_prime(d))
        throw std::invalid_argument("robust_eigenvector_certificate: odd prime d required");
    std::array<std::array<int, 2>, 2> F0{{{d - 1, 0}, {d - 1, d - 1}}};
    CMatrix CF = clifford_unitary(F0, {0, 0}, d);
    CMatrix P = pauli_matrix(PauliLabel::single(d, half_mod(d), 0));
    CMatrix Cp = P * CF * P.adjoint();
    CVector nu1 = CVector::Zero(d);
    nu1(0) = 1.0 / std::sqrt(2.0);
    nu1(1) = -1.0 / std::sqrt(2.0);
    CVector w = Cp * nu1;
    cplx lambda = w(0) / nu1(0);
    if ((w - lambda * nu1).norm() > 1e-10)
        throw std::runtime_error("robust_eigenvector_certificate: nu1 is not an eigenvector "
                                 "(phase convention mismatch)");
    int k = -1;
    for (int j = 0; j < d; ++j)
        if (std::abs(lambda + omega_pow(d, j)) < 1e-9) k = j;
    if (k < 0)
        throw std::runtime_error("robust_eigenvector_certificate: eigenvalue is not -w^k");
    return EigenvectorCertificate{std::move(Cp), lambda, k};
}

}  // namespace qpoly
