#include "qpoly/stabilizer.hpp"

#include "qpoly/linalg.hpp"

namespace qpoly {

namespace {

CMatrix eigenspace_projector(const PauliLabel& l, int k) {
    int d = l.d;
    int dim = l.n == 1 ? d : d * d;
    CMatrix M = CMatrix::Zero(dim, dim);
    for (int q = 0; q < d; ++q)
        M += omega_pow(d, -1LL * q * k) * pauli_matrix(pauli_power(l, q));
    return M / d;
}

}  // namespace

CMatrix projector_single(int a, int b, int k, int d) {
    a = mod_pos(a, d);
    b = mod_pos(b, d);
    if (a == 0 && b == 0)
        throw std::invalid_argument("projector_single: identity has no nontrivial eigenspaces");
    return eigenspace_projector(PauliLabel::single(d, a, b), mod_pos(k, d));
}

CMatrix projector_two(int x1, int x2, int z1, int z2, int k, int d) {
    PauliLabel l = PauliLabel::two(d, x1, x2, z1, z2);
    if (l.is_identity_label())
        throw std::invalid_argument("projector_two: identity label");
    return eigenspace_projector(l, mod_pos(k, d));
}

std::vector<CMatrix> enumerate_stabilizer_states(int d) {
    if (!is_prime(d)) throw std::invalid_argument("enumerate_stabilizer_states: d must be prime");
    std::vector<CMatrix> out;
    out.reserve(d * (d + 1));
    for (int k = 0; k < d; ++k) out.push_back(projector_single(0, 1, k, d));
    for (int b = 0; b < d; ++b)
        for (int k = 0; k < d; ++k) out.push_back(projector_single(1, b, k, d));
    return out;
}

CodeId code_id_from_string(const std::string& s) {
    if (s == "B" || s == "b") return CodeId::B;
    if (s == "A" || s == "a") return CodeId::A;
    if (s == "AT" || s == "At" || s == "at") return CodeId::AT;
    throw std::invalid_argument("unknown code id '" + s + "' (expected A, AT or B)");
}

std::string code_id_to_string(CodeId id) {
    switch (id) {
        case CodeId::B: return "B";
        case CodeId::A: return "A";
        case CodeId::AT: return "AT";
    }
    throw std::logic_error("bad CodeId");
}

StabilizerCode code_logical_basis(CodeId id, int d) {
    if (!is_prime(d)) throw std::invalid_argument("code_logical_basis: d must be prime");
    StabilizerCode code;
    code.d = d;
    code.id = id;
    switch (id) {
        case CodeId::B:
            code.stabilizer = PauliLabel::two(d, 0, 0, 1, 1);
            code.logical_label = PauliLabel::two(d, 0, 0, 0, 1);
            break;
        case CodeId::A:
            code.stabilizer = PauliLabel::two(d, 0, 0, 0, 1);
            code.logical_label = PauliLabel::two(d, 0, 0, 1, 0);
            break;
        case CodeId::AT:
            code.stabilizer = PauliLabel::two(d, 0, 0, 1, 0);
            code.logical_label = PauliLabel::two(d, 0, 0, 0, 1);
            break;
    }
    const int dim = d * d;
    for (int j = 0; j < d; ++j) {
        // |jbar><jbar| = (1/d^2) sum_{s,t} (w^j L)^t S^s
        CMatrix proj = CMatrix::Zero(dim, dim);
        for (int t = 0; t < d; ++t) {
            CMatrix Lt = omega_pow(d, 1LL * j * t) * pauli_matrix(pauli_power(code.logical_label, t));
            for (int s = 0; s < d; ++s)
                proj += Lt * pauli_matrix(pauli_power(code.stabilizer, s));
        }
        proj /= static_cast<double>(dim);
        // rank-1 with a computational basis vector carrying coefficient +1
        Eigen::Index idx = 0;
        proj.diagonal().cwiseAbs().maxCoeff(&idx);
        double diag = proj(idx, idx).real();
        if (std::abs(diag - 1.0) > 1e-9)
            throw std::runtime_error("code_logical_basis: group sum is not a basis projector");
        code.logical_kets.push_back(proj.col(idx));
    }
    return code;
}

CMatrix decode(const CMatrix& tau, const StabilizerCode& code) {
    const int d = code.d;
    if (tau.rows() != d * d || tau.cols() != d * d)
        throw std::invalid_argument("decode: shape mismatch");
    CMatrix rho(d, d);
    for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n)
            rho(m, n) = code.logical_kets[m].dot(tau * code.logical_kets[n]);
    return rho;
}

CMatrix encode(const CMatrix& rho, const StabilizerCode& code) {
    const int d = code.d;
    if (rho.rows() != d || rho.cols() != d)
        throw std::invalid_argument("encode: shape mismatch");
    CMatrix tau = CMatrix::Zero(d * d, d * d);
    for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n)
            tau += rho(m, n) * code.logical_kets[m] * code.logical_kets[n].adjoint();
    return tau;
}

}  // namespace qpoly
