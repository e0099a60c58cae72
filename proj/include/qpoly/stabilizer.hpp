#pragma once

#include "qpoly/pauli.hpp"

#include <string>
#include <vector>

namespace qpoly {

/// Projector onto the w^k eigenspace of the single-qudit P_(a|b).
/// (a,b) = (0,0) is rejected.
CMatrix projector_single(int a, int b, int k, int d);

/// Projector onto the w^k eigenspace of the two-qudit P_(x1,x2|z1,z2); rank d.
CMatrix projector_two(int x1, int x2, int z1, int z2, int k, int d);

/// All d(d+1) distinct single-qudit stabilizer states (rank-1 projectors),
/// ordered as Z-basis then X, XZ, ..., XZ^{d-1} bases.
std::vector<CMatrix> enumerate_stabilizer_states(int d);

enum class CodeId { B, A, AT };

CodeId code_id_from_string(const std::string& s);
std::string code_id_to_string(CodeId id);

/// Two-qudit stabilizer code with a d-dimensional logical space.
/// Code B: stabilizer P_(0,0|1,1), |jbar> = |j>|-j>.
/// Code A: stabilizer P_(0,0|0,1), |jbar> = |-j>|0>.
/// Code AT: stabilizer P_(0,0|1,0), |jbar> = |0>|-j>.
struct StabilizerCode {
    int d = 2;
    CodeId id = CodeId::B;
    PauliLabel stabilizer;
    PauliLabel logical_label;
    std::vector<CVector> logical_kets;  // d kets of dimension d^2
};

/// Logical basis from the d^2-term group sum (1/d^2) <stab, w^j logical>.
StabilizerCode code_logical_basis(CodeId id, int d);

/// rho[m,n] = <mbar| tau |nbar>, unnormalized d x d output.
CMatrix decode(const CMatrix& tau, const StabilizerCode& code);

/// sum_{m,n} |mbar> rho[m,n] <nbar|, the adjoint of decode.
CMatrix encode(const CMatrix& rho, const StabilizerCode& code);

}  // namespace qpoly
