#pragma once

#include "qpoly/clifford.hpp"
#include "qpoly/stabilizer.hpp"
#include "qpoly/wigner.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qpoly {

/// One projector index: Pi_(x1,x2|z1,z2)[k].
using ProjectorTuple = std::array<int, 5>;

enum class WitnessClass { Unknown, Facet, Peak, Interior };

std::string witness_class_str(WitnessClass c);

/// Unit-trace Hermitian d^2 x d^2 witness
/// W = (sum_t Pi_t - ((N-1)/d) I)/d over N distinct projectors.
struct Witness {
    int d = 2;
    CMatrix matrix;
    std::string provenance;         // "code:<id>:u1,...,u_{d+1}" or "tuples"
    std::vector<ProjectorTuple> tuples;  // canonical line representatives, sorted
    WitnessClass classification = WitnessClass::Unknown;
};

/// Canonical line representative of a projector index: the lex-least
/// q-multiple of the label, with k transported along.
ProjectorTuple canonical_tuple(const ProjectorTuple& t, int d);

/// Build the witness from a projector list. Tuples naming the same projector
/// under different line representatives are counted once.
Witness witness_from_tuples(const std::vector<ProjectorTuple>& tuples, int d);

/// Witness from a code and phase point: the weight-2 part of the encoded
/// A(u), normalized to unit trace. Tr(W tau) < 0 certifies E_U non-Clifford.
Witness derive_witness(CodeId code, const PhasePointIndex& u);

/// Exact projector decomposition of a unit-trace witness matrix; throws if
/// the matrix is not a projector sum of the canonical form.
std::vector<ProjectorTuple> tuples_of_witness(const CMatrix& W, int d);

struct FacetReport {
    int saturating_count = 0;
    int rank = 0;
    bool is_facet = false;
    double min_vertex_value = 0.0;
    WitnessClass classification = WitnessClass::Unknown;
    std::vector<double> vertex_values;  // one per Clifford, enumeration order
};

/// Condition 1: <J_C|W|J_C> >= -tol_sat for every Clifford vertex.
/// Condition 2: the saturating vertices' real vectors have rank (d^2-1)^2.
FacetReport certify(const Witness& W, const std::vector<CliffordElement>& cliffords,
                    double tol_sat = 1e-9, double tol_rank = 1e-8);

/// Conjugation orbit {(C_i (x) C_j) W (.)^dag} as canonical tuple lists,
/// computed exactly through the Clifford action on Pauli labels.
std::set<std::vector<ProjectorTuple>> orbit_tuple_sets(
    const Witness& W, const std::vector<CliffordElement>& cliffords);

/// Materialized orbit (use for small d; the qutrit orbits have thousands of
/// members, prefer orbit_tuple_sets there).
std::vector<Witness> orbit(const Witness& W, const std::vector<CliffordElement>& cliffords);

enum class Membership { Inside, Outside, Undetermined };

std::string membership_str(Membership m);

/// Tests tau = (1-p)|J_U><J_U| + p I/d^2 against the given facets.
/// "Inside" is only claimed when the facet set is known to be complete.
Membership gate_membership(const CMatrix& U, double p, const std::vector<Witness>& facets,
                           bool facet_set_complete = false, double tol = 1e-9);

/// Tuple file format: header "# d=<d> offset=unit-trace provenance=<...>",
/// then one "x1 x2 z1 z2 k" line per projector.
Witness load_witness_file(const std::string& path);
void save_witness_file(const Witness& W, const std::string& path);

}  // namespace qpoly
