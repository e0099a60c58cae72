#pragma once

#include "qpoly/witness.hpp"

#include <cstdint>
#include <string>

namespace qpoly {

/// <J_U | W | J_U> for a unit-trace witness.
double gate_value(const CMatrix& U, const Witness& W);

/// p*(U) = 1 - 1/(d^2 |<J_U|W|J_U>| + 1); requires a negative gate value.
double gate_robustness(const CMatrix& U, const Witness& W);

/// 1 - 1/(d^2 |lambda_min(W)| + 1) when lambda_min < 0, else 0. Upper-bounds
/// the robustness of the optimal gate against W.
double eigen_bound(const Witness& W);

enum class GateParametrization { Both, GeneralUnitary, Monomial };

struct GateSearchConfig {
    int restarts = 64;
    int max_iters = 400;
    std::uint64_t seed = 1;
    double step_tol = 1e-12;
    GateParametrization parametrization = GateParametrization::Both;
};

struct GateSearchResult {
    CMatrix unitary;
    double value = 0.0;       // best <J_U|W|J_U> found (not certified global)
    std::string mode;         // "monomial" or "general-unitary"
};

/// Derivative-free minimization of <J_U|W|J_U>. Monomial mode scans all
/// permutations with phase coordinate descent; general mode runs
/// Nelder-Mead on U = exp(iH). Deterministic for a fixed config.
GateSearchResult optimize_gate(const Witness& W, const GateSearchConfig& config = {});

struct TableOneRow {
    int d = 0;
    double state_negativity = 0.0;
    double p_star_state = 0.0;
    double gate_value = 0.0;
    double p_star_gate = 0.0;
};

/// Reproduces one row of the summary table from the shipped facet and gate
/// data (deterministic path, no optimizer). data_dir holds the tuple lists
/// and the paper gate matrices.
TableOneRow table_one(int d, const std::string& data_dir);

/// Reads {"d": n, "matrix": [[[re,im],...],...]} (row-major complex pairs).
CMatrix load_unitary_json(const std::string& path);

}  // namespace qpoly
