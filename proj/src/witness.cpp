#include "qpoly/witness.hpp"

#include "qpoly/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace qpoly {

std::string witness_class_str(WitnessClass c) {
    switch (c) {
        case WitnessClass::Unknown: return "unknown";
        case WitnessClass::Facet: return "facet";
        case WitnessClass::Peak: return "peak";
        case WitnessClass::Interior: return "interior";
    }
    throw std::logic_error("bad WitnessClass");
}

ProjectorTuple canonical_tuple(const ProjectorTuple& t, int d) {
    const int x1 = mod_pos(t[0], d), x2 = mod_pos(t[1], d);
    const int z1 = mod_pos(t[2], d), z2 = mod_pos(t[3], d);
    const int k = mod_pos(t[4], d);
    if (x1 == 0 && x2 == 0 && z1 == 0 && z2 == 0)
        throw std::invalid_argument("canonical_tuple: identity label");
    const int xz = mod_pos(1LL * x1 * z1 + 1LL * x2 * z2, d);
    ProjectorTuple best{};
    bool have = false;
    for (int q = 1; q < d; ++q) {
        // Pi_(l)[k] = Pi_(q l)[q k - q(q-1)/2 x.z]
        ProjectorTuple cand{mod_pos(1LL * q * x1, d), mod_pos(1LL * q * x2, d),
                            mod_pos(1LL * q * z1, d), mod_pos(1LL * q * z2, d),
                            mod_pos(1LL * q * k - 1LL * (q * (q - 1) / 2) * xz, d)};
        if (!have || cand < best) {
            best = cand;
            have = true;
        }
    }
    return best;
}

Witness witness_from_tuples(const std::vector<ProjectorTuple>& tuples, int d) {
    if (tuples.empty()) throw std::invalid_argument("witness_from_tuples: empty tuple list");
    std::set<ProjectorTuple> canon;
    for (const auto& t : tuples) canon.insert(canonical_tuple(t, d));
    const int dim = d * d;
    CMatrix S = CMatrix::Zero(dim, dim);
    for (const auto& t : canon) S += projector_two(t[0], t[1], t[2], t[3], t[4], d);
    const double N = static_cast<double>(canon.size());
    Witness W;
    W.d = d;
    W.matrix = (S - (N - 1.0) / d * CMatrix::Identity(dim, dim)) / d;
    W.provenance = "tuples";
    W.tuples.assign(canon.begin(), canon.end());
    return W;
}

std::vector<ProjectorTuple> tuples_of_witness(const CMatrix& Wm, int d) {
    const int dim = d * d;
    if (Wm.rows() != dim || Wm.cols() != dim)
        throw std::invalid_argument("tuples_of_witness: shape mismatch");
    std::vector<ProjectorTuple> out;
    for (int x1 = 0; x1 < d; ++x1)
        for (int x2 = 0; x2 < d; ++x2)
            for (int z1 = 0; z1 < d; ++z1)
                for (int z2 = 0; z2 < d; ++z2) {
                    if (x1 == 0 && x2 == 0 && z1 == 0 && z2 == 0) continue;
                    ProjectorTuple rep = canonical_tuple({x1, x2, z1, z2, 0}, d);
                    if (rep[0] != x1 || rep[1] != x2 || rep[2] != z1 || rep[3] != z2)
                        continue;  // visit each line once, via its representative
                    const int xz = mod_pos(1LL * x1 * z1 + 1LL * x2 * z2, d);
                    // m_q = c_{q l}(W) w^{-q(q-1)/2 x.z} = sum_{k in S_l} w^{-qk}
                    std::vector<cplx> m(d, 0.0);
                    for (int q = 1; q < d; ++q) {
                        PauliLabel lq = PauliLabel::two(d, mod_pos(q * x1, d), mod_pos(q * x2, d),
                                                        mod_pos(q * z1, d), mod_pos(q * z2, d));
                        cplx c = trace_adj_prod(pauli_matrix(lq), Wm);
                        m[q] = c * omega_pow(d, -1LL * (q * (q - 1) / 2) * xz);
                    }
                    // n_k = (s + sum_{q!=0} w^{qk} m_q)/d with s = |S_l| chosen
                    // as the least value making every n_k a nonnegative integer
                    bool solved = false;
                    for (int s = 0; s <= 2 * d && !solved; ++s) {
                        std::vector<int> nk(d);
                        bool ok = true;
                        for (int k = 0; k < d && ok; ++k) {
                            cplx acc = static_cast<double>(s);
                            for (int q = 1; q < d; ++q) acc += omega_pow(d, 1LL * q * k) * m[q];
                            acc /= static_cast<double>(d);
                            double r = acc.real();
                            long long ri = std::llround(r);
                            if (std::abs(acc.imag()) > 1e-6 || std::abs(r - ri) > 1e-6 || ri < 0)
                                ok = false;
                            else
                                nk[k] = static_cast<int>(ri);
                        }
                        if (ok) {
                            for (int k = 0; k < d; ++k)
                                for (int rep_count = 0; rep_count < nk[k]; ++rep_count)
                                    out.push_back({x1, x2, z1, z2, k});
                            solved = true;
                        }
                    }
                    if (!solved)
                        throw std::runtime_error("tuples_of_witness: no projector decomposition");
                }
    std::sort(out.begin(), out.end());
    // verification against the round trip
    Witness rebuilt = witness_from_tuples(out, d);
    if (rebuilt.tuples.size() != out.size() || max_abs_diff(rebuilt.matrix, Wm) > 1e-9)
        throw std::runtime_error("tuples_of_witness: decomposition does not reproduce matrix");
    return out;
}

Witness derive_witness(CodeId code, const PhasePointIndex& u) {
    const int d = u.d;
    StabilizerCode sc = code_logical_basis(code, d);
    CMatrix A = phase_point_operator(u).matrix;
    CMatrix Wfull = encode(A, sc);
    // keep the identity plus both-sides-nontrivial Pauli components; the
    // dropped single-sided terms vanish on every weight-2 state
    const int dim = d * d;
    CMatrix W = CMatrix::Zero(dim, dim);
    for (int x1 = 0; x1 < d; ++x1)
        for (int x2 = 0; x2 < d; ++x2)
            for (int z1 = 0; z1 < d; ++z1)
                for (int z2 = 0; z2 < d; ++z2) {
                    bool id1 = (x1 == 0 && z1 == 0), id2 = (x2 == 0 && z2 == 0);
                    if (id1 != id2) continue;
                    CMatrix P = pauli_matrix(PauliLabel::two(d, x1, x2, z1, z2));
                    cplx c = trace_adj_prod(P, Wfull);
                    if (std::abs(c) < 1e-13) continue;
                    W += c * P / static_cast<double>(dim);
                }
    W /= W.trace().real();

    Witness out;
    out.d = d;
    out.matrix = std::move(W);
    std::ostringstream prov;
    prov << "code:" << code_id_to_string(code) << ":";
    for (std::size_t i = 0; i < u.u.size(); ++i) prov << (i ? "," : "") << u.u[i];
    out.provenance = prov.str();
    out.tuples = tuples_of_witness(out.matrix, d);
    return out;
}

FacetReport certify(const Witness& W, const std::vector<CliffordElement>& cliffords,
                    double tol_sat, double tol_rank) {
    const int d = W.d;
    if (cliffords.empty() || cliffords.front().d != d)
        throw std::invalid_argument("certify: Clifford enumeration dimension mismatch");
    const std::size_t n = cliffords.size();
    FacetReport rep;
    rep.vertex_values.resize(n);
    std::vector<CVector> jstates(n);
    parallel_for(n, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            ChoiVector cv = choi_state(cliffords[i].matrix);
            rep.vertex_values[i] = (cv.j_state.dot(W.matrix * cv.j_state)).real();
            jstates[i] = std::move(cv.j_state);
        }
    });
    rep.min_vertex_value = *std::min_element(rep.vertex_values.begin(), rep.vertex_values.end());
    std::vector<std::size_t> sat;
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(rep.vertex_values[i]) <= tol_sat) sat.push_back(i);
    rep.saturating_count = static_cast<int>(sat.size());

    const int D = (d * d - 1) * (d * d - 1);
    if (!sat.empty()) {
        RMatrix V(sat.size(), D);
        parallel_for(sat.size(), [&](std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) {
                CMatrix tau = jstates[sat[i]] * jstates[sat[i]].adjoint();
                V.row(static_cast<Eigen::Index>(i)) = weight2_real_vec(tau, d).transpose();
            }
        });
        rep.rank = numerical_rank(V, tol_rank);
    }
    bool cond1 = rep.min_vertex_value >= -tol_sat;
    rep.is_facet = cond1 && rep.rank == D;
    rep.classification = !cond1 ? WitnessClass::Interior
                                : (rep.is_facet ? WitnessClass::Facet : WitnessClass::Peak);
    return rep;
}

namespace {

std::vector<ProjectorTuple> conjugate_tuples(const std::vector<ProjectorTuple>& tuples,
                                             const LabelAction& left, const LabelAction& right,
                                             int d) {
    std::vector<ProjectorTuple> out;
    out.reserve(tuples.size());
    for (const auto& t : tuples) {
        const auto& a1 = left(t[0], t[2]);
        const auto& a2 = right(t[1], t[3]);
        // C P C^dag = w^t P' shifts the eigenvalue index: Pi_{l[k]} -> Pi_{l'[k - t1 - t2]}
        out.push_back(canonical_tuple(
            {a1[0], a2[0], a1[1], a2[1], mod_pos(t[4] - a1[2] - a2[2], d)}, d));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::set<std::vector<ProjectorTuple>> orbit_tuple_sets(
    const Witness& W, const std::vector<CliffordElement>& cliffords) {
    const int d = W.d;
    std::vector<ProjectorTuple> base =
        W.tuples.empty() ? tuples_of_witness(W.matrix, d) : W.tuples;
    std::vector<LabelAction> acts(cliffords.size());
    parallel_for(cliffords.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) acts[i] = label_action(cliffords[i].matrix, d);
    });
    std::set<std::vector<ProjectorTuple>> seen;
    for (const auto& aL : acts)
        for (const auto& aR : acts) seen.insert(conjugate_tuples(base, aL, aR, d));
    return seen;
}

std::vector<Witness> orbit(const Witness& W, const std::vector<CliffordElement>& cliffords) {
    std::vector<Witness> out;
    for (const auto& tuples : orbit_tuple_sets(W, cliffords)) {
        Witness member = witness_from_tuples(tuples, W.d);
        member.classification = W.classification;
        out.push_back(std::move(member));
    }
    return out;
}

std::string membership_str(Membership m) {
    switch (m) {
        case Membership::Inside: return "inside";
        case Membership::Outside: return "outside";
        case Membership::Undetermined: return "undetermined";
    }
    throw std::logic_error("bad Membership");
}

Membership gate_membership(const CMatrix& U, double p, const std::vector<Witness>& facets,
                           bool facet_set_complete, double tol) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gate_membership: p outside [0,1]");
    if (facets.empty()) throw std::invalid_argument("gate_membership: no facets given");
    const int d = facets.front().d;
    ChoiVector cv = choi_state(U);
    CMatrix tau = (1.0 - p) * (cv.j_state * cv.j_state.adjoint()) +
                  p / (d * d) * CMatrix::Identity(d * d, d * d);
    for (const auto& W : facets) {
        double v = trace_adj_prod(W.matrix, tau).real();
        if (v < -tol) return Membership::Outside;
    }
    return facet_set_complete ? Membership::Inside : Membership::Undetermined;
}

Witness load_witness_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open witness file: " + path);
    std::string line;
    int lineno = 0;
    int d = 0;
    std::string provenance = "tuples";
    std::vector<ProjectorTuple> tuples;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string tok;
            while (hs >> tok) {
                if (tok.rfind("d=", 0) == 0) d = std::stoi(tok.substr(2));
                if (tok.rfind("provenance=", 0) == 0) provenance = tok.substr(11);
            }
            continue;
        }
        std::istringstream ls(line);
        ProjectorTuple t{};
        if (!(ls >> t[0] >> t[1] >> t[2] >> t[3] >> t[4]))
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected 5 integers 'x1 x2 z1 z2 k'");
        std::string rest;
        if (ls >> rest)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": trailing content '" + rest + "'");
        tuples.push_back(t);
    }
    if (d == 0) throw std::invalid_argument(path + ": missing '# d=<d> ...' header");
    if (tuples.empty()) throw std::invalid_argument(path + ": no projector tuples");
    Witness W = witness_from_tuples(tuples, d);
    W.provenance = provenance;
    return W;
}

void save_witness_file(const Witness& W, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open for writing: " + path);
    out << "# d=" << W.d << " offset=unit-trace provenance="
        << (W.provenance.empty() ? "tuples" : W.provenance) << "\n";
    const auto& tuples = W.tuples.empty() ? tuples_of_witness(W.matrix, W.d) : W.tuples;
    for (const auto& t : tuples)
        out << t[0] << " " << t[1] << " " << t[2] << " " << t[3] << " " << t[4] << "\n";
}

}  // namespace qpoly
