#include "qpoly/gatesearch.hpp"

#include "qpoly/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <random>

namespace qpoly {

namespace {

void require_unit_trace(const Witness& W) {
    if (std::abs(W.matrix.trace().real() - 1.0) > 1e-8)
        throw std::invalid_argument("witness is not unit trace; normalize first");
}

}  // namespace

double gate_value(const CMatrix& U, const Witness& W) {
    require_unit_trace(W);
    ChoiVector cv = choi_state(U);
    cplx v = cv.j_state.dot(W.matrix * cv.j_state);
    if (std::abs(v.imag()) > 1e-10)
        throw std::runtime_error("gate_value: non-real expectation");
    return v.real();
}

double gate_robustness(const CMatrix& U, const Witness& W) {
    double v = gate_value(U, W);
    if (v >= 0.0)
        throw std::invalid_argument("gate_robustness: nonnegative gate value, no threshold certified");
    const int d = W.d;
    return 1.0 - 1.0 / (d * d * std::abs(v) + 1.0);
}

double eigen_bound(const Witness& W) {
    require_unit_trace(W);
    EigResult eig = hermitian_eig(W.matrix);
    double lmin = eig.eigenvalues(0);
    if (lmin >= 0.0) return 0.0;
    const int d = W.d;
    return 1.0 - 1.0 / (d * d * std::abs(lmin) + 1.0);
}

namespace {

// Deterministic uniforms/normals built on mt19937_64 so results do not
// depend on the standard library's distribution implementations.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double uniform() {
        return (gen() >> 11) * (1.0 / 9007199254740992.0);  // [0,1), 53 bits
    }
    double normal() {
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t idx) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (idx + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// <J_U|W|J_U> restricted to monomial U[perm[a], a] = e^{i theta_a}:
// value = (1/d) z^dag M z with M_{a,a'} = W[(a, perm(a)), (a', perm(a'))].
CMatrix monomial_form(const CMatrix& Wm, const std::vector<int>& perm, int d) {
    CMatrix M(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            M(a, b) = Wm(a * d + perm[a], b * d + perm[b]);
    return M / static_cast<double>(d);
}

double phase_descent(const CMatrix& M, CVector& z, int max_iters, double tol) {
    const int d = static_cast<int>(M.rows());
    auto value = [&](const CVector& zz) { return zz.dot(M * zz).real(); };
    double prev = value(z);
    for (int it = 0; it < max_iters; ++it) {
        for (int a = 0; a < d; ++a) {
            cplx g = 0.0;
            for (int b = 0; b < d; ++b)
                if (b != a) g += M(a, b) * z(b);
            if (std::abs(g) > 1e-15) z(a) = -g / std::abs(g);
        }
        double cur = value(z);
        if (prev - cur < tol) return cur;
        prev = cur;
    }
    return prev;
}

struct NmResult {
    RVector x;
    double value;
};

// Standard Nelder-Mead simplex minimization.
NmResult nelder_mead(const std::function<double(const RVector&)>& f, const RVector& x0,
                     double scale, int max_iters, double tol) {
    const int n = static_cast<int>(x0.size());
    std::vector<RVector> xs(n + 1, x0);
    std::vector<double> fs(n + 1);
    for (int i = 1; i <= n; ++i) xs[i](i - 1) += scale;
    for (int i = 0; i <= n; ++i) fs[i] = f(xs[i]);
    std::vector<int> order(n + 1);
    for (int it = 0; it < max_iters; ++it) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return fs[a] < fs[b]; });
        int best = order[0], worst = order[n], second = order[n - 1];
        if (fs[worst] - fs[best] < tol) break;
        RVector centroid = RVector::Zero(n);
        for (int i = 0; i <= n; ++i)
            if (i != worst) centroid += xs[i];
        centroid /= n;
        RVector refl = centroid + (centroid - xs[worst]);
        double fr = f(refl);
        if (fr < fs[best]) {
            RVector exp_ = centroid + 2.0 * (centroid - xs[worst]);
            double fe = f(exp_);
            if (fe < fr) { xs[worst] = exp_; fs[worst] = fe; }
            else { xs[worst] = refl; fs[worst] = fr; }
        } else if (fr < fs[second]) {
            xs[worst] = refl;
            fs[worst] = fr;
        } else {
            RVector con = centroid + 0.5 * (xs[worst] - centroid);
            double fc = f(con);
            if (fc < fs[worst]) { xs[worst] = con; fs[worst] = fc; }
            else {
                for (int i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    xs[i] = xs[best] + 0.5 * (xs[i] - xs[best]);
                    fs[i] = f(xs[i]);
                }
            }
        }
    }
    int best = 0;
    for (int i = 1; i <= n; ++i)
        if (fs[i] < fs[best]) best = i;
    return NmResult{xs[best], fs[best]};
}

CMatrix unitary_from_params(const RVector& theta, int d) {
    CMatrix H = CMatrix::Zero(d, d);
    int idx = 0;
    for (int j = 0; j < d; ++j) H(j, j) = theta(idx++);
    const double s = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            H(j, k) += s * theta(idx);
            H(k, j) += s * theta(idx);
            ++idx;
            H(j, k) += cplx(0, s) * theta(idx);
            H(k, j) -= cplx(0, s) * theta(idx);
            ++idx;
        }
    EigResult eig = hermitian_eig(H);
    CVector phases(d);
    for (int j = 0; j < d; ++j)
        phases(j) = std::polar(1.0, eig.eigenvalues(j));
    return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

}  // namespace

GateSearchResult optimize_gate(const Witness& W, const GateSearchConfig& config) {
    require_unit_trace(W);
    const int d = W.d;
    GateSearchResult best;
    best.value = std::numeric_limits<double>::infinity();

    const bool run_monomial = config.parametrization != GateParametrization::GeneralUnitary;
    const bool run_general = config.parametrization != GateParametrization::Monomial;

    if (run_monomial) {
        std::vector<int> perm(d);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            CMatrix M = monomial_form(W.matrix, perm, d);
            CVector bestz = CVector::Ones(d);
            double bestv = phase_descent(M, bestz, config.max_iters, config.step_tol);
            for (int r = 0; r < config.restarts; ++r) {
                Rng rng(mix_seed(config.seed, static_cast<std::uint64_t>(r)));
                CVector z(d);
                for (int a = 0; a < d; ++a) z(a) = std::polar(1.0, 2.0 * M_PI * rng.uniform());
                double v = phase_descent(M, z, config.max_iters, config.step_tol);
                if (v < bestv - 1e-15) {
                    bestv = v;
                    bestz = z;
                }
            }
            if (bestv < best.value - 1e-15) {
                CMatrix U = CMatrix::Zero(d, d);
                for (int a = 0; a < d; ++a) U(perm[a], a) = bestz(a);
                best.unitary = U;
                best.value = bestv;
                best.mode = "monomial";
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    if (run_general) {
        const int nparams = d * d;
        auto objective = [&](const RVector& theta) {
            CMatrix U = unitary_from_params(theta, d);
            ChoiVector cv = choi_state(U);
            return cv.j_state.dot(W.matrix * cv.j_state).real();
        };
        std::vector<double> values(config.restarts);
        std::vector<RVector> points(config.restarts);
        parallel_for(static_cast<std::size_t>(config.restarts),
                     [&](std::size_t lo, std::size_t hi) {
            for (std::size_t r = lo; r < hi; ++r) {
                Rng rng(mix_seed(config.seed ^ 0x5bd1e995ULL, r));
                RVector x0(nparams);
                for (int i = 0; i < nparams; ++i) x0(i) = rng.normal();
                NmResult nm = nelder_mead(objective, x0, 0.5, config.max_iters, config.step_tol);
                values[r] = nm.value;
                points[r] = nm.x;
            }
        });
        // min with lowest restart index winning ties
        int argbest = 0;
        for (int r = 1; r < config.restarts; ++r)
            if (values[r] < values[argbest] - 1e-15) argbest = r;
        if (values[argbest] < best.value - 1e-15) {
            best.unitary = unitary_from_params(points[argbest], d);
            best.value = values[argbest];
            best.mode = "general-unitary";
        }
    }
    return best;
}

CMatrix load_unitary_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open unitary file: " + path);
    nlohmann::json j;
    in >> j;
    const int d = j.at("d").get<int>();
    const auto& m = j.at("matrix");
    if (static_cast<int>(m.size()) != d)
        throw std::invalid_argument(path + ": matrix row count != d");
    CMatrix U(d, d);
    for (int r = 0; r < d; ++r) {
        if (static_cast<int>(m[r].size()) != d)
            throw std::invalid_argument(path + ": matrix column count != d");
        for (int c = 0; c < d; ++c)
            U(r, c) = cplx(m[r][c][0].get<double>(), m[r][c][1].get<double>());
    }
    return U;
}

TableOneRow table_one(int d, const std::string& data_dir) {
    TableOneRow row;
    row.d = d;
    Witness W;
    CMatrix Uopt;
    switch (d) {
        case 2: {
            CMatrix T(2, 2);
            // Bloch direction (1,1,1)/sqrt(3)
            const double s = 1.0 / std::sqrt(3.0);
            T << cplx(1 + s, 0), cplx(s, -s), cplx(s, s), cplx(1 - s, 0);
            T /= 2.0;
            row.state_negativity = negativity(T, 2);
            W = derive_witness(CodeId::B, PhasePointIndex(2, {0, 0, 0}));
            Uopt = load_unitary_json(data_dir + "/uopt2.json");
            break;
        }
        case 3:
        case 5:
        case 7: {
            auto family = robust_state_family(d);
            const CVector& nu = family.front();
            row.state_negativity = negativity(nu * nu.adjoint(), d);
            if (d == 7) {
                W = derive_witness(CodeId::B, PhasePointIndex(7, {0, 0, 0, 3, 2, 4, 2, 3}));
            } else {
                W = load_witness_file(data_dir + (d == 3 ? "/wb3_3.tuples" : "/wb5.tuples"));
            }
            Uopt = load_unitary_json(data_dir + "/uopt" + std::to_string(d) + ".json");
            break;
        }
        default:
            throw std::invalid_argument("table_one: d must be one of 2, 3, 5, 7");
    }
    row.p_star_state = robustness_from_negativity(row.state_negativity, d);
    row.gate_value = gate_value(Uopt, W);
    row.p_star_gate = gate_robustness(Uopt, W);
    return row;
}

}  // namespace qpoly
