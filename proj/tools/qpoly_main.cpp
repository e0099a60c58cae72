// Command-line front end: negativity, robust-states, phase-point, clifford,
// witness, gate and table1 subcommands with JSON reports.

#include "qpoly/gatesearch.hpp"
#include "qpoly/linalg.hpp"
#include "qpoly/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace qpoly;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

#ifndef QPOLY_DEFAULT_DATA_DIR
#define QPOLY_DEFAULT_DATA_DIR "data"
#endif

json complex_pairs(const CMatrix& M) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < M.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < M.cols(); ++c)
            row.push_back({M(r, c).real(), M(r, c).imag()});
        rows.push_back(row);
    }
    return rows;
}

CMatrix matrix_from_json(const json& m) {
    const int rows = static_cast<int>(m.size());
    CMatrix M(rows, rows);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(m[r].size()) != rows)
            throw std::invalid_argument("matrix JSON is not square");
        for (int c = 0; c < rows; ++c)
            M(r, c) = cplx(m[r][c][0].get<double>(), m[r][c][1].get<double>());
    }
    return M;
}

std::vector<int> parse_u(const std::string& s, int d) {
    std::vector<int> u;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) u.push_back(std::stoi(tok));
    if (static_cast<int>(u.size()) != d + 1)
        throw std::invalid_argument("expected " + std::to_string(d + 1) +
                                    " comma-separated components for u");
    return u;
}

struct Report {
    std::string command;
    json parameters = json::object();
    json results = json::object();
    std::uint64_t seed = 0;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void emit() const {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start).count();
        json out{{"command", command},
                 {"parameters", parameters},
                 {"results", results},
                 {"runtime_ms", ms},
                 {"tool_version", kVersion},
                 {"seed", seed}};
        std::cout << out.dump(1) << "\n";
    }
};

CMatrix preset_state(const std::string& preset, int d) {
    if (preset == "maxmixed") return CMatrix::Identity(d, d) / d;
    if (preset == "nu1") {
        CVector v = CVector::Zero(d);
        v(0) = 1.0 / std::sqrt(2.0);
        v(1) = -1.0 / std::sqrt(2.0);
        return v * v.adjoint();
    }
    if (preset == "T") {
        if (d != 2) throw std::invalid_argument("preset T is a qubit state");
        const double s = 1.0 / std::sqrt(3.0);
        CMatrix rho(2, 2);
        rho << cplx(1 + s, 0), cplx(s, -s), cplx(s, s), cplx(1 - s, 0);
        return rho / 2.0;
    }
    throw std::invalid_argument("unknown preset '" + preset + "' (nu1, T, maxmixed)");
}

json facet_report_json(const Witness& W, const FacetReport& rep) {
    EigResult eig = hermitian_eig(W.matrix);
    std::vector<double> spectrum(eig.eigenvalues.data(),
                                 eig.eigenvalues.data() + eig.eigenvalues.size());
    return json{{"saturating", rep.saturating_count},
                {"rank", rep.rank},
                {"is_facet", rep.is_facet},
                {"min_vertex_value", rep.min_vertex_value},
                {"classification", witness_class_str(rep.classification)},
                {"spectrum", spectrum}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Qudit Clifford polytope and discrete Wigner robustness toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --threads/--seed/--data-dir after the subcommand

    unsigned threads = 0;
    std::uint64_t seed = 1;
    std::string data_dir = QPOLY_DEFAULT_DATA_DIR;
    app.add_option("--threads", threads, "worker threads (0 = all cores)")
        ->envname("QPOLY_THREADS");
    app.add_option("--seed", seed, "seed recorded in reports and used by searches");
    app.add_option("--data-dir", data_dir, "directory with shipped tuple/gate files");

    // negativity
    auto* neg = app.add_subcommand("negativity", "negativity and robustness of a state");
    int neg_d = 3;
    std::string neg_preset, neg_state_path;
    neg->add_option("--d", neg_d, "prime dimension")->required();
    neg->add_option("--preset", neg_preset, "nu1 | T | maxmixed");
    neg->add_option("--state", neg_state_path, "JSON file with a density matrix");

    // robust-states
    auto* rob = app.add_subcommand("robust-states", "maximally robust state family");
    int rob_d = 3;
    std::string rob_out;
    rob->add_option("--d", rob_d, "odd prime dimension")->required();
    rob->add_option("--out", rob_out, "write the states as JSON");

    // phase-point
    auto* pp = app.add_subcommand("phase-point", "phase point operator A(u)");
    int pp_d = 3;
    std::string pp_u;
    pp->add_option("--d", pp_d, "prime dimension")->required();
    pp->add_option("--u", pp_u, "comma-separated u in Z_d^{d+1}")->required();

    // clifford enumerate
    auto* cls = app.add_subcommand("clifford", "Clifford group operations");
    auto* cle = cls->add_subcommand("enumerate", "enumerate the single-qudit Clifford group");
    int cle_d = 3;
    std::string cle_out;
    cle->add_option("--d", cle_d, "prime dimension")->required();
    cle->add_option("--out", cle_out, "output JSON path");

    // witness
    auto* wit = app.add_subcommand("witness", "derive / certify / orbit of witnesses");
    auto* wder = wit->add_subcommand("derive", "derive a witness from a code and A(u)");
    int wder_d = 3;
    std::string wder_code = "B", wder_u, wder_out;
    wder->add_option("--d", wder_d, "prime dimension")->required();
    wder->add_option("--code", wder_code, "A | AT | B");
    wder->add_option("--u", wder_u, "phase point index")->required();
    wder->add_option("--out", wder_out, "write the witness tuple file");

    auto* wcert = wit->add_subcommand("certify", "check facet conditions 1 and 2");
    std::string wcert_file;
    double tol_sat = 1e-9, tol_rank = 1e-8;
    wcert->add_option("file", wcert_file, "witness tuple file")->required();
    wcert->add_option("--tol-sat", tol_sat, "saturation tolerance");
    wcert->add_option("--tol-rank", tol_rank, "rank tolerance");

    auto* worb = wit->add_subcommand("orbit", "conjugation orbit of a witness");
    std::string worb_file;
    bool worb_count_only = false;
    worb->add_option("file", worb_file, "witness tuple file")->required();
    worb->add_flag("--count-only", worb_count_only, "emit only the orbit size");

    // gate
    auto* gate = app.add_subcommand("gate", "gate robustness against a facet");
    auto* geval = gate->add_subcommand("eval", "evaluate a unitary against a facet");
    std::string geval_facet, geval_unitary;
    int geval_d = 0;
    geval->add_option("--d", geval_d, "prime dimension (checked against files)");
    geval->add_option("--facet", geval_facet, "witness tuple file")->required();
    geval->add_option("--unitary", geval_unitary, "unitary JSON file")->required();

    auto* gsearch = gate->add_subcommand("search", "search for the most robust gate");
    std::string gsearch_facet, gsearch_mode = "both";
    int gsearch_restarts = 64, gsearch_d = 0;
    gsearch->add_option("--d", gsearch_d, "prime dimension (checked against file)");
    gsearch->add_option("--facet", gsearch_facet, "witness tuple file")->required();
    gsearch->add_option("--restarts", gsearch_restarts, "random restarts");
    gsearch->add_option("--mode", gsearch_mode, "both | monomial | general");

    // table1
    auto* t1 = app.add_subcommand("table1", "reproduce the robustness summary table");
    std::string t1_d = "all", t1_csv;
    t1->add_option("--d", t1_d, "2 | 3 | 5 | 7 | all");
    t1->add_option("--csv", t1_csv, "also write a CSV file");

    try {
        app.parse(argc, argv);
        set_thread_count(threads);
        Report report;
        report.seed = seed;

        if (*neg) {
            report.command = "negativity";
            CMatrix rho;
            if (!neg_preset.empty()) {
                rho = preset_state(neg_preset, neg_d);
                report.parameters = {{"d", neg_d}, {"preset", neg_preset}};
            } else if (!neg_state_path.empty()) {
                std::ifstream in(neg_state_path);
                if (!in) throw std::invalid_argument("cannot open " + neg_state_path);
                json j;
                in >> j;
                rho = matrix_from_json(j.at("matrix"));
                report.parameters = {{"d", neg_d}, {"state", neg_state_path}};
            } else {
                throw std::invalid_argument("negativity needs --preset or --state");
            }
            NegativityResult r = negativity_full(rho, neg_d);
            report.results = {{"negativity", r.negativity},
                              {"p_star", robustness_from_negativity(r.negativity, neg_d)},
                              {"argmin_u", r.argmin.u}};
            report.emit();
        } else if (*rob) {
            report.command = "robust-states";
            report.parameters = {{"d", rob_d}};
            auto family = robust_state_family(rob_d);
            double neg_val = negativity(family.front() * family.front().adjoint(), rob_d);
            report.results = {{"count", family.size()},
                              {"negativity", neg_val},
                              {"p_star", robustness_from_negativity(neg_val, rob_d)}};
            if (!rob_out.empty()) {
                json states = json::array();
                for (const auto& v : family) {
                    json ket = json::array();
                    for (Eigen::Index i = 0; i < v.size(); ++i)
                        ket.push_back({v(i).real(), v(i).imag()});
                    states.push_back(ket);
                }
                std::ofstream(rob_out) << json{{"d", rob_d}, {"states", states}}.dump(1) << "\n";
                report.results["out"] = rob_out;
            }
            report.emit();
        } else if (*pp) {
            report.command = "phase-point";
            PhasePointIndex u(pp_d, parse_u(pp_u, pp_d));
            report.parameters = {{"d", pp_d}, {"u", u.u}};
            PhasePointOperator A = phase_point_operator(u);
            EigResult eig = hermitian_eig(A.matrix);
            std::vector<double> spec(eig.eigenvalues.data(),
                                     eig.eigenvalues.data() + eig.eigenvalues.size());
            report.results = {{"matrix", complex_pairs(A.matrix)},
                              {"trace", A.matrix.trace().real()},
                              {"eigenvalues", spec}};
            report.emit();
        } else if (*cle) {
            report.command = "clifford enumerate";
            report.parameters = {{"d", cle_d}};
            auto cl = enumerate_clifford(cle_d);
            report.results = {{"count", cl.size()}};
            if (!cle_out.empty()) {
                json arr = json::array();
                for (const auto& e : cl)
                    arr.push_back({{"F", {{e.F[0][0], e.F[0][1]}, {e.F[1][0], e.F[1][1]}}},
                                   {"chi", {e.chi[0], e.chi[1]}},
                                   {"matrix", complex_pairs(e.matrix)}});
                std::ofstream(cle_out) << json{{"d", cle_d}, {"cliffords", arr}}.dump() << "\n";
                report.results["out"] = cle_out;
            }
            report.emit();
        } else if (*wder) {
            report.command = "witness derive";
            PhasePointIndex u(wder_d, parse_u(wder_u, wder_d));
            report.parameters = {{"d", wder_d}, {"code", wder_code}, {"u", u.u}};
            Witness W = derive_witness(code_id_from_string(wder_code), u);
            json tuples = json::array();
            json projectors = json::array();
            for (const auto& t : W.tuples) {
                tuples.push_back(t);
                char buf[64];
                std::snprintf(buf, sizeof buf, "(%d,%d|%d,%d)[%d]", t[0], t[1], t[2], t[3], t[4]);
                projectors.push_back(buf);
            }
            report.results = {{"provenance", W.provenance},
                              {"tuples", tuples},
                              {"projectors", projectors},
                              {"trace", W.matrix.trace().real()}};
            if (!wder_out.empty()) {
                save_witness_file(W, wder_out);
                report.results["out"] = wder_out;
            }
            report.emit();
        } else if (*wcert) {
            report.command = "witness certify";
            Witness W = load_witness_file(wcert_file);
            report.parameters = {{"file", wcert_file}, {"d", W.d},
                                 {"tol_sat", tol_sat}, {"tol_rank", tol_rank}};
            FacetReport rep = certify(W, enumerate_clifford(W.d), tol_sat, tol_rank);
            report.results = facet_report_json(W, rep);
            report.emit();
        } else if (*worb) {
            report.command = "witness orbit";
            Witness W = load_witness_file(worb_file);
            report.parameters = {{"file", worb_file}, {"d", W.d},
                                 {"count_only", worb_count_only}};
            auto sets = orbit_tuple_sets(W, enumerate_clifford(W.d));
            report.results = {{"orbit_size", sets.size()}};
            if (!worb_count_only) {
                if (sets.size() > 200)
                    throw std::invalid_argument(
                        "orbit has " + std::to_string(sets.size()) +
                        " members; pass --count-only (member listing is capped at 200)");
                json members = json::array();
                for (const auto& s : sets) {
                    json m = json::array();
                    for (const auto& t : s) m.push_back(t);
                    members.push_back(m);
                }
                report.results["members"] = members;
            }
            report.emit();
        } else if (*geval) {
            report.command = "gate eval";
            Witness W = load_witness_file(geval_facet);
            CMatrix U = load_unitary_json(geval_unitary);
            if (geval_d != 0 && geval_d != W.d)
                throw std::invalid_argument("--d does not match the facet file");
            if (U.rows() != W.d)
                throw std::invalid_argument("unitary dimension does not match the facet");
            report.parameters = {{"facet", geval_facet}, {"unitary", geval_unitary}, {"d", W.d}};
            double v = gate_value(U, W);
            report.results = {{"gate_value", v}, {"eigen_bound", eigen_bound(W)}};
            if (v < 0) report.results["p_star"] = gate_robustness(U, W);
            report.emit();
        } else if (*gsearch) {
            report.command = "gate search";
            Witness W = load_witness_file(gsearch_facet);
            if (gsearch_d != 0 && gsearch_d != W.d)
                throw std::invalid_argument("--d does not match the facet file");
            GateSearchConfig cfg;
            cfg.restarts = gsearch_restarts;
            cfg.seed = seed;
            if (gsearch_mode == "monomial") cfg.parametrization = GateParametrization::Monomial;
            else if (gsearch_mode == "general")
                cfg.parametrization = GateParametrization::GeneralUnitary;
            else if (gsearch_mode != "both")
                throw std::invalid_argument("unknown --mode " + gsearch_mode);
            report.parameters = {{"facet", gsearch_facet}, {"d", W.d},
                                 {"restarts", cfg.restarts}, {"mode", gsearch_mode}};
            GateSearchResult r = optimize_gate(W, cfg);
            report.results = {{"value", r.value},
                              {"optimality", "best found"},
                              {"mode", r.mode},
                              {"unitary", complex_pairs(r.unitary)}};
            if (r.value < 0)
                report.results["p_star"] = 1.0 - 1.0 / (W.d * W.d * std::abs(r.value) + 1.0);
            report.emit();
        } else if (*t1) {
            report.command = "table1";
            report.parameters = {{"d", t1_d}, {"data_dir", data_dir}};
            std::vector<int> ds;
            if (t1_d == "all") ds = {2, 3, 5, 7};
            else ds = {std::stoi(t1_d)};
            json rows = json::array();
            std::ostringstream csv;
            csv << "d,negativity,p_star_state,gate_value,p_star_gate\n";
            for (int d : ds) {
                TableOneRow row = table_one(d, data_dir);
                rows.push_back({{"d", row.d},
                                {"negativity", row.state_negativity},
                                {"p_star_state", row.p_star_state},
                                {"gate_value", row.gate_value},
                                {"p_star_gate", row.p_star_gate}});
                csv.precision(15);
                csv << row.d << "," << row.state_negativity << "," << row.p_star_state << ","
                    << row.gate_value << "," << row.p_star_gate << "\n";
            }
            report.results = {{"rows", rows}, {"csv", csv.str()}};
            if (!t1_csv.empty()) {
                std::ofstream(t1_csv) << csv.str();
                report.results["csv_file"] = t1_csv;
            }
            report.emit();
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
