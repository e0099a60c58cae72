#include "qpoly/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace qpoly {

const std::vector<cplx>& omega_table(int d) {
    static std::unordered_map<int, std::vector<cplx>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(d);
    if (it == cache.end()) {
        std::vector<cplx> tbl(d);
        for (int k = 0; k < d; ++k)
            tbl[k] = std::polar(1.0, 2.0 * M_PI * k / d);
        it = cache.emplace(d, std::move(tbl)).first;
    }
    return it->second;
}

int inv_mod(int a, int d) {
    a = mod_pos(a, d);
    if (a == 0) throw std::invalid_argument("inv_mod: zero has no inverse");
    for (int b = 1; b < d; ++b)
        if (a * b % d == 1) return b;
    throw std::invalid_argument("inv_mod: modulus not prime?");
}

namespace {
unsigned g_threads = 0;
}

void set_thread_count(unsigned n) { g_threads = n; }

unsigned thread_count() {
    if (g_threads > 0) return g_threads;
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? hc : 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body) {
    unsigned nt = thread_count();
    if (nt <= 1 || n < 2 * nt) {
        body(0, n);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (n + nt - 1) / nt;
    for (unsigned t = 0; t < nt; ++t) {
        std::size_t lo = t * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

EigResult hermitian_eig(const CMatrix& M) {
    if (M.rows() != M.cols())
        throw std::invalid_argument("hermitian_eig: matrix not square");
    double herm_dev = (M - M.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > 1e-10)
        throw std::invalid_argument("hermitian_eig: matrix not Hermitian (deviation " +
                                    std::to_string(herm_dev) + ")");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(M);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eig: solver failed");
    return EigResult{solver.eigenvalues(), solver.eigenvectors()};
}

int numerical_rank(const RMatrix& M, double rel_tol) {
    if (M.size() == 0) throw std::invalid_argument("numerical_rank: empty matrix");
    if (!(rel_tol > 0.0 && rel_tol < 1.0))
        throw std::invalid_argument("numerical_rank: rel_tol must be in (0,1)");
    Eigen::BDCSVD<RMatrix> svd(M);
    const RVector& s = svd.singularValues();
    double smax = s.size() > 0 ? s(0) : 0.0;
    if (smax == 0.0) return 0;
    int r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > rel_tol * smax) ++r;
    return r;
}

double max_abs_diff(const CMatrix& A, const CMatrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    return (A - B).cwiseAbs().maxCoeff();
}

bool matrices_close(const CMatrix& A, const CMatrix& B, double tol) {
    return max_abs_diff(A, B) <= tol;
}

}  // namespace qpoly
