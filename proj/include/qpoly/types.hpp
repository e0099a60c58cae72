#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace qpoly {

using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using cplx = std::complex<double>;

inline bool is_prime(int d) {
    if (d < 2) return false;
    for (int k = 2; k * k <= d; ++k)
        if (d % k == 0) return false;
    return true;
}

/// Roots of unity omega^k = exp(2 pi i k/d), k = 0..d-1, cached per d so
/// repeated entries are bit-identical.
const std::vector<cplx>& omega_table(int d);

inline cplx omega_pow(int d, long long k) {
    long long m = k % d;
    if (m < 0) m += d;
    return omega_table(d)[static_cast<std::size_t>(m)];
}

/// (d+1)/2, the inverse of 2 mod d for odd d.
inline int half_mod(int d) { return (d + 1) / 2; }

inline int mod_pos(long long a, int d) {
    long long m = a % d;
    if (m < 0) m += d;
    return static_cast<int>(m);
}

/// Modular inverse for prime modulus.
int inv_mod(int a, int d);

/// Thread count used by the parallel scans (0 = hardware concurrency).
void set_thread_count(unsigned n);
unsigned thread_count();

/// Chunked parallel loop over [0, n). Results must be written to disjoint
/// slots so the outcome is independent of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace qpoly
