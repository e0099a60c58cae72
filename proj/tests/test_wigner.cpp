#include "qpoly/wigner.hpp"

#include "qpoly/linalg.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <doctest.h>

using namespace qpoly;
using qtest::basis_ket;

TEST_CASE("mub_vector examples") {
    CVector psi = mub_vector(0, 0, 3);
    for (int m = 0; m < 3; ++m) CHECK(std::abs(psi(m) - 1.0 / std::sqrt(3.0)) < 1e-12);

    // b=1, k=0, d=3: s = (0, 0, 2) mod 3 -> (1, 1, w)/sqrt(3)
    CVector psi1 = mub_vector(1, 0, 3);
    CHECK(std::abs(psi1(0) - 1.0 / std::sqrt(3.0)) < 1e-12);
    CHECK(std::abs(psi1(1) - 1.0 / std::sqrt(3.0)) < 1e-12);
    CHECK(std::abs(psi1(2) - omega_pow(3, 1) / std::sqrt(3.0)) < 1e-12);
}

TEST_CASE("mub_vector eigenvector property") {
    for (int d : {2, 3, 5, 7})
        for (int b = 0; b < d; ++b)
            for (int k = 0; k < d; ++k) {
                CVector psi = mub_vector(b, k, d);
                CMatrix XZb = pauli_matrix(PauliLabel::single(d, 1, b));
                cplx ev = d == 2 ? cplx(k == 0 ? 1.0 : -1.0, 0.0) : omega_pow(d, k);
                CHECK((XZb * psi - ev * psi).norm() < 1e-10);
            }
}

TEST_CASE("mutual unbiasedness") {
    for (int d : {2, 3, 5}) {
        auto vec = [&](int basis, int k) {
            return basis == 0 ? CVector(basis_ket(d, k)) : mub_vector(basis - 1, k, d);
        };
        for (int b1 = 0; b1 <= d; ++b1)
            for (int b2 = 0; b2 <= d; ++b2)
                for (int k = 0; k < d; ++k)
                    for (int l = 0; l < d; ++l) {
                        double ov = std::norm(vec(b1, k).dot(vec(b2, l)));
                        double expect = b1 == b2 ? (k == l ? 1.0 : 0.0) : 1.0 / d;
                        CHECK(std::abs(ov - expect) < 1e-10);
                    }
    }
}

TEST_CASE("phase point operator fixed matrices") {
    SUBCASE("qubit A(0,0,0)") {
        CMatrix expect(2, 2);
        expect << 0.5, cplx(0.25, -0.25), cplx(0.25, 0.25), 0.0;
        CHECK(matrices_close(phase_point_operator(PhasePointIndex(2, {0, 0, 0})).matrix, expect,
                             1e-12));
    }
    SUBCASE("d=7 A(u*) equals the two counter-identity blocks") {
        CMatrix expect = CMatrix::Zero(7, 7);
        expect(0, 1) = expect(1, 0) = 1.0 / 7;
        for (int m = 2; m < 7; ++m) expect(m, 8 - m) = 1.0 / 7;
        CHECK(matrices_close(phase_point_operator(maximally_negative_index(7)).matrix, expect,
                             1e-12));
    }
    SUBCASE("trace and Hermiticity") {
        std::mt19937_64 gen(2);
        for (int d : {2, 3, 5, 7})
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<int> u(d + 1);
                for (auto& v : u) v = static_cast<int>(gen() % d);
                CMatrix A = phase_point_operator(PhasePointIndex(d, u)).matrix;
                CHECK(std::abs(A.trace() - cplx(1.0 / d, 0)) < 1e-12);
                CHECK(max_abs_diff(A, A.adjoint()) < 1e-12);
            }
    }
}

TEST_CASE("wigner_value basics") {
    for (int d : {2, 3, 5}) {
        std::mt19937_64 gen(d);
        CMatrix maxmixed = CMatrix::Identity(d, d) / d;
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<int> u(d + 1);
            for (auto& v : u) v = static_cast<int>(gen() % d);
            CHECK(wigner_value(maxmixed, PhasePointIndex(d, u)) ==
                  doctest::Approx(1.0 / (d * d)).epsilon(1e-12));
        }
    }
    // |0><0| at d=3: value is delta_{u1,0}/3
    CMatrix rho = basis_ket(3, 0) * basis_ket(3, 0).adjoint();
    CHECK(wigner_value(rho, PhasePointIndex(3, {1, 0, 2, 1})) == doctest::Approx(0.0));
    CHECK(wigner_value(rho, PhasePointIndex(3, {2, 1, 0, 0})) == doctest::Approx(0.0));
    CHECK(wigner_value(rho, PhasePointIndex(3, {0, 2, 1, 0})) == doctest::Approx(1.0 / 3));
}

TEST_CASE("qubit Bloch form of the Wigner value") {
    std::mt19937_64 gen(31);
    CMatrix rho = qtest::random_density(2, gen);
    double x = (pauli_matrix(PauliLabel::single(2, 1, 0)) * rho).trace().real();
    double y = (pauli_matrix(PauliLabel::single(2, 1, 1)) * rho).trace().real();
    double z = (pauli_matrix(PauliLabel::single(2, 0, 1)) * rho).trace().real();
    std::vector<double> got, bloch;
    for (int u1 = 0; u1 < 2; ++u1)
        for (int u2 = 0; u2 < 2; ++u2)
            for (int u3 = 0; u3 < 2; ++u3) {
                double v = wigner_value(rho, PhasePointIndex(2, {u1, u2, u3}));
                // u1 indexes the Z basis, u2 the X basis, u3 the Y basis
                double w = (1.0 + (u1 ? -z : z) + (u2 ? -x : x) + (u3 ? -y : y)) / 4.0;
                CHECK(v == doctest::Approx(w).epsilon(1e-12));
                got.push_back(v);
                bloch.push_back((1.0 + (u1 ? -x : x) + (u2 ? -y : y) + (u3 ? -z : z)) / 4.0);
            }
    // as a set the values agree with the x/y/z-lettered form too
    std::sort(got.begin(), got.end());
    std::sort(bloch.begin(), bloch.end());
    for (std::size_t i = 0; i < got.size(); ++i)
        CHECK(got[i] == doctest::Approx(bloch[i]).epsilon(1e-12));
}

TEST_CASE("dual-path Wigner evaluation agrees") {
    for (int d : {2, 3}) {
        std::mt19937_64 gen(100 + d);
        for (int trial = 0; trial < 1000; ++trial) {
            CMatrix rho = qtest::random_density(d, gen);
            std::vector<int> u(d + 1);
            for (auto& v : u) v = static_cast<int>(gen() % d);
            PhasePointIndex idx(d, u);
            CHECK(std::abs(wigner_value(rho, idx) - wigner_value_coeff(rho, idx)) < 1e-9);
        }
    }
}

TEST_CASE("negativity examples") {
    for (int d : {2, 3, 5})
        for (const auto& sigma : enumerate_stabilizer_states(d))
            CHECK(negativity(sigma, d) <= 1e-10);

    for (int d : {3, 5, 7}) {
        CVector nu1 = (basis_ket(d, 0) - basis_ket(d, 1)) / std::sqrt(2.0);
        CHECK(negativity(nu1 * nu1.adjoint(), d) == doctest::Approx(1.0 / d).epsilon(1e-12));
    }

    // the Bloch (1,1,1)/sqrt(3) state; oracle: minimize (1 +- x +- y +- z)/4
    const double s = 1.0 / std::sqrt(3.0);
    CMatrix T(2, 2);
    T << cplx(1 + s, 0), cplx(s, -s), cplx(s, s), cplx(1 - s, 0);
    T /= 2.0;
    double oracle = 1e300;
    for (int signs = 0; signs < 8; ++signs)
        oracle = std::min(oracle, (1.0 + (signs & 1 ? -s : s) + (signs & 2 ? -s : s) +
                                   (signs & 4 ? -s : s)) / 4.0);
    CHECK(negativity(T, 2) == doctest::Approx(-oracle).epsilon(1e-12));
    CHECK(negativity(T, 2) == doctest::Approx((std::sqrt(3.0) - 1.0) / 4).epsilon(1e-12));
}

TEST_CASE("negativity equals exhaustive scan") {
    for (int d : {2, 3}) {
        std::mt19937_64 gen(41 + d);
        for (int trial = 0; trial < 5; ++trial) {
            CMatrix rho = qtest::random_density(d, gen);
            NegativityResult r = negativity_full(rho, d);
            double brute = qtest::brute_min_wigner(rho, d);
            CHECK(r.min_value == doctest::Approx(brute).epsilon(1e-12));
            CHECK(wigner_value(rho, r.argmin) == doctest::Approx(brute).epsilon(1e-12));
        }
    }
}

TEST_CASE("state robustness") {
    CHECK(robustness_from_negativity(1.0 / 3, 3) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(robustness_from_negativity(1.0 / 5, 5) == doctest::Approx(5.0 / 6).epsilon(1e-12));

    const double s = 1.0 / std::sqrt(3.0);
    CMatrix T(2, 2);
    T << cplx(1 + s, 0), cplx(s, -s), cplx(s, s), cplx(1 - s, 0);
    T /= 2.0;
    CHECK(state_robustness(T, 2) == doctest::Approx(1.0 - s).epsilon(1e-9));

    CHECK(state_robustness(enumerate_stabilizer_states(3)[4], 3) <= 1e-9);
}

TEST_CASE("robust_state_family") {
    CHECK_THROWS_AS(robust_state_family(2), std::invalid_argument);

    auto fam3 = robust_state_family(3);
    CHECK(fam3.size() == 9);

    auto fam5 = robust_state_family(5);
    CHECK(fam5.size() == 50);

    // family contains nu1 itself
    CVector nu1 = (basis_ket(3, 0) - basis_ket(3, 1)) / std::sqrt(2.0);
    bool found = false;
    for (const auto& st : fam3)
        if (std::abs(std::abs(st.dot(nu1)) - 1.0) < 1e-10) found = true;
    CHECK(found);

    for (const auto& st : fam3)
        CHECK(negativity(st * st.adjoint(), 3) == doctest::Approx(1.0 / 3).epsilon(1e-9));

    // (d-1)/2 eigenvalues of A(u*) equal -1/d for d = 7
    EigResult r = hermitian_eig(phase_point_operator(maximally_negative_index(7)).matrix);
    int count = 0;
    for (int i = 0; i < 7; ++i)
        if (std::abs(r.eigenvalues(i) + 1.0 / 7) < 1e-9) ++count;
    CHECK(count == 3);
}

TEST_CASE("negativity lower bound over all operators (d=3 exhaustive)") {
    const int d = 3;
    std::vector<int> u(d + 1, 0);
    while (true) {
        EigResult r = hermitian_eig(phase_point_operator(PhasePointIndex(d, u)).matrix);
        CHECK(r.eigenvalues(0) >= -1.0 / d - 1e-9);
        int i = 0;
        while (i < d + 1 && ++u[i] == d) u[i++] = 0;
        if (i == d + 1) break;
    }
}

TEST_CASE("MUB-sum block structure at u*") {
    for (int d : {3, 5, 7}) {
        CMatrix M = CMatrix::Zero(d, d);
        for (int b = 0; b < d; ++b) M += projector_single(1, b, 0, d);
        // 2x2 all-ones block, then identity+counter-identity meeting at (d+1)/2
        CMatrix expect = CMatrix::Zero(d, d);
        expect.block(0, 0, 2, 2).setOnes();
        for (int m = 2; m < d; ++m) {
            expect(m, m) = 1.0;
            expect(m, d + 1 - m) = 1.0;
        }
        CHECK(matrices_close(M, expect, 1e-10));
    }
}

TEST_CASE("spectrum invariant under Pauli displacement") {
    const int d = 3;
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<int> u(d + 1);
        for (auto& v : u) v = static_cast<int>(gen() % d);
        CMatrix A = phase_point_operator(PhasePointIndex(d, u)).matrix;
        RVector spec = hermitian_eig(A).eigenvalues;
        for (int x = 0; x < d; ++x)
            for (int z = 0; z < d; ++z) {
                CMatrix P = pauli_matrix(PauliLabel::single(d, x, z));
                RVector spec2 = hermitian_eig(CMatrix(P * A * P.adjoint())).eigenvalues;
                CHECK((spec - spec2).cwiseAbs().maxCoeff() < 1e-9);
            }
    }
}

TEST_CASE("negativity zero iff inside the stabilizer hull (qutrit states)") {
    std::mt19937_64 gen(12345);
    int zero_count = 0, neg_count = 0;
    for (int trial = 0; trial < 120; ++trial) {
        CMatrix rho = qtest::random_density(3, gen);
        bool zero_neg = negativity(rho, 3) <= 1e-9;
        bool in_hull = qtest::stabilizer_hull_member(rho, 3);
        CHECK(zero_neg == in_hull);
        (zero_neg ? zero_count : neg_count)++;
    }
    // the sample must exercise both sides
    CHECK(zero_count > 10);
    CHECK(neg_count > 10);
}
