#include "qpoly/pauli.hpp"

#include "qpoly/linalg.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace qpoly;

TEST_CASE("pauli_matrix fixed examples") {
    // i sigma_x sigma_z = sigma_y
    CMatrix Y(2, 2);
    Y << 0, cplx(0, -1), cplx(0, 1), 0;
    CHECK(matrices_close(pauli_matrix(PauliLabel::single(2, 1, 1)), Y, 1e-15));

    CMatrix Z3 = pauli_matrix(PauliLabel::single(3, 0, 1));
    CHECK(Z3(0, 0) == omega_pow(3, 0));
    CHECK(Z3(1, 1) == omega_pow(3, 1));
    CHECK(Z3(2, 2) == omega_pow(3, 2));

    CMatrix XZ = pauli_matrix(PauliLabel::single(3, 1, 1));
    for (int j = 0; j < 3; ++j) CHECK(std::abs(XZ((j + 1) % 3, j) - omega_pow(3, j)) < 1e-15);
}

TEST_CASE("prime dimension enforced") {
    CHECK_THROWS_AS(PauliLabel::single(4, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(PauliLabel::single(6, 1, 0), std::invalid_argument);
}

TEST_CASE("symplectic product examples and commutation") {
    auto sp = [](const PauliLabel& a, const PauliLabel& b) { return symplectic_product(a, b); };
    CHECK(sp(PauliLabel::single(3, 1, 0), PauliLabel::single(3, 0, 1)) == 1);
    CHECK(sp(PauliLabel::single(3, 1, 1), PauliLabel::single(3, 2, 2)) == 0);
    CHECK(sp(PauliLabel::two(5, 1, 0, 0, 1), PauliLabel::two(5, 0, 1, 1, 0)) == 0);
    CHECK_THROWS_AS(sp(PauliLabel::single(3, 1, 0), PauliLabel::single(5, 1, 0)),
                    std::invalid_argument);

    // the matrix commutator vanishes exactly when the product does
    for (int d : {2, 3}) {
        for (int x1 = 0; x1 < d; ++x1)
            for (int z1 = 0; z1 < d; ++z1)
                for (int x2 = 0; x2 < d; ++x2)
                    for (int z2 = 0; z2 < d; ++z2) {
                        PauliLabel a = PauliLabel::single(d, x1, z1);
                        PauliLabel b = PauliLabel::single(d, x2, z2);
                        CMatrix A = pauli_matrix(a), B = pauli_matrix(b);
                        bool commute = max_abs_diff(A * B, B * A) < 1e-12;
                        CHECK(commute == (symplectic_product(a, b) == 0));
                    }
    }
}

TEST_CASE("pauli_power examples") {
    // (P_(1|1))^2 = w P_(2|2) at d=3
    PauliLabel p = pauli_power(PauliLabel::single(3, 1, 1), 2);
    CHECK(p.x[0] == 2);
    CHECK(p.z[0] == 2);
    CHECK(p.c == 1);

    for (int d : {3, 5, 7}) {
        PauliLabel q = pauli_power(PauliLabel::single(d, 1, 2), d);
        CHECK(q.is_identity_label());
        CHECK(q.c == 0);
    }

    PauliLabel r = pauli_power(PauliLabel::single(5, 1, 0), 3);
    CHECK(r.x[0] == 3);
    CHECK(r.z[0] == 0);
    CHECK(r.c == 0);
}

TEST_CASE("pauli_power matches repeated matrix multiplication") {
    for (int d : {2, 3, 5, 7}) {
        for (int x = 0; x < d; ++x)
            for (int z = 0; z < d; ++z) {
                CMatrix P = pauli_matrix(PauliLabel::single(d, x, z));
                CMatrix acc = CMatrix::Identity(d, d);
                for (int m = 0; m < d; ++m) {
                    CHECK(matrices_close(pauli_matrix(pauli_power(PauliLabel::single(d, x, z), m)),
                                         acc, 1e-12));
                    acc = acc * P;
                }
            }
    }
}

TEST_CASE("composition matches matrix multiplication exhaustively (d=3, n=1)") {
    const int d = 3;
    for (int x1 = 0; x1 < d; ++x1)
        for (int z1 = 0; z1 < d; ++z1)
            for (int x2 = 0; x2 < d; ++x2)
                for (int z2 = 0; z2 < d; ++z2) {
                    PauliLabel a = PauliLabel::single(d, x1, z1);
                    PauliLabel b = PauliLabel::single(d, x2, z2);
                    CHECK(matrices_close(pauli_matrix(a) * pauli_matrix(b),
                                         pauli_matrix(pauli_compose(a, b)), 1e-12));
                }
}

TEST_CASE("composition matches matrix multiplication (d=2 incl. two qubits)") {
    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 50; ++trial) {
        PauliLabel a = PauliLabel::two(2, gen() % 2, gen() % 2, gen() % 2, gen() % 2, gen() % 4);
        PauliLabel b = PauliLabel::two(2, gen() % 2, gen() % 2, gen() % 2, gen() % 2, gen() % 4);
        CHECK(matrices_close(pauli_matrix(a) * pauli_matrix(b),
                             pauli_matrix(pauli_compose(a, b)), 1e-12));
    }
}

TEST_CASE("orthogonality Tr(P^dag P') = d^n delta") {
    for (int d : {2, 3, 5}) {
        for (int x1 = 0; x1 < d; ++x1)
            for (int z1 = 0; z1 < d; ++z1)
                for (int x2 = 0; x2 < d; ++x2)
                    for (int z2 = 0; z2 < d; ++z2) {
                        cplx t = trace_adj_prod(pauli_matrix(PauliLabel::single(d, x1, z1)),
                                                pauli_matrix(PauliLabel::single(d, x2, z2)));
                        double expect = (x1 == x2 && z1 == z2) ? d : 0.0;
                        CHECK(std::abs(t - expect) < 1e-12);
                    }
    }
}

TEST_CASE("pauli_coefficients examples") {
    SUBCASE("maximally mixed") {
        PauliCoefficients c = pauli_coefficients(CMatrix::Identity(3, 3) / 3.0, 3, 1);
        CHECK(std::abs(c.at(0, 0, 0, 0) - 1.0) < 1e-14);
        CHECK(std::abs(c.at(1, 0, 0, 0)) < 1e-14);
        CHECK(std::abs(c.at(2, 0, 1, 0)) < 1e-14);
    }
    SUBCASE("|0><0| at d=3") {
        CMatrix rho = CMatrix::Zero(3, 3);
        rho(0, 0) = 1.0;
        PauliCoefficients c = pauli_coefficients(rho, 3, 1);
        for (int z = 0; z < 3; ++z) CHECK(std::abs(c.at(0, 0, z, 0) - 1.0) < 1e-14);
        for (int x = 1; x < 3; ++x)
            for (int z = 0; z < 3; ++z) CHECK(std::abs(c.at(x, 0, z, 0)) < 1e-14);
    }
    SUBCASE("Choi state of identity, d=2") {
        CMatrix tau = CMatrix::Zero(4, 4);
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) tau(3 * j, 3 * k) = 0.5;
        PauliCoefficients c = pauli_coefficients(tau, 2, 2);
        CHECK(std::abs(c.at(1, 1, 0, 0) - 1.0) < 1e-14);
        // weight-2: single-sided coefficients vanish
        for (int x = 0; x < 2; ++x)
            for (int z = 0; z < 2; ++z) {
                if (x == 0 && z == 0) continue;
                CHECK(std::abs(c.at(x, 0, z, 0)) < 1e-14);
                CHECK(std::abs(c.at(0, x, 0, z)) < 1e-14);
            }
    }
}

TEST_CASE("pauli_coefficients reconstruction round trip") {
    std::mt19937_64 gen(5);
    for (int d : {2, 3}) {
        CMatrix rho = qtest::random_density(d, gen);
        CHECK(max_abs_diff(from_pauli_coefficients(pauli_coefficients(rho, d, 1)), rho) < 1e-10);
    }
    CMatrix rho2 = qtest::random_density(4, gen);
    CHECK(max_abs_diff(from_pauli_coefficients(pauli_coefficients(rho2, 2, 2)), rho2) < 1e-10);
}

TEST_CASE("coefficient Hermiticity pairing") {
    std::mt19937_64 gen(9);
    const int d = 3;
    CMatrix rho = qtest::random_density(d, gen);
    PauliCoefficients c = pauli_coefficients(rho, d, 1);
    for (int x = 0; x < d; ++x)
        for (int z = 0; z < d; ++z) {
            // P_(-x|-z)^dag = w^{xz} P_(x|z), so c_(-x|-z) = w^{xz} conj(c_(x|z))
            cplx lhs = c.at(mod_pos(-x, d), 0, mod_pos(-z, d), 0);
            cplx rhs = omega_pow(d, 1LL * x * z) * std::conj(c.at(x, 0, z, 0));
            CHECK(std::abs(lhs - rhs) < 1e-12);
        }
}

TEST_CASE("label serialization") {
    CHECK(label_str(PauliLabel::two(3, 1, 2, 0, 1, 2)) == "(1,2|0,1)[2]");
    CHECK(label_str(PauliLabel::single(5, 4, 3)) == "(4|3)[0]");
}

TEST_CASE("matrix realization matches raw construction") {
    for (int d : {2, 3, 5}) {
        std::mt19937_64 gen(17 + d);
        for (int trial = 0; trial < 10; ++trial) {
            int x1 = gen() % d, z1 = gen() % d, x2 = gen() % d, z2 = gen() % d;
            CHECK(matrices_close(pauli_matrix(PauliLabel::two(d, x1, x2, z1, z2)),
                                 qtest::raw_pauli2(d, x1, x2, z1, z2), 1e-12));
        }
    }
}
