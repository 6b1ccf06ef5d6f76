#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parity/odo.hpp"
#include "parity/rng.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

using namespace paritygroups;

namespace {

double unitarity_residue(const ComplexMatrix& u)
{
    return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm();
}

double reconstruction(const ComplexMatrix& u, const DecompositionResult& res)
{
    ComplexMatrix phases = ComplexMatrix::Zero(u.rows(), u.cols());
    for (Eigen::Index k = 0; k < u.rows(); ++k)
        phases(k, k) = std::exp(std::complex<double>(0, res.thetas[k]));
    return (u
            - res.o1.cast<std::complex<double>>() * phases * res.o2.cast<std::complex<double>>())
        .norm();
}

} // namespace

TEST_CASE("random unitary")
{
    ComplexMatrix u1 = random_unitary(1, 42);
    CHECK(std::abs(std::abs(u1(0, 0)) - 1.0) < 1e-14);

    for (std::uint64_t seed = 1; seed <= 10; ++seed)
        CHECK(unitarity_residue(random_unitary(8, seed)) <= 1e-12);

    ComplexMatrix a = random_unitary(5, 7);
    ComplexMatrix b = random_unitary(5, 7);
    CHECK((a - b).norm() == 0.0); // same seed, same matrix
    ComplexMatrix c = random_unitary(5, 8);
    CHECK((a - c).norm() > 1e-3);

    CHECK_THROWS_AS(random_unitary(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_unitary(17, 1), std::invalid_argument);
}

TEST_CASE("identity decomposes to identity factors")
{
    for (int n = 1; n <= 6; ++n) {
        DecompositionResult res = odo_decompose(ComplexMatrix::Identity(n, n));
        CHECK((res.o1 - Eigen::MatrixXd::Identity(n, n)).norm() <= 1e-12);
        CHECK((res.o2 - Eigen::MatrixXd::Identity(n, n)).norm() <= 1e-12);
        for (double t : res.thetas)
            CHECK(std::abs(t) <= 1e-15);
    }
}

TEST_CASE("real orthogonal input gives zero phases")
{
    SplitMix64 rng(99);
    for (int t = 0; t < 8; ++t) {
        int n = 2 + t % 5;
        Eigen::MatrixXd q(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                q(i, j) = rng.next_gaussian();
        for (int j = 0; j < n; ++j) {
            for (int pass = 0; pass < 2; ++pass)
                for (int k = 0; k < j; ++k)
                    q.col(j) -= q.col(k).dot(q.col(j)) * q.col(k);
            q.col(j) /= q.col(j).norm();
        }
        ComplexMatrix u = q.cast<std::complex<double>>();
        DecompositionResult res = odo_decompose(u);
        for (double th : res.thetas)
            CHECK(std::abs(th) <= 1e-12);
        CHECK(reconstruction(u, res) <= 1e-9);
    }
}

TEST_CASE("random unitaries round-trip within tolerance")
{
    constexpr double half_pi = 1.5707963267948966;
    for (int t = 1; t <= 40; ++t) {
        int n = 2 + (t - 1) % 7;
        ComplexMatrix u = random_unitary(n, 1000 + static_cast<std::uint64_t>(t));
        DecompositionResult res = odo_decompose(u);
        CHECK(res.reconstruction_error <= 1e-9);
        CHECK(res.orthogonality_error <= 1e-10);
        CHECK(reconstruction(u, res) <= 1e-9);
        for (double th : res.thetas) {
            CHECK(th > -half_pi);
            CHECK(th <= half_pi);
        }
    }
}

TEST_CASE("diagonal phase matrices recover their phases")
{
    // U = diag(e^{i a}) with a in (-pi/2, pi/2]: O factors are signed identities
    ComplexMatrix u = ComplexMatrix::Zero(3, 3);
    u(0, 0) = std::exp(std::complex<double>(0, 0.3));
    u(1, 1) = std::exp(std::complex<double>(0, -1.2));
    u(2, 2) = std::exp(std::complex<double>(0, 1.5));
    DecompositionResult res = odo_decompose(u);
    std::vector<double> sorted = res.thetas;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::abs(sorted[0] + 1.2) <= 1e-10);
    CHECK(std::abs(sorted[1] - 0.3) <= 1e-10);
    CHECK(std::abs(sorted[2] - 1.5) <= 1e-10);
    CHECK(reconstruction(u, res) <= 1e-9);
}

TEST_CASE("non-unitary input is rejected")
{
    ComplexMatrix m = ComplexMatrix::Identity(3, 3) * 2.0;
    CHECK_THROWS_AS(odo_decompose(m), std::invalid_argument);
    CHECK_THROWS_AS(odo_decompose(ComplexMatrix::Zero(2, 3)), std::invalid_argument);
}
