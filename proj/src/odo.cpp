#include "parity/odo.hpp"

#include "parity/rng.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

namespace paritygroups {

ComplexMatrix random_unitary(int n, std::uint64_t seed)
{
    if (n < 1 || n > 16)
        throw std::invalid_argument("random_unitary: cap is n <= 16");
    SplitMix64 rng(seed);
    ComplexMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double re = rng.next_gaussian();
            double im = rng.next_gaussian();
            g(i, j) = std::complex<double>(re, im);
        }
    // modified Gram-Schmidt on columns, two passes for orthogonality to ~1e-15
    for (int j = 0; j < n; ++j) {
        for (int pass = 0; pass < 2; ++pass)
            for (int k = 0; k < j; ++k)
                g.col(j) -= g.col(k).dot(g.col(j)) * g.col(k);
        double norm = g.col(j).norm();
        if (norm < 1e-12)
            throw std::runtime_error("random_unitary: degenerate Gaussian draw");
        g.col(j) /= norm;
    }
    return g;
}

namespace {

double half_argument(std::complex<double> lambda)
{
    // principal branch: 2*theta in (-pi, pi], so theta in (-pi/2, pi/2]
    return std::atan2(lambda.imag(), lambda.real()) / 2.0;
}

} // namespace

DecompositionResult odo_decompose(const ComplexMatrix& u, double tol)
{
    const int n = static_cast<int>(u.rows());
    if (n < 1 || u.cols() != n)
        throw std::invalid_argument("odo_decompose: square matrix required");
    double unitarity = (u.adjoint() * u - ComplexMatrix::Identity(n, n)).norm();
    if (unitarity > 1e-10)
        throw std::invalid_argument("odo_decompose: input is not unitary (residue "
                                    + std::to_string(unitarity) + ")");

    // W = U^T U is symmetric unitary; its eigenvalues lie on the unit circle
    ComplexMatrix w = u.transpose() * u;
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(w);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("odo_decompose: eigendecomposition failed");

    // sort eigenvalue indices by argument, then cluster with gap 1e-8
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<double> args(n);
    for (int i = 0; i < n; ++i)
        args[i] = std::atan2(solver.eigenvalues()(i).imag(), solver.eigenvalues()(i).real());
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return args[a] < args[b]; });

    Eigen::MatrixXd o2(n, n); // rows are the real eigenbasis
    std::vector<double> thetas(n, 0.0);
    int filled = 0;
    std::size_t start = 0;
    while (start < idx.size()) {
        std::size_t stop = start + 1;
        while (stop < idx.size() && args[idx[stop]] - args[idx[stop - 1]] < 1e-8)
            ++stop;
        const int cluster = static_cast<int>(stop - start);

        std::complex<double> mean(0, 0);
        for (std::size_t t = start; t < stop; ++t)
            mean += solver.eigenvalues()(idx[t]);
        mean /= static_cast<double>(cluster);
        const double theta = half_argument(mean);

        // real basis of the conjugation-closed eigenspace: Gram-Schmidt over
        // the real and imaginary parts of the complex eigenvectors
        std::vector<Eigen::VectorXd> basis;
        for (std::size_t t = start; t < stop && static_cast<int>(basis.size()) < cluster; ++t) {
            Eigen::VectorXcd v = solver.eigenvectors().col(idx[t]);
            for (Eigen::VectorXd cand : {Eigen::VectorXd(v.real()), Eigen::VectorXd(v.imag())}) {
                if (static_cast<int>(basis.size()) == cluster)
                    break;
                for (int pass = 0; pass < 2; ++pass)
                    for (const auto& b : basis)
                        cand -= b.dot(cand) * b;
                double norm = cand.norm();
                if (norm > 1e-6) {
                    cand /= norm;
                    basis.push_back(cand);
                }
            }
        }
        if (static_cast<int>(basis.size()) != cluster)
            throw std::runtime_error("odo_decompose: could not extract a real eigenbasis "
                                     "(cluster of size " + std::to_string(cluster) + ")");
        for (const auto& b : basis) {
            o2.row(filled) = b.transpose();
            thetas[filled] = theta;
            ++filled;
        }
        start = stop;
    }

    // O1 = U O2^T diag(e^{-i theta}); exact algebra makes it real orthogonal,
    // so the imaginary residue only measures numerical error
    ComplexMatrix phases_inv = ComplexMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k)
        phases_inv(k, k) = std::exp(std::complex<double>(0, -thetas[k]));
    ComplexMatrix o1c = u * o2.transpose().cast<std::complex<double>>() * phases_inv;
    double imag_residue = o1c.imag().norm();
    if (imag_residue > tol)
        throw std::runtime_error("odo_decompose: imaginary residue " + std::to_string(imag_residue)
                                 + " exceeds tolerance");

    DecompositionResult res;
    res.o1 = o1c.real();
    res.o2 = o2;
    res.thetas = thetas;

    ComplexMatrix phases = ComplexMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k)
        phases(k, k) = std::exp(std::complex<double>(0, thetas[k]));
    res.reconstruction_error =
        (u - res.o1.cast<std::complex<double>>() * phases * o2.cast<std::complex<double>>()).norm();
    res.orthogonality_error =
        std::max((res.o1.transpose() * res.o1 - Eigen::MatrixXd::Identity(n, n)).norm(),
                 (res.o2.transpose() * res.o2 - Eigen::MatrixXd::Identity(n, n)).norm());
    if (res.reconstruction_error > tol)
        throw std::runtime_error("odo_decompose: reconstruction residue "
                                 + std::to_string(res.reconstruction_error) + " exceeds tolerance");
    if (res.orthogonality_error > 1e-10)
        throw std::runtime_error("odo_decompose: orthogonality residue "
                                 + std::to_string(res.orthogonality_error) + " exceeds 1e-10");
    return res;
}

} // namespace paritygroups
