#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace paritygroups {

using ComplexMatrix = Eigen::MatrixXcd;

/// Haar-ish random unitary: modified Gram-Schmidt orthonormalization of a
/// matrix of standard complex Gaussians drawn from the SplitMix64 stream of
/// `seed` (row-major, real part then imaginary part). Deterministic per seed.
ComplexMatrix random_unitary(int n, std::uint64_t seed); // n <= 16

/// U = O1 * diag(e^{i theta}) * O2 with O1, O2 real orthogonal and
/// theta_k in (-pi/2, pi/2].
struct DecompositionResult {
    Eigen::MatrixXd o1, o2;
    std::vector<double> thetas;
    double reconstruction_error = 0; // ||U - O1 D O2||_F
    double orthogonality_error = 0;  // max of ||Oi^T Oi - I||_F
};

/// Factors a unitary through the symmetric unitary W = U^T U: W is spectrally
/// decomposed over a real orthonormal eigenbasis (each eigenspace is closed
/// under conjugation, so real bases come from real/imaginary parts of the
/// eigenvectors, re-orthonormalized), theta is half the eigenvalue argument,
/// O2 is the eigenbasis and O1 = U O2^T diag(e^{-i theta}). Inputs must be
/// unitary within 1e-10; the residue checks below `tol` are enforced, never
/// silently passed.
DecompositionResult odo_decompose(const ComplexMatrix& u, double tol = 1e-9);

} // namespace paritygroups
