#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace slotbrillouin {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::ColMajor, int>;

struct ShiftInvertOptions {
    int subspace_size = 40;       // Krylov dimension per restart
    int max_restarts = 30;
    double tolerance = 1e-11;     // on ||A x - lambda x|| / (||A||_1 ||x||)
    std::uint64_t seed = 0x5107b1e55eedULL;
    bool symmetric = false;       // A is symmetric: Ritz vectors come out orthonormal
};

struct EigenPair {
    double value = 0.0;
    Eigen::VectorXd vector;  // unit 2-norm
    double residual = 0.0;   // ||A x - value x|| / (||A||_1 ||x||)
};

/// Eigenpairs of a real sparse matrix with eigenvalues nearest `shift`.
///
/// Thick-restart Arnoldi on (A - shift I)^-1 with a sparse LU
/// factorization. The start vector is pseudo-random from a fixed seed so
/// repeated calls give bit-identical results. Only real eigenvalues are
/// reported. Results are sorted by distance to the shift.
///
/// Throws ConvergenceError (carrying the residuals) if the wanted pairs have
/// not converged after max_restarts, and DomainError if A - shift I is
/// singular.
std::vector<EigenPair> shift_invert_eigs(const SparseMatrix& a, double shift, int count,
                                         const ShiftInvertOptions& options = {});

/// ||A||_1, the largest absolute column sum.
double norm1(const SparseMatrix& a);

}  // namespace slotbrillouin
