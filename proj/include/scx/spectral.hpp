#pragma once

#include <optional>
#include <vector>

#include "scx/complex.hpp"
#include "scx/matrix.hpp"

namespace scx {

struct SpectralResult {
    double value = 0.0;
    FaceVector vector;      // unit 2-norm estimate of the dominant eigenvector
    double residual = 0.0;  // ||M x - value * x||_2 at the reported vector
    int iterations = 0;
    bool converged = false;
};

inline constexpr double kDefaultSpectralTol = 1e-10;
inline constexpr int kDefaultSpectralMaxIter = 100000;

/// Dominant eigenvalue of a symmetric entrywise-nonnegative PSD matrix by
/// power iteration from the all-ones vector. The start vector has positive
/// overlap with a nonnegative dominant eigenvector, so the iteration is
/// deterministic and converges to the spectral radius. Convergence test:
/// ||M x - lambda x||_2 <= tol * max(1, lambda), lambda the Rayleigh
/// quotient. Non-convergence returns the best estimate with
/// converged = false.
SpectralResult spectral_radius(const LabeledSparseMatrix& m,
                               double tol = kDefaultSpectralTol,
                               int max_iter = kDefaultSpectralMaxIter);

/// spectral_radius of q_up(k, i); valid for 0 <= i < dim(K).
SpectralResult q_spectral_radius(const Complex& k, int i,
                                 double tol = kDefaultSpectralTol,
                                 int max_iter = kDefaultSpectralMaxIter);

/// Closed-form radius of the tented complex: r*n - r*r + 1 for n >= r+1 >= 2.
long long tented_radius_exact(int n, int r);

/// All eigenvalues of a symmetric labeled matrix, ascending, by cyclic
/// Jacobi rotations on a dense copy.
std::vector<double> jacobi_eigenvalues(const LabeledSparseMatrix& m);

/// Number of eigenvalues below tol, by dense eigendecomposition.
int numeric_nullity(const LabeledSparseMatrix& m, double tol = 1e-8);

/// The integer within tol of x, when one exists.
std::optional<long long> integer_snap(double x, double tol = 1e-6);

} // namespace scx
