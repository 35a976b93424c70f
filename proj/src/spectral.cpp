#include "scx/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "scx/boundary.hpp"
#include "scx/kernels.hpp"

namespace scx {

SpectralResult spectral_radius(const LabeledSparseMatrix& m, double tol, int max_iter) {
    if (!m.is_symmetric()) {
        throw validation_error("spectral radius needs a symmetric matrix");
    }
    std::size_t n = m.row_count();
    SpectralResult result;
    result.vector.labels = m.row_labels;
    if (n == 0) {
        result.converged = true;
        return result;
    }

    std::vector<double> dense = m.to_dense();
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n, 0.0);

    double lambda = 0.0;
    double residual = 0.0;
    int iter = 0;
    bool converged = false;
    std::vector<double> resid(n, 0.0);
    for (;;) {
        kernels::matvec(dense.data(), n, n, x.data(), y.data());
        ++iter;
        lambda = kernels::dot(x.data(), y.data(), n);
        resid = y;
        kernels::axpy(-lambda, x.data(), resid.data(), n);
        residual = std::sqrt(kernels::dot(resid.data(), resid.data(), n));
        if (residual <= tol * std::max(1.0, lambda)) {
            converged = true;
            break;
        }
        if (iter >= max_iter) {
            break;
        }
        double norm = std::sqrt(kernels::dot(y.data(), y.data(), n));
        if (norm == 0.0) {
            // x is in the kernel; for a nonnegative PSD matrix this means
            // the all-ones start annihilates, so the matrix is zero.
            lambda = 0.0;
            residual = 0.0;
            converged = true;
            break;
        }
        kernels::scale(1.0 / norm, y.data(), n);
        x = y;
    }

    result.value = lambda;
    result.vector.values = x;
    result.residual = residual;
    result.iterations = iter;
    result.converged = converged;
    return result;
}

SpectralResult q_spectral_radius(const Complex& k, int i, double tol, int max_iter) {
    return spectral_radius(q_up(k, i), tol, max_iter);
}

long long tented_radius_exact(int n, int r) {
    if (r < 1 || n < r + 1) {
        throw validation_error("tented radius needs n >= r+1 >= 2, got n=" +
                               std::to_string(n) + " r=" + std::to_string(r));
    }
    return static_cast<long long>(r) * n - static_cast<long long>(r) * r + 1;
}

std::vector<double> jacobi_eigenvalues(const LabeledSparseMatrix& m) {
    if (!m.is_symmetric()) {
        throw validation_error("eigendecomposition needs a symmetric matrix");
    }
    std::size_t n = m.row_count();
    std::vector<double> a = m.to_dense();
    auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * n + c]; };

    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                s += at(p, q) * at(p, q);
            }
        }
        return std::sqrt(2.0 * s);
    };

    double frob = 0.0;
    for (double v : a) {
        frob += v * v;
    }
    frob = std::sqrt(frob);
    double threshold = std::max(1e-300, 1e-13 * std::max(1.0, frob));

    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps && off_norm() > threshold; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (apq == 0.0) {
                    continue;
                }
                double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = (tau >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                for (std::size_t k2 = 0; k2 < n; ++k2) {
                    double akp = at(k2, p);
                    double akq = at(k2, q);
                    at(k2, p) = c * akp - s * akq;
                    at(k2, q) = s * akp + c * akq;
                }
                for (std::size_t k2 = 0; k2 < n; ++k2) {
                    double apk = at(p, k2);
                    double aqk = at(q, k2);
                    at(p, k2) = c * apk - s * aqk;
                    at(q, k2) = s * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) {
        eig[i] = at(i, i);
    }
    std::sort(eig.begin(), eig.end());
    return eig;
}

int numeric_nullity(const LabeledSparseMatrix& m, double tol) {
    std::vector<double> eig = jacobi_eigenvalues(m);
    int count = 0;
    for (double v : eig) {
        if (v < tol) {
            ++count;
        }
    }
    return count;
}

std::optional<long long> integer_snap(double x, double tol) {
    double rounded = std::round(x);
    if (std::abs(x - rounded) < tol &&
        std::abs(rounded) < 9.0e18) {
        return static_cast<long long>(rounded);
    }
    return std::nullopt;
}

} // namespace scx
