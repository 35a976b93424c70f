#pragma once

#include <cstddef>
#include <string>

namespace scx::kernels {

enum class Backend { scalar, avx2, neon };

/// Backend used by the kernels below. Starts as the best one the CPU
/// supports; the SCX_KERNEL_BACKEND environment variable (scalar|avx2|neon)
/// overrides the default, and set_backend overrides both. Selecting an
/// unsupported backend throws.
Backend active_backend();
void set_backend(Backend b);
Backend best_supported_backend();
bool backend_supported(Backend b);
const char* backend_name(Backend b);
Backend parse_backend(const std::string& name);

double dot(const double* x, const double* y, std::size_t n);

/// y += a * x
void axpy(double a, const double* x, double* y, std::size_t n);

/// x *= a
void scale(double a, double* x, std::size_t n);

/// y = M x for row-major dense M of shape rows x cols.
void matvec(const double* m, std::size_t rows, std::size_t cols, const double* x, double* y);

namespace detail {

double dot_scalar(const double* x, const double* y, std::size_t n);
void axpy_scalar(double a, const double* x, double* y, std::size_t n);
void scale_scalar(double a, double* x, std::size_t n);
void matvec_scalar(const double* m, std::size_t rows, std::size_t cols, const double* x,
                   double* y);

#if defined(__x86_64__) || defined(_M_X64)
double dot_avx2(const double* x, const double* y, std::size_t n);
void axpy_avx2(double a, const double* x, double* y, std::size_t n);
void scale_avx2(double a, double* x, std::size_t n);
void matvec_avx2(const double* m, std::size_t rows, std::size_t cols, const double* x,
                 double* y);
#endif

#if defined(__aarch64__)
double dot_neon(const double* x, const double* y, std::size_t n);
void axpy_neon(double a, const double* x, double* y, std::size_t n);
void scale_neon(double a, double* x, std::size_t n);
void matvec_neon(const double* m, std::size_t rows, std::size_t cols, const double* x,
                 double* y);
#endif

} // namespace detail

} // namespace scx::kernels
