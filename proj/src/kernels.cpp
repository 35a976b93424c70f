#include "scx/kernels.hpp"

#include <atomic>
#include <cstdlib>

#include "scx/errors.hpp"

namespace scx::kernels {
namespace detail {

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += x[i] * y[i];
    }
    return acc;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] += a * x[i];
    }
}

void scale_scalar(double a, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        x[i] *= a;
    }
}

void matvec_scalar(const double* m, std::size_t rows, std::size_t cols, const double* x,
                   double* y) {
    for (std::size_t r = 0; r < rows; ++r) {
        y[r] = dot_scalar(m + r * cols, x, cols);
    }
}

} // namespace detail

bool backend_supported(Backend b) {
    switch (b) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Backend::neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Backend best_supported_backend() {
    if (backend_supported(Backend::avx2)) {
        return Backend::avx2;
    }
    if (backend_supported(Backend::neon)) {
        return Backend::neon;
    }
    return Backend::scalar;
}

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::scalar:
            return "scalar";
        case Backend::avx2:
            return "avx2";
        case Backend::neon:
            return "neon";
    }
    return "unknown";
}

Backend parse_backend(const std::string& name) {
    if (name == "scalar") {
        return Backend::scalar;
    }
    if (name == "avx2") {
        return Backend::avx2;
    }
    if (name == "neon") {
        return Backend::neon;
    }
    throw validation_error("unknown kernel backend '" + name + "'");
}

namespace {

Backend initial_backend() {
    if (const char* env = std::getenv("SCX_KERNEL_BACKEND")) {
        Backend b = parse_backend(env);
        if (!backend_supported(b)) {
            throw validation_error(std::string("SCX_KERNEL_BACKEND=") + env +
                                   " is not supported on this CPU");
        }
        return b;
    }
    return best_supported_backend();
}

std::atomic<Backend>& backend_state() {
    static std::atomic<Backend> state{initial_backend()};
    return state;
}

} // namespace

Backend active_backend() {
    return backend_state().load(std::memory_order_relaxed);
}

void set_backend(Backend b) {
    if (!backend_supported(b)) {
        throw validation_error(std::string("kernel backend ") + backend_name(b) +
                               " is not supported on this CPU");
    }
    backend_state().store(b, std::memory_order_relaxed);
}

double dot(const double* x, const double* y, std::size_t n) {
    switch (active_backend()) {
#if defined(__x86_64__) || defined(_M_X64)
        case Backend::avx2:
            return detail::dot_avx2(x, y, n);
#endif
#if defined(__aarch64__)
        case Backend::neon:
            return detail::dot_neon(x, y, n);
#endif
        default:
            return detail::dot_scalar(x, y, n);
    }
}

void axpy(double a, const double* x, double* y, std::size_t n) {
    switch (active_backend()) {
#if defined(__x86_64__) || defined(_M_X64)
        case Backend::avx2:
            detail::axpy_avx2(a, x, y, n);
            return;
#endif
#if defined(__aarch64__)
        case Backend::neon:
            detail::axpy_neon(a, x, y, n);
            return;
#endif
        default:
            detail::axpy_scalar(a, x, y, n);
            return;
    }
}

void scale(double a, double* x, std::size_t n) {
    switch (active_backend()) {
#if defined(__x86_64__) || defined(_M_X64)
        case Backend::avx2:
            detail::scale_avx2(a, x, n);
            return;
#endif
#if defined(__aarch64__)
        case Backend::neon:
            detail::scale_neon(a, x, n);
            return;
#endif
        default:
            detail::scale_scalar(a, x, n);
            return;
    }
}

void matvec(const double* m, std::size_t rows, std::size_t cols, const double* x, double* y) {
    switch (active_backend()) {
#if defined(__x86_64__) || defined(_M_X64)
        case Backend::avx2:
            detail::matvec_avx2(m, rows, cols, x, y);
            return;
#endif
#if defined(__aarch64__)
        case Backend::neon:
            detail::matvec_neon(m, rows, cols, x, y);
            return;
#endif
        default:
            detail::matvec_scalar(m, rows, cols, x, y);
            return;
    }
}

} // namespace scx::kernels
