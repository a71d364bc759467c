#include "mvie/kernels.hpp"

#include <atomic>

namespace mvie::kernels {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy_scalar(double* y, double alpha, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_scalar(double* x, double alpha, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

void gemv_scalar(const double* m, const double* x, double* y, std::size_t n) {
    for (std::size_t r = 0; r < n; ++r) y[r] = dot_scalar(m + r * n, x, n);
}

void scaled_ger_scalar(double* m, double beta, double alpha, const double* u, const double* v,
                       std::size_t n) {
    for (std::size_t r = 0; r < n; ++r) {
        double* row = m + r * n;
        const double au = alpha * u[r];
        for (std::size_t c = 0; c < n; ++c) row[c] = beta * row[c] + au * v[c];
    }
}

void gram_scalar(const double* m, double* c, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const double v = dot_scalar(m + i * n, m + j * n, n);
            c[i * n + j] = v;
            c[j * n + i] = v;
        }
    }
}

constexpr KernelTable kScalar{
    "scalar", dot_scalar, axpy_scalar, scale_scalar, gemv_scalar, scaled_ger_scalar, gram_scalar,
};

}  // namespace

#if defined(MVIE_HAVE_AVX2)
const KernelTable& avx2_table_impl();  // kernels_avx2.cpp
#endif

const KernelTable& scalar_table() { return kScalar; }

const KernelTable* avx2_table() {
#if defined(MVIE_HAVE_AVX2)
    static const bool supported = [] {
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    }();
    if (supported) return &avx2_table_impl();
#endif
    return nullptr;
}

namespace {

const KernelTable* best_available() {
    if (const KernelTable* t = avx2_table()) return t;
    return &kScalar;
}

std::atomic<const KernelTable*>& current() {
    static std::atomic<const KernelTable*> table{best_available()};
    return table;
}

}  // namespace

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

bool select_backend(Backend backend) {
    switch (backend) {
        case Backend::Scalar:
            current().store(&kScalar);
            return true;
        case Backend::Avx2:
            if (const KernelTable* t = avx2_table()) {
                current().store(t);
                return true;
            }
            return false;
    }
    return false;
}

Backend active_backend() {
    return current().load() == &kScalar ? Backend::Scalar : Backend::Avx2;
}

}  // namespace mvie::kernels
