// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include "mvie/kernels.hpp"

namespace mvie::kernels {

namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy_avx2(double* y, double alpha, const double* x, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_avx2(double* x, double alpha, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) x[i] *= alpha;
}

void gemv_avx2(const double* m, const double* x, double* y, std::size_t n) {
    for (std::size_t r = 0; r < n; ++r) y[r] = dot_avx2(m + r * n, x, n);
}

void scaled_ger_avx2(double* m, double beta, double alpha, const double* u, const double* v,
                     std::size_t n) {
    const __m256d vb = _mm256_set1_pd(beta);
    for (std::size_t r = 0; r < n; ++r) {
        double* row = m + r * n;
        const double au = alpha * u[r];
        const __m256d vau = _mm256_set1_pd(au);
        std::size_t c = 0;
        for (; c + 4 <= n; c += 4) {
            const __m256d scaled = _mm256_mul_pd(vb, _mm256_loadu_pd(row + c));
            _mm256_storeu_pd(row + c, _mm256_fmadd_pd(vau, _mm256_loadu_pd(v + c), scaled));
        }
        for (; c < n; ++c) row[c] = beta * row[c] + au * v[c];
    }
}

void gram_avx2(const double* m, double* c, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const double v = dot_avx2(m + i * n, m + j * n, n);
            c[i * n + j] = v;
            c[j * n + i] = v;
        }
    }
}

constexpr KernelTable kAvx2{
    "avx2", dot_avx2, axpy_avx2, scale_avx2, gemv_avx2, scaled_ger_avx2, gram_avx2,
};

}  // namespace

const KernelTable& avx2_table_impl() { return kAvx2; }

}  // namespace mvie::kernels
