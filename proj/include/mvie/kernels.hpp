#pragma once

// Dense vector/matrix kernels used by the local search units.
//
// Every kernel has a scalar reference implementation. When the library is
// built with AVX2 support and the running CPU reports AVX2+FMA, the dispatch
// table points at the vectorized variants instead. The two tables are
// equivalence-tested against each other (see tests/test_kernels.cpp).
//
// Matrices are square, row-major, with leading dimension n.

#include <cstddef>
#include <string_view>

namespace mvie::kernels {

struct KernelTable {
    std::string_view name;
    // <a, b>
    double (*dot)(const double* a, const double* b, std::size_t n);
    // y += alpha * x
    void (*axpy)(double* y, double alpha, const double* x, std::size_t n);
    // x *= alpha
    void (*scale)(double* x, double alpha, std::size_t n);
    // y = M x
    void (*gemv)(const double* m, const double* x, double* y, std::size_t n);
    // M = beta * M + alpha * u v^T
    void (*scaled_ger)(double* m, double beta, double alpha, const double* u, const double* v, std::size_t n);
    // C = M M^T
    void (*gram)(const double* m, double* c, std::size_t n);
};

enum class Backend { Scalar, Avx2 };

const KernelTable& scalar_table();

// nullptr when the AVX2 variants were not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2_table();

// The table selected at startup (best available), unless overridden.
const KernelTable& active();

// Forces a backend for the whole process. Returns false (and changes nothing)
// when the requested backend is unavailable.
bool select_backend(Backend backend);

Backend active_backend();

}  // namespace mvie::kernels
