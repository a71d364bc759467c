#include <doctest.h>

#include <cmath>
#include <vector>

#include "mvie/kernels.hpp"
#include "mvie/rng.hpp"

using namespace mvie;
using kernels::KernelTable;

namespace {

std::vector<double> random_vec(Rng& rng, std::size_t len) {
    std::vector<double> v(len);
    for (double& x : v) x = rng.uniform(-3.0, 3.0);
    return v;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// Plain loops, independent of both kernel tables.
void check_table_against_loops(const KernelTable& t) {
    Rng rng(7);
    for (std::size_t n = 1; n <= 21; ++n) {
        const auto a = random_vec(rng, n), b = random_vec(rng, n);
        const auto m = random_vec(rng, n * n);

        double ref_dot = 0;
        for (std::size_t i = 0; i < n; ++i) ref_dot += a[i] * b[i];
        CHECK(t.dot(a.data(), b.data(), n) == doctest::Approx(ref_dot).epsilon(1e-13));

        auto y = b;
        t.axpy(y.data(), 0.7, a.data(), n);
        std::vector<double> ref_y(n);
        for (std::size_t i = 0; i < n; ++i) ref_y[i] = b[i] + 0.7 * a[i];
        CHECK(max_abs_diff(y, ref_y) < 1e-13);

        auto s = a;
        t.scale(s.data(), -1.5, n);
        for (std::size_t i = 0; i < n; ++i) CHECK(s[i] == -1.5 * a[i]);

        std::vector<double> mv(n), ref_mv(n, 0.0);
        t.gemv(m.data(), a.data(), mv.data(), n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) ref_mv[i] += m[i * n + j] * a[j];
        CHECK(max_abs_diff(mv, ref_mv) < 1e-12);

        auto g = m;
        t.scaled_ger(g.data(), 0.9, -0.3, a.data(), b.data(), n);
        std::vector<double> ref_g(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) ref_g[i * n + j] = 0.9 * m[i * n + j] - 0.3 * a[i] * b[j];
        CHECK(max_abs_diff(g, ref_g) < 1e-12);

        std::vector<double> c(n * n), ref_c(n * n, 0.0);
        t.gram(m.data(), c.data(), n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) ref_c[i * n + j] += m[i * n + k] * m[j * n + k];
        CHECK(max_abs_diff(c, ref_c) < 1e-11);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(c[i * n + j] == c[j * n + i]);
    }
}

}  // namespace

TEST_CASE("scalar kernels match plain loops") { check_table_against_loops(kernels::scalar_table()); }

TEST_CASE("avx2 kernels match plain loops") {
    const KernelTable* t = kernels::avx2_table();
    if (!t) {
        MESSAGE("AVX2 variants unavailable on this build or CPU");
        return;
    }
    check_table_against_loops(*t);
}

TEST_CASE("avx2 and scalar kernels agree on random inputs") {
    const KernelTable* v = kernels::avx2_table();
    if (!v) return;
    const KernelTable& s = kernels::scalar_table();
    Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng.index(24);
        const auto a = random_vec(rng, n), b = random_vec(rng, n), m = random_vec(rng, n * n);
        CHECK(v->dot(a.data(), b.data(), n) == doctest::Approx(s.dot(a.data(), b.data(), n)).epsilon(1e-12));

        std::vector<double> y1(n), y2(n);
        s.gemv(m.data(), a.data(), y1.data(), n);
        v->gemv(m.data(), a.data(), y2.data(), n);
        CHECK(max_abs_diff(y1, y2) < 1e-12);

        auto g1 = m, g2 = m;
        s.scaled_ger(g1.data(), 1.1, 0.4, a.data(), b.data(), n);
        v->scaled_ger(g2.data(), 1.1, 0.4, a.data(), b.data(), n);
        CHECK(max_abs_diff(g1, g2) < 1e-12);

        std::vector<double> c1(n * n), c2(n * n);
        s.gram(m.data(), c1.data(), n);
        v->gram(m.data(), c2.data(), n);
        CHECK(max_abs_diff(c1, c2) < 1e-11);
    }
}

TEST_CASE("backend selection") {
    const auto before = kernels::active_backend();
    CHECK(kernels::select_backend(kernels::Backend::Scalar));
    CHECK(kernels::active_backend() == kernels::Backend::Scalar);
    CHECK(kernels::active().name == kernels::scalar_table().name);
    const bool has_avx2 = kernels::avx2_table() != nullptr;
    CHECK(kernels::select_backend(kernels::Backend::Avx2) == has_avx2);
    kernels::select_backend(before);
}
