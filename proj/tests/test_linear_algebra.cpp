#include <doctest.h>

#include <cmath>
#include <set>

#include "mvie/matrix.hpp"
#include "mvie/rng.hpp"

using namespace mvie;

namespace {

Matrix random_matrix(Rng& rng, std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.uniform(-1.0, 1.0) + (i == j ? 2.0 : 0.0);
    return m;
}

}  // namespace

TEST_CASE("identity and diagonal") {
    const Matrix I = Matrix::identity(3);
    CHECK(I(0, 0) == 1.0);
    CHECK(I(0, 1) == 0.0);
    const Vector d{2.0, 3.0};
    const Matrix D = Matrix::diagonal(d);
    CHECK(multiply(D, Vector{1.0, 1.0}) == Vector{2.0, 3.0});
}

TEST_CASE("inverse times matrix is the identity") {
    Rng rng(3);
    for (std::size_t n : {1u, 2u, 5u, 10u}) {
        const Matrix a = random_matrix(rng, n);
        const auto inv = inverse(a);
        REQUIRE(inv);
        const Matrix p = multiply(a, *inv);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(p(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
    }
}

TEST_CASE("singular matrix has no inverse") {
    Matrix a(2, 1.0);
    CHECK_FALSE(inverse(a).has_value());
}

TEST_CASE("gram equals m times its transpose") {
    Rng rng(4);
    const Matrix a = random_matrix(rng, 4);
    const Matrix g = gram(a);
    const Matrix ref = multiply(a, transpose(a));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(g(i, j) == doctest::Approx(ref(i, j)).epsilon(1e-13));
}

TEST_CASE("symmetric eigenvalues") {
    Matrix s(2);
    s(0, 0) = 2;
    s(0, 1) = s(1, 0) = 1;
    s(1, 1) = 2;
    const Vector e = symmetric_eigenvalues(s);
    CHECK(e[0] == doctest::Approx(1.0));
    CHECK(e[1] == doctest::Approx(3.0));

    // Trace and determinant checks on a random SPD matrix.
    Rng rng(5);
    const Matrix c = gram(random_matrix(rng, 5));
    const Vector ev = symmetric_eigenvalues(c);
    double tr = 0, sum = 0;
    for (std::size_t i = 0; i < 5; ++i) tr += c(i, i);
    for (double v : ev) sum += v;
    CHECK(sum == doctest::Approx(tr).epsilon(1e-10));
    for (std::size_t i = 1; i < ev.size(); ++i) CHECK(ev[i - 1] <= ev[i]);
}

TEST_CASE("vector helpers") {
    const Vector a{3, 4}, b{0, 0};
    CHECK(dot(a, a) == 25);
    CHECK(norm(a) == 5);
    CHECK(squared_distance(a, b) == 25);
    Matrix m(2);
    m(0, 0) = 1;
    m(1, 1) = 2;
    CHECK(frobenius_norm(m) == doctest::Approx(std::sqrt(5.0)));
}

TEST_CASE("rng streams are reproducible") {
    Rng a(42), b(42), c(43);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        const double x = a.uniform();
        CHECK(x == b.uniform());
        differs = differs || x != c.uniform();
    }
    CHECK(differs);
}

TEST_CASE("rng uniform and index ranges") {
    Rng rng(1);
    std::set<std::size_t> seen;
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        const std::size_t k = rng.index(7);
        CHECK(k < 7);
        seen.insert(k);
    }
    CHECK(seen.size() == 7);
}

TEST_CASE("rng normal moments") {
    Rng rng(11);
    const int n = 200000;
    double s1 = 0, s2 = 0;
    for (int i = 0; i < n; ++i) {
        const double z = rng.normal();
        s1 += z;
        s2 += z * z;
    }
    const double mean = s1 / n, var = s2 / n - mean * mean;
    // 4 standard errors
    CHECK(std::abs(mean) < 4.0 / std::sqrt(n));
    CHECK(std::abs(var - 1.0) < 4.0 * std::sqrt(2.0 / n));
}
