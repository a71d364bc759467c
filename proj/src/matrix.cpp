#include "mvie/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "mvie/kernels.hpp"

namespace mvie {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const double> diag) {
    Matrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

Vector multiply(const Matrix& m, std::span<const double> x) {
    Vector y(m.size());
    kernels::active().gemv(m.data(), x.data(), y.data(), m.size());
    return y;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            kernels::active().axpy(out.row(i), a(i, k), b.row(k), n);
        }
    }
    return out;
}

Matrix transpose(const Matrix& m) {
    const std::size_t n = m.size();
    Matrix t(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t(j, i) = m(i, j);
    return t;
}

Matrix gram(const Matrix& m) {
    Matrix c(m.size());
    kernels::active().gram(m.data(), c.data(), m.size());
    return c;
}

std::optional<Matrix> inverse(const Matrix& m) {
    const std::size_t n = m.size();
    Matrix a = m;
    Matrix inv = Matrix::identity(n);
    double scale = 0.0;
    for (std::size_t i = 0; i < n * n; ++i) scale = std::max(scale, std::abs(m.data()[i]));
    if (scale == 0.0) return std::nullopt;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        if (std::abs(a(pivot, col)) <= 1e-300 * scale) return std::nullopt;
        if (pivot != col) {
            std::swap_ranges(a.row(col), a.row(col) + n, a.row(pivot));
            std::swap_ranges(inv.row(col), inv.row(col) + n, inv.row(pivot));
        }
        const double d = 1.0 / a(col, col);
        kernels::active().scale(a.row(col), d, n);
        kernels::active().scale(inv.row(col), d, n);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = a(r, col);
            if (f == 0.0) continue;
            kernels::active().axpy(a.row(r), -f, a.row(col), n);
            kernels::active().axpy(inv.row(r), -f, inv.row(col), n);
        }
    }
    return inv;
}

double frobenius_norm(const Matrix& m) {
    const std::size_t nn = m.size() * m.size();
    return std::sqrt(kernels::active().dot(m.data(), m.data(), nn));
}

Vector symmetric_eigenvalues(const Matrix& s) {
    const std::size_t n = s.size();
    Matrix a = s;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        if (off <= 1e-300) break;
        double diag = 0.0;
        for (std::size_t i = 0; i < n; ++i) diag += a(i, i) * a(i, i);
        if (off <= 1e-32 * diag) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - sn * akq;
                    a(k, q) = sn * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - sn * aqk;
                    a(q, k) = sn * apk + c * aqk;
                }
            }
        }
    }
    Vector ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

double dot(std::span<const double> a, std::span<const double> b) {
    return kernels::active().dot(a.data(), b.data(), a.size());
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

}  // namespace mvie
