#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace mvie {

using Vector = std::vector<double>;

// Square, row-major dense matrix. Dimensions in this project are small
// (n <= 20), so everything is stored contiguously and copied by value.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const double> diag);

    std::size_t size() const { return n_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    double* row(std::size_t r) { return data_.data() + r * n_; }
    const double* row(std::size_t r) const { return data_.data() + r * n_; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

// y = M x
Vector multiply(const Matrix& m, std::span<const double> x);

Matrix multiply(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& m);

// M M^T
Matrix gram(const Matrix& m);

// Gauss-Jordan with partial pivoting; nullopt when numerically singular.
std::optional<Matrix> inverse(const Matrix& m);

double frobenius_norm(const Matrix& m);

// Eigenvalues of a symmetric matrix (cyclic Jacobi), ascending.
Vector symmetric_eigenvalues(const Matrix& s);

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);
double squared_distance(std::span<const double> a, std::span<const double> b);

}  // namespace mvie
