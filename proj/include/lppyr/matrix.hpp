#ifndef LPPYR_MATRIX_HPP
#define LPPYR_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace lppyr {

/// Dense row-major matrix of doubles. Sized for the problems this library
/// targets (n up to a few thousand); no sparsity, no views.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

    static Matrix identity(std::size_t n);

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }

    /// Matrix-vector product. Each row is accumulated left to right, so the
    /// result is reproducible bit for bit.
    std::vector<double> apply(std::span<const double> v) const;

    /// this * rhs, plain triple loop.
    Matrix multiply(const Matrix& rhs) const;

    const std::vector<double>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator-(const Matrix& a, const Matrix& b);

} // namespace lppyr

#endif
