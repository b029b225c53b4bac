#pragma once

#include "opineq/error.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace opineq {

using Complex = std::complex<double>;

/// Largest row or column count accepted anywhere in the library.
inline constexpr std::size_t kMaxDimension = 64;

/// Dense complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
        check_shape(rows, cols);
    }

    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        check_shape(rows, cols);
        if (data_.size() != rows * cols) {
            throw Error(ErrorCode::ShapeMismatch, "entry count does not match rows*cols");
        }
        for (const auto& z : data_) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                throw Error(ErrorCode::DomainError, "matrix entries must be finite");
            }
        }
    }

    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        check_shape(rows_, cols_);
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return ComplexMatrix(rows, cols); }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix diagonal(std::span<const double> values) {
        ComplexMatrix m(values.size(), values.size());
        for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
        return m;
    }

    static ComplexMatrix diagonal(std::initializer_list<double> values) {
        return diagonal(std::span<const double>(values.begin(), values.size()));
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return data_.empty(); }

    Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    std::span<const Complex> entries() const noexcept { return data_; }
    std::span<Complex> entries() noexcept { return data_; }

    ComplexMatrix adjoint() const {
        ComplexMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
        return out;
    }

    ComplexMatrix transpose() const {
        ComplexMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    double frobenius_norm() const {
        double scale = 0.0;
        for (const auto& z : data_) scale = std::max(scale, std::abs(z));
        if (scale == 0.0) return 0.0;
        double sum = 0.0;
        for (const auto& z : data_) sum += std::norm(z / scale);
        return scale * std::sqrt(sum);
    }

    Complex trace() const {
        Complex t = 0.0;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    bool all_finite() const {
        return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
            return std::isfinite(z.real()) && std::isfinite(z.imag());
        });
    }

    ComplexMatrix& operator+=(const ComplexMatrix& other) {
        require_same_shape(other);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
        return *this;
    }

    ComplexMatrix& operator-=(const ComplexMatrix& other) {
        require_same_shape(other);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
        return *this;
    }

    ComplexMatrix& operator*=(Complex s) {
        for (auto& z : data_) z *= s;
        return *this;
    }

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    static void check_shape(std::size_t rows, std::size_t cols) {
        if (rows == 0 || cols == 0) throw Error(ErrorCode::ShapeMismatch, "matrix must be at least 1x1");
        if (rows > kMaxDimension || cols > kMaxDimension) {
            throw Error(ErrorCode::SizeLimit, "dimension " + std::to_string(std::max(rows, cols)) +
                                                   " exceeds cap " + std::to_string(kMaxDimension));
        }
    }

    void require_same_shape(const ComplexMatrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) {
            throw Error(ErrorCode::ShapeMismatch, "operand shapes differ");
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

inline ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
inline ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
inline ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
inline ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
inline ComplexMatrix operator-(ComplexMatrix a) { return a *= -1.0; }

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "inner dimensions differ");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

/// Frobenius distance relative to max(1, ‖reference‖_F).
inline double relative_error(const ComplexMatrix& value, const ComplexMatrix& reference) {
    return (value - reference).frobenius_norm() / std::max(1.0, reference.frobenius_norm());
}

} // namespace opineq
