#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace mgrb {

// Dense row-major matrix of doubles. Desk-scale linear algebra: everything is
// 64-bit, nothing is blocked or vectorized by hand, and every public operation
// verifies that its result is finite.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool all_finite() const;
    // Throws std::runtime_error naming `what` if any entry is NaN/Inf.
    void check_finite(const char* what) const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
// a * transpose(b); saves materializing the transpose in layer forwards.
Matrix multiply_transposed(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
Matrix add(const Matrix& a, const Matrix& b);
Matrix subtract(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& m, double s);
void add_scaled_inplace(Matrix& dst, const Matrix& src, double s);

Matrix append_rows(const Matrix& top, const Matrix& bottom);
Matrix take_columns(const Matrix& m, std::size_t first_n);
Matrix gather_rows(const Matrix& m, std::span<const std::size_t> indices);
std::vector<double> column_mean(const Matrix& m);

}  // namespace mgrb
