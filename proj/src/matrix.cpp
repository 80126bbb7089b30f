#include "mgrb/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mgrb {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(std::string(op) + ": shape mismatch (" +
                                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                    " vs " + std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()) + ")");
    }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    Matrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != m.cols_) throw std::invalid_argument("from_rows: ragged rows");
        std::size_t c = 0;
        for (double v : row) m(r, c++) = v;
        ++r;
    }
    return m;
}

bool Matrix::all_finite() const {
    for (double v : data_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

void Matrix::check_finite(const char* what) const {
    if (!all_finite()) {
        throw std::runtime_error(std::string(what) + ": non-finite entries");
    }
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimension mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    out.check_finite("multiply");
    return out;
}

Matrix multiply_transposed(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("multiply_transposed: dimension mismatch");
    Matrix out(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.rows(); ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(j, k);
            out(i, j) = acc;
        }
    }
    out.check_finite("multiply_transposed");
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
    return out;
}

Matrix add(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "add");
    Matrix out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] += b.data()[i];
    out.check_finite("add");
    return out;
}

Matrix subtract(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "subtract");
    Matrix out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] -= b.data()[i];
    out.check_finite("subtract");
    return out;
}

Matrix scale(const Matrix& m, double s) {
    Matrix out = m;
    for (double& v : out.data()) v *= s;
    out.check_finite("scale");
    return out;
}

void add_scaled_inplace(Matrix& dst, const Matrix& src, double s) {
    require_same_shape(dst, src, "add_scaled_inplace");
    for (std::size_t i = 0; i < dst.size(); ++i) dst.data()[i] += s * src.data()[i];
    dst.check_finite("add_scaled_inplace");
}

Matrix append_rows(const Matrix& top, const Matrix& bottom) {
    if (top.empty() && top.rows() == 0) {
        if (top.cols() != 0 && top.cols() != bottom.cols())
            throw std::invalid_argument("append_rows: column mismatch");
    } else if (top.cols() != bottom.cols()) {
        throw std::invalid_argument("append_rows: column mismatch");
    }
    Matrix out(top.rows() + bottom.rows(), bottom.cols());
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        for (std::size_t j = 0; j < bottom.cols(); ++j) out(top.rows() + i, j) = bottom(i, j);
    return out;
}

Matrix take_columns(const Matrix& m, std::size_t first_n) {
    if (first_n > m.cols()) throw std::invalid_argument("take_columns: too many columns requested");
    Matrix out(m.rows(), first_n);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < first_n; ++j) out(i, j) = m(i, j);
    return out;
}

Matrix gather_rows(const Matrix& m, std::span<const std::size_t> indices) {
    Matrix out(indices.size(), m.cols());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= m.rows()) throw std::invalid_argument("gather_rows: index out of range");
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(indices[i], j);
    }
    return out;
}

std::vector<double> column_mean(const Matrix& m) {
    if (m.rows() == 0) throw std::invalid_argument("column_mean: empty matrix");
    std::vector<double> mean(m.cols(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) mean[j] += m(i, j);
    for (double& v : mean) v /= static_cast<double>(m.rows());
    return mean;
}

}  // namespace mgrb
