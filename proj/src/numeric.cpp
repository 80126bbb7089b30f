#include "mgrb/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mgrb {

std::vector<double> softmax(std::span<const double> v) {
    if (v.empty()) throw std::invalid_argument("softmax: empty input");
    double mx = v[0];
    for (double x : v) {
        if (!std::isfinite(x)) throw std::invalid_argument("softmax: non-finite input");
        mx = std::max(mx, x);
    }
    std::vector<double> out(v.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = std::exp(v[i] - mx);
        sum += out[i];
    }
    for (double& x : out) x /= sum;
    return out;
}

Matrix softmax_rows(const Matrix& m) {
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto p = softmax(m.row(i));
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = p[j];
    }
    return out;
}

Matrix log_softmax_rows(const Matrix& m) {
    if (m.cols() == 0) throw std::invalid_argument("log_softmax_rows: empty rows");
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = m.row(i);
        double mx = row[0];
        for (double x : row) {
            if (!std::isfinite(x)) throw std::invalid_argument("log_softmax_rows: non-finite input");
            mx = std::max(mx, x);
        }
        double sum = 0.0;
        for (double x : row) sum += std::exp(x - mx);
        const double lse = mx + std::log(sum);
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j) - lse;
    }
    return out;
}

std::vector<double> finite_difference_grad(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> x, double h) {
    if (h <= 0.0) throw std::invalid_argument("finite_difference_grad: h must be positive");
    std::vector<double> point(x.begin(), x.end());
    std::vector<double> grad(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double xi = point[i];
        point[i] = xi + h;
        const double fp = f(point);
        point[i] = xi - h;
        const double fm = f(point);
        point[i] = xi;
        if (!std::isfinite(fp) || !std::isfinite(fm)) {
            throw std::runtime_error("finite_difference_grad: non-finite function value");
        }
        grad[i] = (fp - fm) / (2.0 * h);
    }
    return grad;
}

double max_relative_error(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("max_relative_error: length mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double denom = std::max({1.0, std::abs(a[i]), std::abs(b[i])});
        worst = std::max(worst, std::abs(a[i] - b[i]) / denom);
    }
    return worst;
}

}  // namespace mgrb
