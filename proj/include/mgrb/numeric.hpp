#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mgrb/matrix.hpp"

namespace mgrb {

// Numerically stable softmax (max-subtraction). Throws std::invalid_argument
// on empty or non-finite input. Output sums to 1 and preserves the argmax.
std::vector<double> softmax(std::span<const double> v);

// Row-wise softmax of a matrix.
Matrix softmax_rows(const Matrix& m);

// Row-wise log-softmax; stable companion for entropy-style losses.
Matrix log_softmax_rows(const Matrix& m);

// Central-difference gradient estimate: (f(x+h e_i) - f(x-h e_i)) / 2h.
// The verification oracle used by the gradient tests; independent of any
// backpropagation path.
std::vector<double> finite_difference_grad(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> x, double h);

// max_i |a_i - b_i| / max(1, |a_i|, |b_i|)
double max_relative_error(std::span<const double> a, std::span<const double> b);

}  // namespace mgrb
