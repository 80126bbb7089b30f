#include "mgrb/losses.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mgrb/numeric.hpp"

namespace mgrb {

namespace {

void require_targets(const Matrix& logits, std::span<const int> targets) {
    if (logits.rows() != targets.size())
        throw std::invalid_argument("loss: target count does not match batch rows");
    if (logits.cols() == 0) throw std::invalid_argument("loss: zero-width logits");
    for (int t : targets) {
        if (t < 0 || static_cast<std::size_t>(t) >= logits.cols())
            throw std::invalid_argument("loss: target class " + std::to_string(t) +
                                        " out of range [0," + std::to_string(logits.cols()) + ")");
    }
    logits.check_finite("loss: logits");
}

}  // namespace

void ClassCounts::validate() const {
    if (counts.empty()) throw std::invalid_argument("ClassCounts: no classes registered");
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] == 0)
            throw std::invalid_argument("ClassCounts: class " + std::to_string(i) +
                                        " has zero samples");
    }
}

void CombineWeights::validate() const {
    if (lambda < 0.0 || lambda > 1.0)
        throw std::invalid_argument("CombineWeights: lambda must lie in [0,1]");
    if (alpha <= 0.0) throw std::invalid_argument("CombineWeights: alpha must be positive");
    if (temperature <= 0.0)
        throw std::invalid_argument("CombineWeights: temperature must be positive");
    if (beta <= 0.0) throw std::invalid_argument("CombineWeights: beta must be positive");
}

LossBundle cross_entropy(const Matrix& logits, std::span<const int> targets) {
    require_targets(logits, targets);
    const double batch = static_cast<double>(logits.rows());
    const Matrix logq = log_softmax_rows(logits);

    LossBundle out;
    out.grad = Matrix(logits.rows(), logits.cols());
    for (std::size_t i = 0; i < logits.rows(); ++i) {
        const auto t = static_cast<std::size_t>(targets[i]);
        out.value -= logq(i, t);
        for (std::size_t j = 0; j < logits.cols(); ++j)
            out.grad(i, j) = std::exp(logq(i, j)) / batch;
        out.grad(i, t) -= 1.0 / batch;
    }
    out.value /= batch;
    out.grad.check_finite("cross_entropy: grad");
    return out;
}

double class_balanced_weight(std::size_t n, std::size_t total_classes) {
    if (n == 0) throw std::invalid_argument("class_balanced_weight: zero sample count");
    if (total_classes < 2) return 1.0;  // gamma = 0: every weight collapses to 1
    const double gamma = (static_cast<double>(total_classes) - 1.0) /
                         static_cast<double>(total_classes);
    return (1.0 - gamma) / (1.0 - std::pow(gamma, static_cast<double>(n)));
}

LossBundle class_balanced(const Matrix& logits, std::span<const int> targets,
                          const ClassCounts& counts) {
    require_targets(logits, targets);
    counts.validate();
    if (counts.total_classes() != logits.cols())
        throw std::invalid_argument("class_balanced: counts do not cover all classes");

    const double batch = static_cast<double>(logits.rows());
    const Matrix logq = log_softmax_rows(logits);

    LossBundle out;
    out.grad = Matrix(logits.rows(), logits.cols());
    for (std::size_t i = 0; i < logits.rows(); ++i) {
        const auto t = static_cast<std::size_t>(targets[i]);
        const double w = class_balanced_weight(counts.counts[t], counts.total_classes());
        out.value -= w * logq(i, t);
        for (std::size_t j = 0; j < logits.cols(); ++j)
            out.grad(i, j) = w * std::exp(logq(i, j)) / batch;
        out.grad(i, t) -= w / batch;
    }
    out.value /= batch;
    out.grad.check_finite("class_balanced: grad");
    return out;
}

LossBundle distillation(const Matrix& student_logits, const Matrix& teacher_logits,
                        double temperature, std::size_t n_old) {
    if (n_old == 0) throw std::invalid_argument("distillation: no old classes (no teacher phase)");
    if (temperature <= 0.0)
        throw std::invalid_argument("distillation: temperature must be positive");
    if (teacher_logits.cols() != n_old)
        throw std::invalid_argument("distillation: teacher width must equal n_old");
    if (student_logits.cols() < n_old)
        throw std::invalid_argument("distillation: student narrower than teacher");
    if (student_logits.rows() != teacher_logits.rows())
        throw std::invalid_argument("distillation: batch size mismatch");
    student_logits.check_finite("distillation: student logits");
    teacher_logits.check_finite("distillation: teacher logits");

    const double batch = static_cast<double>(student_logits.rows());
    const Matrix student_t = scale(take_columns(student_logits, n_old), 1.0 / temperature);
    const Matrix teacher_t = scale(teacher_logits, 1.0 / temperature);
    const Matrix log_pi_student = log_softmax_rows(student_t);
    const Matrix pi_teacher = softmax_rows(teacher_t);

    LossBundle out;
    out.grad = Matrix(student_logits.rows(), student_logits.cols());
    for (std::size_t i = 0; i < student_logits.rows(); ++i) {
        for (std::size_t j = 0; j < n_old; ++j) {
            out.value -= pi_teacher(i, j) * log_pi_student(i, j);
            out.grad(i, j) = (std::exp(log_pi_student(i, j)) - pi_teacher(i, j)) /
                             (temperature * batch);
        }
    }
    out.value /= batch;
    out.grad.check_finite("distillation: grad");
    return out;
}

LossBundle multi_granularity(const Matrix& logits, const Matrix& soft_targets) {
    if (soft_targets.rows() != logits.rows() || soft_targets.cols() != logits.cols())
        throw std::invalid_argument("multi_granularity: soft target shape mismatch");
    if (logits.cols() == 0) throw std::invalid_argument("multi_granularity: zero-width logits");
    logits.check_finite("multi_granularity: logits");
    for (std::size_t i = 0; i < soft_targets.rows(); ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < soft_targets.cols(); ++j) {
            const double y = soft_targets(i, j);
            if (!std::isfinite(y) || y < 0.0)
                throw std::invalid_argument("multi_granularity: invalid soft target entry");
            sum += y;
        }
        if (std::abs(sum - 1.0) > 1e-6)
            throw std::invalid_argument("multi_granularity: soft target row " +
                                        std::to_string(i) + " not normalized");
    }

    const double batch = static_cast<double>(logits.rows());
    const Matrix logq = log_softmax_rows(logits);

    LossBundle out;
    out.grad = Matrix(logits.rows(), logits.cols());
    for (std::size_t i = 0; i < logits.rows(); ++i) {
        for (std::size_t j = 0; j < logits.cols(); ++j) {
            const double y = soft_targets(i, j);
            if (y > 0.0) out.value += y * (std::log(y) - logq(i, j));
            out.grad(i, j) = (std::exp(logq(i, j)) - y) / batch;
        }
    }
    out.value /= batch;
    out.grad.check_finite("multi_granularity: grad");
    return out;
}

LossBundle combined(const Matrix& logits, const Matrix* teacher_logits,
                    std::span<const int> targets, const ClassCounts& counts,
                    const Matrix* soft_targets, const CombineWeights& weights,
                    const LossTerms& terms) {
    weights.validate();
    if (terms.use_mg && soft_targets == nullptr)
        throw std::invalid_argument("combined: multi-granularity term enabled without soft targets");

    LossBundle cls = terms.use_cb ? class_balanced(logits, targets, counts)
                                  : cross_entropy(logits, targets);

    const bool kd_active = terms.use_kd && teacher_logits != nullptr && teacher_logits->cols() > 0;
    const double lambda = kd_active ? weights.lambda : 1.0;

    LossBundle out;
    out.value = lambda * cls.value;
    out.grad = scale(cls.grad, lambda);

    if (kd_active) {
        LossBundle kd = distillation(logits, *teacher_logits, weights.temperature,
                                     teacher_logits->cols());
        const double w = weights.alpha * (1.0 - lambda);
        out.value += w * kd.value;
        add_scaled_inplace(out.grad, kd.grad, w);
    }
    if (terms.use_mg) {
        LossBundle mg = multi_granularity(logits, *soft_targets);
        out.value += mg.value;
        add_scaled_inplace(out.grad, mg.grad, 1.0);
    }
    out.grad.check_finite("combined: grad");
    return out;
}

}  // namespace mgrb
