#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mgrb/matrix.hpp"

namespace mgrb {

// Per-class sample counts of the current phase's training split (exemplars
// included). Indexed by classifier column.
struct ClassCounts {
    std::vector<std::size_t> counts;

    std::size_t total_classes() const { return counts.size(); }
    void validate() const;  // every registered class needs n_i >= 1
};

// A scalar objective together with its exact gradient w.r.t. the logits.
struct LossBundle {
    double value = 0.0;
    Matrix grad;  // same shape as the logits it was computed from
};

// Coefficients of the combined objective. `lambda` must already be resolved
// by the caller (default N_old / (N_old + N_new); the swap switch lives in
// the experiment configuration and is applied before this struct is built).
struct CombineWeights {
    double lambda = 1.0;       // weight on the classification term
    double alpha = 1.0;        // scale between classification and distillation
    double temperature = 2.0;  // distillation temperature
    double beta = 10.0;        // soft-label sharpness (consumed by hierarchy)

    void validate() const;
};

// Ablation switches for the combined loss: classification term choice,
// distillation on/off, multi-granularity term on/off.
struct LossTerms {
    bool use_cb = true;
    bool use_kd = true;
    bool use_mg = true;
};

// Mean over the batch of -log softmax(logits) at the target column.
// Gradient per row: (softmax(z) - onehot) / batch.
LossBundle cross_entropy(const Matrix& logits, std::span<const int> targets);

// Effective-number re-weighting factor (1-gamma)/(1-gamma^n) with
// gamma = (N-1)/N. Exactly 1 when n == 1; strictly decreasing in n.
double class_balanced_weight(std::size_t n, std::size_t total_classes);

// Cross-entropy where each sample is scaled by its ground-truth class's
// effective-number weight.
LossBundle class_balanced(const Matrix& logits, std::span<const int> targets,
                          const ClassCounts& counts);

// Soft cross-entropy between temperature-scaled softmaxes over the first
// n_old columns. Student logits beyond n_old receive zero gradient; the
// teacher is a constant. Averaged over the batch.
LossBundle distillation(const Matrix& student_logits, const Matrix& teacher_logits,
                        double temperature, std::size_t n_old);

// KL(Y || softmax(logits)) per row, averaged over the batch. soft_targets
// holds one distribution per row; rows must sum to 1 within 1e-6.
// Gradient per row is exactly (softmax(z) - Y) / batch.
LossBundle multi_granularity(const Matrix& logits, const Matrix& soft_targets);

// The full objective: lambda * L_cls + alpha * (1 - lambda) * L_D + L_H.
// The distillation term is active only when a teacher is supplied AND
// terms.use_kd is set; otherwise lambda is treated as 1 (initial-phase
// override). terms.use_cb selects class-balanced vs plain cross-entropy;
// terms.use_mg requires soft_targets.
LossBundle combined(const Matrix& logits, const Matrix* teacher_logits,
                    std::span<const int> targets, const ClassCounts& counts,
                    const Matrix* soft_targets, const CombineWeights& weights,
                    const LossTerms& terms);

}  // namespace mgrb
