#pragma once

#include <array>

#include "labelsupp/correlations.hpp"
#include "labelsupp/predictions.hpp"

namespace labelsupp {

// Incorrect-prior products F = 1 - q for predicate j.
//
// Spatial excludes the i == j factor; temporal and entity range over the full
// index sets. Temporal returns 1 when there is no previous-segment prediction.
double incorrect_prior_spatial(const Vector& predicate_probs, const Matrix& spatial, int j);
double incorrect_prior_temporal(const Vector* prev_predicate_probs, const Matrix& temporal, int j);
double incorrect_prior_entity(const Vector& subject_probs, const Vector& object_probs,
                              const std::array<Matrix, 2>& entity, int j);

// Noisy-or of the model probability and the prior q = 1 - F:
// 1 - (1 - p) * F, evaluated as p + (1 - p) * q so that F == 1 returns p exactly.
inline double fuse(double p, double incorrect_prior) {
  return p + (1.0 - p) * (1.0 - incorrect_prior);
}

// Per-channel and combined fusion. Disabled channels contribute F = 1 and
// their per-channel vector equals the raw probabilities.
FusedPrediction fuse_all(const PredictionVector& pred, const CorrelationSet& corr,
                         ChannelSet channels);

// b_j = sum_i p_i * A(i, j).
Vector baseline_bias(const Vector& predicate_probs, const Matrix& joint);

// Additive joint-matrix baseline: clamp(p + b, 0, 1). Stored in the spatial
// and combined slots; temporal/entity slots hold the raw probabilities.
FusedPrediction fuse_joint_bias(const PredictionVector& pred, const Matrix& joint);

}  // namespace labelsupp
