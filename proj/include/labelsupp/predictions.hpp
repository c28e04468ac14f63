#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "labelsupp/corpus.hpp"

namespace labelsupp {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Model outputs for one pair sample, all entries in [0,1].
struct PredictionVector {
  Vector predicate_probs;
  Vector subject_probs;
  Vector object_probs;
  // Absent when the pair has no same-pair sample in the previous segment.
  std::optional<Vector> prev_predicate_probs;
};

// Correlation-adjusted predicate probabilities, one vector per channel plus
// the product-of-priors combination.
struct FusedPrediction {
  Vector spatial;
  Vector temporal;
  Vector entity;
  Vector combined;

  const Vector& channel(Source s) const {
    switch (s) {
      case Source::kSpatial: return spatial;
      case Source::kTemporal: return temporal;
      case Source::kEntity: return entity;
    }
    return combined;
  }
};

// One row per pair sample, in SampleIndex order.
struct PredictionTable {
  std::vector<PredictionVector> raw;
  std::vector<FusedPrediction> fused;
  // Channels whose fused vectors carry correlation evidence.
  ChannelSet channels;

  std::size_t size() const { return raw.size(); }
};

}  // namespace labelsupp
