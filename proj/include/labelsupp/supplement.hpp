#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "labelsupp/corpus.hpp"
#include "labelsupp/model.hpp"
#include "labelsupp/predictions.hpp"

namespace labelsupp {

// Per-category confidence thresholds, one vector per channel.
struct ThresholdSet {
  Vector spatial;
  Vector temporal;
  Vector entity;

  const Vector& channel(Source s) const;
  Vector& channel(Source s);
  static ThresholdSet constant(int n_predicates, double value);
};

// Mean channel-fused probability over the candidate samples. Throws DataError
// on an empty candidate set.
ThresholdSet compute_thresholds(const PredictionTable& preds, std::span<const std::size_t> candidates);

struct CandidateSelection {
  std::vector<std::size_t> samples;  // ascending sample indices
  std::vector<double> hitting_scores;
  double mean_hitting_score = 0.0;
  // Ground-truth pair match: always satisfied when pairs are given.
  bool pair_match_satisfied = true;
};

// Hitting score = min(subject prob of its gt category, object prob of its gt
// category); candidates score strictly above the corpus mean. When no sample
// clears the mean (every score equal, as with one-hot entities) all samples
// are candidates.
CandidateSelection select_candidates(const Corpus& corpus, const PredictionTable& preds,
                                     EntityMode mode);

struct SampleSupplement {
  std::size_t sample = 0;
  std::vector<SupplementedLabel> labels;  // ascending predicate
};

struct SupplementResult {
  std::vector<SampleSupplement> samples;  // ascending sample, nonempty label lists only
  std::vector<std::int64_t> added_per_predicate;
  std::array<std::vector<std::int64_t>, 3> added_by_source;  // [source][predicate]
  std::int64_t total_added = 0;
};

// For every candidate and every enabled channel C: {k : fused_C[k] > t_C[k]};
// union across channels minus ground truth. Confidence is the largest fused
// probability among the contributing channels.
SupplementResult supplement_labels(const Corpus& corpus, const PredictionTable& preds,
                                   const ThresholdSet& thresholds,
                                   std::span<const std::size_t> candidates);

// Copy of `corpus` with the supplemented labels attached. Labels already
// present (ground truth or earlier supplements) are skipped.
Corpus merge_into_corpus(const Corpus& corpus, const SupplementResult& result);

nlohmann::ordered_json supplement_report_json(const Vocabulary& vocab,
                                              const SupplementResult& result);

// Recovery of omitted labels measured against the full-label oracle corpus.
struct RecoveryStats {
  std::int64_t dropped = 0;        // oracle labels missing from the annotation
  std::int64_t recovered = 0;      // of those, supplemented
  std::int64_t supplemented = 0;   // all supplemented labels
  std::int64_t correct = 0;        // supplemented labels present in the oracle
  double recall() const;
  double precision() const;
};

RecoveryStats recovery_against_oracle(const Corpus& annotated, const Corpus& oracle,
                                      const SupplementResult& result);

}  // namespace labelsupp
