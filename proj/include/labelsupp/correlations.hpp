#pragma once

#include <array>
#include <filesystem>
#include <vector>

#include <json.hpp>

#include "labelsupp/corpus.hpp"
#include "labelsupp/predictions.hpp"

namespace labelsupp {

// Conditional predicate statistics. Rows of spatial/temporal/entity are not
// distributions; each entry is its own conditional probability.
struct CorrelationSet {
  Matrix joint;                  // n_p x n_p, symmetric
  Matrix spatial;                // n_p x n_p, (i,j) = P(j | i) in one segment
  Matrix temporal;               // n_p x n_p, (i,j) = P(j at k+1 | i at k), same pair
  std::array<Matrix, 2> entity;  // [role] n_e x n_p, role 0 subject, 1 object

  int n_predicates() const { return static_cast<int>(joint.rows()); }
  int n_entities() const { return static_cast<int>(entity[0].rows()); }

  static CorrelationSet zeros(int n_predicates, int n_entities);
  bool operator==(const CorrelationSet& other) const;
};

// Label view: one sorted predicate set per pair sample in SampleIndex order.
using LabelSets = std::vector<std::vector<int>>;

LabelSets ground_truth_labels(const Corpus& corpus);

Matrix build_joint(const Corpus& corpus);
Matrix build_spatial(const Corpus& corpus);
Matrix build_temporal(const Corpus& corpus);
std::array<Matrix, 2> build_entity(const Corpus& corpus);
CorrelationSet build_correlations(const Corpus& corpus);

// Same counting over an arbitrary label view of the corpus structure.
Matrix build_joint(const Corpus& corpus, const LabelSets& labels);
Matrix build_spatial(const Corpus& corpus, const LabelSets& labels);
Matrix build_temporal(const Corpus& corpus, const LabelSets& labels);
std::array<Matrix, 2> build_entity(const Corpus& corpus, const LabelSets& labels);
CorrelationSet build_correlations(const Corpus& corpus, const LabelSets& labels);

// Predicate j counts as present iff raw probability > threshold.
LabelSets binarize(const PredictionTable& preds, double threshold);
CorrelationSet build_from_predictions(const Corpus& corpus, const PredictionTable& preds,
                                      double threshold = 0.5);

struct UpdateSchedule {
  double eta_s = 1e-5;
  double eta_t = 1e-4;
  double eta_e = 1e-4;
  int interval_s = 15;
  int interval_t = 15;
  int interval_e = 5;

  double eta(Source s) const;
  int interval(Source s) const;
};

void validate(const UpdateSchedule& schedule);

// Matrices whose interval divides `epoch` (epoch >= 1).
ChannelSet due_matrices(const UpdateSchedule& schedule, int epoch);

// result = eta * fresh + (1 - eta) * current for due matrices; the rest, and
// the joint matrix, are carried over from `current`.
CorrelationSet moving_average_update(const CorrelationSet& current, const CorrelationSet& fresh,
                                     const UpdateSchedule& schedule, int epoch);

nlohmann::ordered_json correlations_to_json(const CorrelationSet& corr);
CorrelationSet correlations_from_json(const nlohmann::json& doc);
void save_correlations(const CorrelationSet& corr, const std::filesystem::path& path);
CorrelationSet load_correlations(const std::filesystem::path& path);

}  // namespace labelsupp
