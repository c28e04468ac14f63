#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "labelsupp/corpus.hpp"
#include "labelsupp/predictions.hpp"

namespace labelsupp {

struct Triplet {
  std::int64_t subject_tid = 0;
  std::int64_t object_tid = 0;
  int predicate = 0;
  double score = 0.0;
};

// Per segment, aligned with the ground-truth corpus segment order. Each list
// is sorted by descending score; ties by (predicate, subject, object).
struct RankedTriplets {
  std::vector<std::vector<Triplet>> segments;
};

void sort_ranking(std::vector<Triplet>& triplets);

enum class ScoreSource : std::uint8_t { kRaw, kCombined };

// Every (pair, predicate) of every segment, scored by the chosen probabilities.
RankedTriplets rank_triplets(const Corpus& corpus, const PredictionTable& preds,
                             ScoreSource source = ScoreSource::kRaw);

// Ground-truth triplets scored 1, everything else 0.
RankedTriplets oracle_ranking(const Corpus& corpus);

enum class RecallAveraging : std::uint8_t {
  kPooled,      // hits per predicate pooled over segments, then averaged
  kPerSegment,  // per-segment recall per predicate, averaged over segments, then predicates
};

// Throws DataError when the ground truth holds no relation instances.
double recall_at_k(const RankedTriplets& pred, const Corpus& gt, int k);

// Entry per predicate; nullopt when the predicate has no ground-truth instance.
std::vector<std::optional<double>> per_predicate_recall(
    const RankedTriplets& pred, const Corpus& gt, int k,
    RecallAveraging averaging = RecallAveraging::kPooled);

double mean_recall_at_k(const RankedTriplets& pred, const Corpus& gt, int k,
                        RecallAveraging averaging = RecallAveraging::kPooled);

inline double mean_metric(double r50, double r100, double mr50, double mr100) {
  return (r50 + r100 + mr50 + mr100) / 4.0;
}

// Video-level tagging precision over distinct (subject_cat, predicate,
// object_cat) triplets, averaged over videos with ground truth.
double precision_at_k(const RankedTriplets& pred, const Corpus& gt, int k);

// Average precision of globally pooled (pair, predicate) detections, with the
// precision envelope interpolated over every recall point.
double map_score(const RankedTriplets& pred, const Corpus& gt);

struct DistributionReport {
  std::vector<std::string> predicate_names;
  std::vector<std::int64_t> count_before;
  std::vector<std::int64_t> count_after;
  std::vector<FrequencyGroup> groups;
  std::array<double, 3> share_before{};  // [head, body, tail]
  std::array<double, 3> share_after{};
  std::array<double, 3> share_delta{};
};

// Counts training targets (ground truth plus supplemented) in both corpora.
// Groups come from the `before` vocabulary counts.
DistributionReport distribution_report(const Corpus& before, const Corpus& after, GroupCuts cuts);
std::string distribution_csv(const DistributionReport& report);
std::string distribution_text(const DistributionReport& report);

struct MetricOptions {
  std::vector<int> recall_ks{50, 100};
  std::vector<int> precision_ks{5, 10};
  RecallAveraging averaging = RecallAveraging::kPooled;
  // Per-predicate frequency groups; computed from the ground-truth vocabulary
  // with proportional cuts when absent.
  std::optional<std::vector<FrequencyGroup>> groups;
};

struct MetricReport {
  std::map<int, double> recall_at;
  std::map<int, double> mean_recall_at;
  std::map<int, double> precision_at;
  double mean = 0.0;  // average of all R@K and mR@K values
  double map = 0.0;
  int group_k = 0;    // K used for per-predicate and group recall
  std::vector<std::optional<double>> per_predicate_recall;
  std::array<std::optional<double>, 3> group_recall;  // [head, body, tail]
};

MetricReport evaluate_ranking(const RankedTriplets& pred, const Corpus& gt,
                              const MetricOptions& options);

nlohmann::ordered_json metric_report_json(const MetricReport& report, const Vocabulary& vocab);
MetricReport metric_report_from_json(const nlohmann::json& doc);
std::string metric_report_text(const MetricReport& report);

}  // namespace labelsupp
