#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "labelsupp/correlations.hpp"
#include "labelsupp/corpus.hpp"
#include "labelsupp/metrics.hpp"
#include "labelsupp/model.hpp"
#include "labelsupp/supplement.hpp"

namespace labelsupp {

enum class Method : std::uint8_t {
  kTriple,         // spatial/temporal/entity correlations with noisy-or fusion
  kJointBaseline,  // joint co-occurrence matrix as an additive bias
  kPlain,          // no annotator, target trained on the given labels only
};

std::string_view method_name(Method m);
Method parse_method(std::string_view text);

struct SmoothingPlacement {
  bool annotator = false;
  bool target = true;
};

struct PipelineConfig {
  std::filesystem::path train_corpus;
  std::filesystem::path test_corpus;
  std::filesystem::path oracle_corpus;  // optional full-label train split
  // "recovery" or "longtail": run-all generates the corpora into the output
  // directory when no train corpus is given.
  std::string synthetic;
  std::filesystem::path output_dir = "out";

  Method method = Method::kTriple;
  ChannelSet channels = ChannelSet::all();
  // Prior channels fused into the annotator's training loss; defaults to
  // `channels`.
  std::optional<ChannelSet> annotator_channels;
  EntityMode entity_mode = EntityMode::kOneHot;
  TrainConfig annotator;
  TrainConfig target;
  UpdateSchedule schedule;

  bool smoothing = false;
  SmoothingPlacement smoothing_placement;
  double alpha = -0.25;
  double beta = 40.0;

  bool dynamic_update = false;
  bool refit_annotator = false;
  double binarize_threshold = 0.5;
  std::optional<double> threshold_override;

  std::vector<int> recall_ks{50, 100};
  std::vector<int> precision_ks{5, 10};
  RecallAveraging averaging = RecallAveraging::kPooled;

  int threads = 1;
  std::uint64_t seed = 7;
};

// Throws ConfigError on an unknown key or malformed value.
void apply_config_value(PipelineConfig& cfg, std::string_view key, std::string_view value);
// `key = value` lines; '#' starts a comment. Relative corpus paths resolve
// against the directory holding the file.
PipelineConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {});
PipelineConfig load_config(const std::filesystem::path& path);
void validate(const PipelineConfig& cfg);

// Per-role training configs with the run seed, smoothing and fusion settings
// resolved. Annotator seed = seed, target seed = seed + 1.
TrainConfig annotator_train_config(const PipelineConfig& cfg, const Corpus& train);
TrainConfig target_train_config(const PipelineConfig& cfg, const Corpus& train);

// Appends one JSON object per line to <output_dir>/run.log.
class RunLog {
 public:
  RunLog() = default;
  RunLog(const std::filesystem::path& path, bool truncate);

  void write(const nlohmann::ordered_json& event);
  const std::vector<nlohmann::ordered_json>& events() const { return events_; }

 private:
  std::filesystem::path path_;
  std::vector<nlohmann::ordered_json> events_;
};

// Output layout.
struct RunPaths {
  std::filesystem::path dir;
  std::filesystem::path correlations() const { return dir / "corr.json"; }
  std::filesystem::path annotator() const { return dir / "annotator.json"; }
  std::filesystem::path merged_corpus() const { return dir / "merged_corpus.json"; }
  std::filesystem::path supplement_report() const { return dir / "supplement_report.json"; }
  std::filesystem::path target() const { return dir / "target.json"; }
  std::filesystem::path metrics() const { return dir / "metrics.json"; }
  std::filesystem::path distribution() const { return dir / "distribution.csv"; }
  std::filesystem::path log() const { return dir / "run.log"; }
};

// Loads and validates the train corpus; checks the vocabulary of every other
// configured corpus against it.
Corpus load_train_corpus(const PipelineConfig& cfg);
Corpus load_test_corpus(const PipelineConfig& cfg, const Corpus& train);

struct AnnotatorStage {
  ClassifierParams params;
  CorrelationSet correlations;
};

// Correlations from the train ground truth, then the annotator trained with
// the configured prior. Persists corr.json and annotator.json.
AnnotatorStage run_annotator_stage(const PipelineConfig& cfg, const Corpus& train, RunLog& log);

PredictOptions annotator_predict_options(const PipelineConfig& cfg);

struct SupplementStage {
  Corpus merged;
  SupplementResult result;
  ThresholdSet thresholds;
};

// predict -> candidates -> thresholds -> labels -> merge. Nothing is persisted.
SupplementStage supplement_corpus(const PipelineConfig& cfg, const Corpus& train,
                                  const ClassifierParams& annotator,
                                  const CorrelationSet& correlations);

// supplement_corpus plus merged_corpus.json and supplement_report.json.
SupplementStage run_supplement_stage(const PipelineConfig& cfg, const Corpus& train,
                                     const ClassifierParams& annotator,
                                     const CorrelationSet& correlations, RunLog& log);

// Trains the target on `merged`. With dynamic updating, each due epoch blends
// fresh prediction statistics into the correlations, re-supplements `train`
// and continues on the refreshed labels. Persists target.json.
ClassifierParams run_target_stage(const PipelineConfig& cfg, const Corpus& train,
                                  const Corpus& merged, const CorrelationSet& correlations,
                                  const ClassifierParams* annotator, RunLog& log);

// Raw target scores on the test split. Persists metrics.json and, when a
// merged corpus is given, distribution.csv.
MetricReport run_evaluate_stage(const PipelineConfig& cfg, const ClassifierParams& params,
                                const Corpus& train, const Corpus& test, const Corpus* merged,
                                RunLog& log);

struct RunSummary {
  MetricReport metrics;
  std::optional<SupplementResult> supplement;
};

// Every stage in order, writing a fresh run.log.
RunSummary run_all(const PipelineConfig& cfg);

// Synthetic corpora written as train.json, test.json, train_oracle.json.
void write_synthetic(const SynthConfig& synth, const std::filesystem::path& dir);
SynthConfig synthetic_preset(std::string_view name, std::uint64_t seed);

}  // namespace labelsupp
