#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include <json.hpp>

#include "labelsupp/correlations.hpp"
#include "labelsupp/corpus.hpp"
#include "labelsupp/predictions.hpp"

namespace labelsupp {

// Linear multi-label classifier: a predicate head and two entity heads
// (subject role, object role) over the same feature vector.
struct ClassifierParams {
  Matrix predicate_weights;  // d x n_p
  Vector predicate_bias;
  Matrix subject_weights;    // d x n_e
  Vector subject_bias;
  Matrix object_weights;     // d x n_e
  Vector object_bias;
  std::uint64_t seed = 0;

  int feature_dim() const { return static_cast<int>(predicate_weights.rows()); }
  int n_predicates() const { return static_cast<int>(predicate_weights.cols()); }
  int n_entities() const { return static_cast<int>(subject_weights.cols()); }

  static ClassifierParams zeros(int feature_dim, int n_predicates, int n_entities);
  // Gaussian weights with standard deviation `scale`, zero biases.
  static ClassifierParams random(int feature_dim, int n_predicates, int n_entities,
                                 std::uint64_t seed, double scale);

  bool operator==(const ClassifierParams& other) const;
};

struct Logits {
  Vector predicate;
  Vector subject;
  Vector object;
};

// Throws DataError on a feature-dimension mismatch.
Logits forward(const ClassifierParams& params, std::span<const double> features);

double logistic(double x);
Vector logistic(const Vector& x);

// Logit offsets M subtracted from predicate logits during training.
struct SmoothingConfig {
  double alpha = -0.25;
  double beta = 40.0;
  bool enabled = false;
  Vector offsets;
};

// M_j = beta * count_j^alpha / max_k(count_k^alpha). Zero counts with alpha < 0
// throw ConfigError: floor counts at 1 first.
SmoothingConfig build_smoothing(std::span<const std::int64_t> counts, double alpha, double beta);

enum class EntityMode : std::uint8_t {
  kOneHot,   // ground-truth categories as one-hot entity probabilities
  kLearned,  // entity-head probabilities
};

enum class ModelRole : std::uint8_t { kAnnotator, kTarget };

// How correlation priors enter the predicate probabilities.
struct PriorSettings {
  const CorrelationSet* correlations = nullptr;
  ChannelSet channels;
  bool joint_bias = false;  // additive joint-matrix baseline instead of channels
  EntityMode entity_mode = EntityMode::kOneHot;

  bool active() const { return correlations != nullptr && (joint_bias || !channels.empty()); }
};

struct TrainConfig {
  int epochs = 30;
  double learning_rate = 0.5;
  int batch_size = 32;
  ChannelSet fusion_channels;
  bool joint_bias = false;
  EntityMode entity_mode = EntityMode::kOneHot;
  SmoothingConfig smoothing;
  std::uint64_t seed = 7;
  double init_scale = 0.01;
};

void validate(const TrainConfig& cfg);

struct LossInput {
  std::span<const double> features;
  std::span<const int> targets;  // sorted predicate indices
  int subject_cat = 0;
  int object_cat = 0;
  const Vector* prev_predicate_probs = nullptr;  // treated as a constant
};

struct LossTerms {
  double predicate = 0.0;
  double entity = 0.0;
  double total() const { return predicate + entity; }
};

// Summed BCE of one sample: predicate head after optional smoothing and prior
// fusion, plus one-positive BCE per entity role. When `grad` is non-null the
// exact gradient is accumulated into it.
LossTerms sample_loss(const ClassifierParams& params, const LossInput& input,
                      const PriorSettings& prior, const SmoothingConfig* smoothing,
                      ClassifierParams* grad);

struct EpochStats {
  int epoch = 0;
  double loss = 0.0;  // mean per-sample total loss over the epoch
  double predicate_loss = 0.0;
  double entity_loss = 0.0;
};

// Mini-batch gradient descent over the training targets (ground truth plus
// supplemented labels). Previous-segment predictions for the temporal prior
// are recomputed with the current parameters at the start of each batch.
class Trainer {
 public:
  Trainer(const Corpus& corpus, std::optional<CorrelationSet> correlations, TrainConfig cfg,
          ModelRole role);

  EpochStats run_epoch();
  // Replace training targets; structure and features must match.
  void set_corpus(const Corpus& corpus);
  void set_correlations(CorrelationSet correlations);

  const ClassifierParams& params() const { return params_; }
  int epochs_done() const { return epoch_; }
  ModelRole role() const { return role_; }

 private:
  void load_targets(const Corpus& corpus);

  TrainConfig cfg_;
  ModelRole role_;
  std::optional<CorrelationSet> correlations_;
  ClassifierParams params_;
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> features_;
  std::vector<std::vector<int>> targets_;
  std::vector<int> subject_cats_;
  std::vector<int> object_cats_;
  std::vector<std::size_t> previous_;
  std::vector<std::size_t> order_;
  std::size_t num_segments_ = 0;
  std::mt19937_64 rng_;
  int epoch_ = 0;
};

ClassifierParams train(const Corpus& corpus, const CorrelationSet* correlations,
                       const TrainConfig& cfg, ModelRole role,
                       std::vector<EpochStats>* history = nullptr);

struct PredictOptions {
  ChannelSet channels;
  bool joint_bias = false;
  EntityMode entity_mode = EntityMode::kOneHot;
  int threads = 1;
};

// Raw and fused predictions for every pair sample. Smoothing never applies here.
PredictionTable predict(const ClassifierParams& params, const Corpus& corpus,
                        const CorrelationSet* correlations, const PredictOptions& options);

nlohmann::ordered_json params_to_json(const ClassifierParams& params);
ClassifierParams params_from_json(const nlohmann::json& doc);
void save_params(const ClassifierParams& params, const std::filesystem::path& path);
ClassifierParams load_params(const std::filesystem::path& path);

}  // namespace labelsupp
