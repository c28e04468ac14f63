#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <json.hpp>

namespace labelsupp {

// Which correlation produced a supplemented label.
enum class Source : std::uint8_t { kSpatial = 0, kTemporal = 1, kEntity = 2 };

inline constexpr std::array<Source, 3> kAllSources = {Source::kSpatial, Source::kTemporal,
                                                      Source::kEntity};

char source_code(Source source);
Source parse_source(std::string_view code);

// Subset of {S, T, E}.
class ChannelSet {
 public:
  constexpr ChannelSet() = default;
  static constexpr ChannelSet all() { return ChannelSet(0b111); }
  static constexpr ChannelSet none() { return ChannelSet(0); }
  // Accepts any combination of the letters S, T, E; "" and "none" mean empty.
  static ChannelSet parse(std::string_view text);

  constexpr bool contains(Source s) const { return (bits_ >> static_cast<int>(s)) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr void insert(Source s) { bits_ |= static_cast<std::uint8_t>(1U << static_cast<int>(s)); }
  constexpr void erase(Source s) { bits_ &= static_cast<std::uint8_t>(~(1U << static_cast<int>(s))); }
  std::string to_string() const;

  constexpr bool operator==(const ChannelSet&) const = default;

 private:
  constexpr explicit ChannelSet(std::uint8_t bits) : bits_(bits) {}
  std::uint8_t bits_ = 0;
};

struct SupplementedLabel {
  int predicate = 0;
  std::vector<Source> sources;  // sorted, unique, nonempty
  double confidence = 0.0;

  bool operator==(const SupplementedLabel&) const = default;
};

struct PairSample {
  std::int64_t subject_tid = 0;
  std::int64_t object_tid = 0;
  int subject_cat = 0;
  int object_cat = 0;
  std::vector<int> predicates;  // ground truth, sorted and unique
  std::vector<double> features;  // empty when the corpus carries no features
  std::vector<SupplementedLabel> supplemented;

  bool has_features() const { return !features.empty(); }
  // Ground truth united with supplemented predicates, sorted.
  std::vector<int> targets() const;

  bool operator==(const PairSample&) const = default;
};

struct Segment {
  std::string video_id;
  int index = 0;
  std::vector<PairSample> pairs;

  bool operator==(const Segment&) const = default;
};

struct Vocabulary {
  std::vector<std::string> entity_names;
  std::vector<std::string> predicate_names;
  std::vector<std::int64_t> predicate_counts;

  int n_entities() const { return static_cast<int>(entity_names.size()); }
  int n_predicates() const { return static_cast<int>(predicate_names.size()); }

  bool operator==(const Vocabulary&) const = default;
};

// Segments of one video are contiguous and carry indices 0..n-1 in order.
// Segmentation length/overlap are recorded, never applied.
struct Corpus {
  Vocabulary vocabulary;
  std::string split = "train";
  std::vector<Segment> segments;
  int segment_length = 30;
  int segment_overlap = 15;

  std::size_t num_samples() const;
  // 0 when no sample carries features.
  std::size_t feature_dim() const;
  bool has_features() const { return feature_dim() > 0; }

  bool operator==(const Corpus&) const = default;
};

// Throws DataError naming the offending segment/pair.
void validate(const Corpus& corpus);

nlohmann::ordered_json corpus_to_json(const Corpus& corpus);
Corpus corpus_from_json(const nlohmann::json& doc);

Corpus load_corpus(const std::filesystem::path& path);
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);

// Flat addressing of pair samples in corpus order (segment by segment), plus
// the same-pair link to the previous segment of the same video.
class SampleIndex {
 public:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  explicit SampleIndex(const Corpus& corpus);

  std::size_t size() const { return locations_.size(); }
  std::size_t segment_of(std::size_t sample) const { return locations_[sample].first; }
  std::size_t pair_of(std::size_t sample) const { return locations_[sample].second; }
  std::size_t first_sample(std::size_t segment) const { return segment_offsets_[segment]; }
  // kNone when the pair does not exist in the previous segment.
  std::size_t previous(std::size_t sample) const { return previous_[sample]; }
  // Index of the segment preceding `segment` in its video, kNone for index 0.
  std::size_t previous_segment(std::size_t segment) const { return previous_segment_[segment]; }

  const PairSample& sample(const Corpus& corpus, std::size_t sample) const {
    return corpus.segments[segment_of(sample)].pairs[pair_of(sample)];
  }

 private:
  std::vector<std::pair<std::size_t, std::size_t>> locations_;
  std::vector<std::size_t> segment_offsets_;
  std::vector<std::size_t> previous_;
  std::vector<std::size_t> previous_segment_;
};

enum class FrequencyGroup : std::uint8_t { kHead = 0, kBody = 1, kTail = 2 };
std::string_view group_name(FrequencyGroup group);

struct GroupCuts {
  int head = 0;
  int body = 0;
};

// Cuts with the same head/body/tail proportions as 27/36/69 over 132 predicates.
GroupCuts proportional_cuts(int n_predicates);

// Descending count; ties by ascending predicate index. Throws ConfigError if
// head + body exceeds the predicate count.
std::vector<FrequencyGroup> group_by_frequency(const Vocabulary& vocab, GroupCuts cuts);

// Label occurrences per predicate over training targets (pair-sample level).
std::vector<std::int64_t> count_labels(const Corpus& corpus, bool include_supplemented);

// ---------------------------------------------------------------------------
// Synthetic corpora with planted correlations and controlled label omission.

struct SpatialRule {
  int from = 0;
  int to = 0;
  double probability = 1.0;
};

struct TemporalRule {
  int from = 0;  // present in segment k
  int to = 0;    // added in segment k + 1 of the same pair
  double probability = 1.0;
};

struct EntityRule {
  int role = 0;  // 0 subject, 1 object
  int entity = 0;
  int predicate = 0;
  double probability = 1.0;
};

// Pairs whose base predicate is `predicate` take `entity` as subject, and
// `entity` is the subject of no other base predicate.
struct SubjectBinding {
  int predicate = 0;
  int entity = 0;
};

struct SynthConfig {
  int n_entities = 8;
  int n_predicates = 20;
  int feature_dim = 32;
  int n_videos = 40;
  int segments_per_video = 8;
  int pairs_per_segment = 2;
  double zipf_exponent = 1.2;
  // Probability that a pair keeps its base predicate from the previous segment.
  double base_persistence = 0.0;
  // Assign entity categories round-robin within each base predicate so that
  // base predicates carry no entity information.
  bool balanced_entities = false;
  // Applied to the base predicate a track starts with.
  std::vector<SubjectBinding> subject_bindings;
  // When > 0, each video draws its base predicates from one of this many
  // interleaved groups (index mod video_topics).
  int video_topics = 0;
  // Rule consequents are never drawn as base predicates.
  bool exclusive_rule_targets = false;
  std::vector<SpatialRule> spatial_rules;
  std::vector<TemporalRule> temporal_rules;
  std::vector<EntityRule> entity_rules;
  // Per-predicate omission probability for the train split; empty means none.
  std::vector<double> drop_rate;
  double feature_noise = 0.3;
  // Test corpus gets this many videos; 0 means same as n_videos.
  int n_test_videos = 0;
  std::uint64_t seed = 7;
};

void validate(const SynthConfig& cfg);

struct SyntheticCorpora {
  Corpus train;
  Corpus test;
  // Train split with the full, pre-omission label sets. Evaluation only.
  Corpus train_oracle;
};

SyntheticCorpora generate_synthetic(const SynthConfig& cfg);

// Presets used by the benchmarks and the demo config.
SynthConfig recovery_preset(std::uint64_t seed);
SynthConfig longtail_preset(std::uint64_t seed);

}  // namespace labelsupp
