#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace docsim {

enum class Entailment { kEntailment, kNeutral, kContradiction };

struct BinaryLabel {
  int value = 0;  ///< 0 or 1
  friend bool operator==(const BinaryLabel&, const BinaryLabel&) = default;
};

struct ScoreLabel {
  double value = 0.0;
  friend bool operator==(const ScoreLabel&, const ScoreLabel&) = default;
};

struct EntailmentLabel {
  Entailment value = Entailment::kNeutral;
  friend bool operator==(const EntailmentLabel&, const EntailmentLabel&) = default;
};

using GoldLabel = std::variant<BinaryLabel, ScoreLabel, EntailmentLabel>;

/// One benchmark item. `id` is `<dataset>:<row>` with a 0-based data-row index.
struct PairRecord {
  std::string id;
  std::string s1;
  std::string s2;
  GoldLabel gold;
};

/// Microsoft Research Paraphrase Corpus: tab-separated with a header line and
/// columns label, id1, id2, sentence1, sentence2.
std::vector<PairRecord> read_mrpc(std::istream& in, const std::string& source = "mrpc",
                                  const std::string& dataset = "mrpc", std::size_t first_row = 0);
std::vector<PairRecord> load_mrpc(const std::string& path);

/// Column layout of an argument-facet-similarity CSV file.
struct AfsOptions {
  std::size_t fields = 3;
  std::size_t score_column = 0;
  std::size_t s1_column = 1;
  std::size_t s2_column = 2;
  /// Skip the first line when its score field is not a number.
  bool detect_header = true;
};

/// Splits a line on commas that have no comma neighbour, then collapses every
/// doubled comma inside a field to a single one.
std::vector<std::string> split_double_comma(std::string_view line);

/// AFS files: comma-separated with in-sentence commas doubled.
std::vector<PairRecord> read_afs(std::istream& in, const std::string& source = "afs",
                                 const AfsOptions& options = {}, const std::string& dataset = "afs",
                                 std::size_t first_row = 0);
std::vector<PairRecord> load_afs(const std::string& path, const AfsOptions& options = {});

/// SICK yields the same rows twice: relatedness scores and entailment labels.
struct SickViews {
  std::vector<PairRecord> relatedness;
  std::vector<PairRecord> entailment;
};

/// Tab-separated with a header naming sentence_A, sentence_B, relatedness_score and
/// entailment_judgment (any order, case-insensitive).
SickViews read_sick(std::istream& in, const std::string& source = "sick", const std::string& dataset = "sick");
SickViews load_sick(const std::string& path);

struct SplitSpec {
  double train_frac = 0.6;
  double test_frac = 0.2;
  double dev_frac = 0.2;
  std::uint64_t seed = 0;
};

struct DatasetSplit {
  std::vector<PairRecord> train;
  std::vector<PairRecord> test;
  std::vector<PairRecord> dev;
};

/// Seeded Fisher-Yates shuffle (Lcg64) followed by contiguous slicing into
/// floor(train*N) / floor(test*N) / remainder records.
DatasetSplit split_dataset(const std::vector<PairRecord>& records, const SplitSpec& spec);

/// Permutation used by split_dataset: for i = N-1 down to 1, swap i with
/// rng.below(i + 1).
std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed);

}  // namespace docsim
