#pragma once

#include <array>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "docsim/config.hpp"
#include "docsim/datasets.hpp"
#include "docsim/textprep.hpp"

namespace docsim {

/// Scores a sentence pair in [0, 1]. Implementations are immutable and thread-safe.
class PairScorer {
 public:
  virtual ~PairScorer() = default;
  virtual double score(const PairRecord& record) const = 0;
};

/// Loaded assets of one configured method; builds a scorer per task.
class Method {
 public:
  /// Loads taxonomy / embedding / corpus files. Throws AssetError or ParseError.
  static std::unique_ptr<Method> create(const MethodConfig& config, const StopwordSet& stopwords);
  virtual ~Method() = default;

  /// Scalar-only methods cannot produce 3-way entailment labels.
  virtual bool emits_labels() const { return false; }
  /// `train` supplies fitting data (TF-IDF statistics, fallback corpus).
  virtual std::unique_ptr<PairScorer> prepare(const std::vector<PairRecord>& train) const = 0;
};

struct ScoredPair {
  std::string id;
  double predicted = 0.0;
  GoldLabel gold;
};

/// Scores records in parallel; output order equals input order.
std::vector<ScoredPair> score_records(const PairScorer& scorer, const std::vector<PairRecord>& records,
                                      std::size_t threads = 0);

/// Threshold fitted on binary-labelled pairs (see fit_threshold).
double calibrate_threshold(const std::vector<ScoredPair>& train);

/// Method x (task, metric) grid. Cells hold fractions; empty cells print as N/A.
class ReportTable {
 public:
  static constexpr std::array<std::string_view, 6> kColumns = {
      "SICK-R Pearson", "SICK-R Spearman", "SICK-E Accuracy", "AFS Pearson", "AFS Spearman", "MRPC Accuracy"};
  enum Column { kSickRPearson, kSickRSpearman, kSickEAccuracy, kAfsPearson, kAfsSpearman, kMrpcAccuracy };
  using Row = std::array<std::optional<double>, kColumns.size()>;

  void add_row(std::string method, Row cells);
  const std::vector<std::string>& methods() const noexcept { return methods_; }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  /// Throws std::out_of_range for unknown methods.
  const Row& row(std::string_view method) const;

  /// Percentage with three decimals ("70.172%") or "N/A".
  static std::string format_cell(const std::optional<double>& value);
  std::string to_markdown() const;
  std::string to_csv() const;

 private:
  std::vector<std::string> methods_;
  std::vector<Row> rows_;
};

/// Reproduces the comparison table: correlations on the SICK-R and AFS test
/// splits, train-calibrated accuracy on the MRPC test split, N/A for SICK-E
/// with scalar methods and for datasets not configured. Per-task timing goes
/// to `log` when given.
ReportTable run_benchmark(const RunConfig& config, std::ostream* log = nullptr);

}  // namespace docsim
