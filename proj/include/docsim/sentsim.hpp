#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "docsim/textprep.hpp"
#include "docsim/word_similarity.hpp"

namespace docsim {

/// Outcome of removing exact word matches from two stop-word-free sentences.
struct MatchResult {
  std::size_t delta = 0;  ///< matched occurrence pairs
  TokenSequence rest1;
  TokenSequence rest2;
  std::size_t m = 0;  ///< length of the first sentence before matching
  std::size_t n = 0;  ///< length of the second sentence before matching
};

/// Convex weights for mixing string and knowledge similarity; w_string + w_knowledge == 1.
class CombineWeights {
 public:
  /// Throws std::invalid_argument unless 0 <= w_string <= 1.
  explicit CombineWeights(double w_string = 0.5);

  double string_weight() const noexcept { return w_string_; }
  double knowledge_weight() const noexcept { return 1.0 - w_string_; }

 private:
  double w_string_;
};

/// |rest1| x |rest2| grid of mixed similarities.
struct JointMatrix {
  Eigen::MatrixXd values;
  TokenSequence row_words;
  TokenSequence col_words;
};

/// Multiset matching by exact token equality. Each occurrence in s1 pairs with at
/// most one occurrence in s2; survivors keep their order.
MatchResult exact_match_filter(const TokenSequence& s1, const TokenSequence& s2);

/// entry(i, j) = w_s * string_word_sim(rest1[i], rest2[j]) + w_k * provider(rest1[i], rest2[j]).
JointMatrix build_joint_matrix(const TokenSequence& rest1, const TokenSequence& rest2,
                               const WordSimilarityProvider& provider, const CombineWeights& weights);

/// Repeatedly takes the global maximum, records it and deletes its row and
/// column, until the maximum is <= 0 or a dimension runs out. Ties go to the
/// lowest row, then the lowest column. The returned list is nonincreasing.
template <typename Derived>
std::vector<double> greedy_extract(const Eigen::MatrixBase<Derived>& matrix) {
  const Eigen::Index rows = matrix.rows();
  const Eigen::Index cols = matrix.cols();
  std::vector<char> row_alive(static_cast<std::size_t>(rows), 1);
  std::vector<char> col_alive(static_cast<std::size_t>(cols), 1);
  std::vector<double> rho;
  const Eigen::Index steps = std::min(rows, cols);
  for (Eigen::Index step = 0; step < steps; ++step) {
    Eigen::Index best_r = -1;
    Eigen::Index best_c = -1;
    double best = 0.0;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (!row_alive[static_cast<std::size_t>(r)]) continue;
      for (Eigen::Index c = 0; c < cols; ++c) {
        if (!col_alive[static_cast<std::size_t>(c)]) continue;
        const double v = static_cast<double>(matrix(r, c));
        if (best_r < 0 || v > best) {
          best = v;
          best_r = r;
          best_c = c;
        }
      }
    }
    if (best_r < 0 || !(best > 0.0)) break;
    rho.push_back(best);
    row_alive[static_cast<std::size_t>(best_r)] = 0;
    col_alive[static_cast<std::size_t>(best_c)] = 0;
  }
  return rho;
}

/// Sentence similarity S = (delta + sum(rho)) * (m + n) / (2 m n), clamped to [0, 1].
/// Both sentences empty gives 1; exactly one empty gives 0.
double combined_similarity(const TokenSequence& s1, const TokenSequence& s2,
                           const WordSimilarityProvider& provider, const CombineWeights& weights);

/// Intermediate values of one combined_similarity evaluation.
struct SimilarityTrace {
  MatchResult match;
  JointMatrix joint;
  std::vector<double> rho;
  double score = 0.0;
};

SimilarityTrace trace_similarity(const TokenSequence& s1, const TokenSequence& s2,
                                 const WordSimilarityProvider& provider, const CombineWeights& weights);

}  // namespace docsim
