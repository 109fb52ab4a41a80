#pragma once

#include <Eigen/Sparse>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "docsim/svd.hpp"
#include "docsim/textprep.hpp"
#include "docsim/word_similarity.hpp"

namespace docsim {

/// Word vocabulary with dense indices in first-appearance order.
class Vocabulary {
 public:
  std::size_t add(const std::string& word);
  /// -1 when the word is unknown.
  std::ptrdiff_t find(std::string_view word) const;
  std::size_t size() const noexcept { return words_.size(); }
  const std::string& word(std::size_t i) const { return words_.at(i); }

 private:
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::string> words_;
};

/// Sliding-window co-occurrence statistics.
///
/// A sequence of length L contributes max(1, L - window + 1) windows (none when
/// empty). unigram(w) counts windows containing w; pair(a, b) counts windows
/// containing both distinct words.
class CooccurrenceModel {
 public:
  const Vocabulary& vocabulary() const noexcept { return vocab_; }
  std::size_t window_size() const noexcept { return window_; }
  std::uint64_t window_total() const noexcept { return windows_; }
  std::uint64_t unigram_count(std::string_view w) const;
  std::uint64_t pair_count(std::string_view a, std::string_view b) const;

  friend CooccurrenceModel build_cooccurrence(const std::vector<TokenSequence>& corpus,
                                              std::size_t window_size);

 private:
  static std::uint64_t key(std::size_t a, std::size_t b) noexcept;

  Vocabulary vocab_;
  std::vector<std::uint64_t> unigrams_;
  std::unordered_map<std::uint64_t, std::uint64_t> pairs_;
  std::uint64_t windows_ = 0;
  std::size_t window_ = 1;
};

/// Throws std::invalid_argument for an empty corpus or window_size == 0.
CooccurrenceModel build_cooccurrence(const std::vector<TokenSequence>& corpus, std::size_t window_size);

/// Normalized PMI clamped to [0, 1]. Identical in-vocabulary words and pairs
/// with joint probability 1 score 1; zero counts and unknown words score 0.
double npmi_similarity(const CooccurrenceModel& model, std::string_view w1, std::string_view w2);

/// Words x documents TF-IDF matrix; only positive weights are stored.
struct TermDocMatrix {
  Vocabulary vocab;
  Eigen::SparseMatrix<double> weights;
  std::size_t document_count = 0;
};

/// entry(w, d) = tf(w, d) * ln(N / df(w)). Throws std::invalid_argument on an empty corpus.
TermDocMatrix build_term_doc(const std::vector<TokenSequence>& corpus);

struct LsaModel {
  Vocabulary vocab;
  /// Row i is the latent vector of vocab.word(i): U_k diag(s_k).
  Eigen::MatrixXd word_vectors;
  Eigen::VectorXd singular_values;

  std::size_t rank() const noexcept { return static_cast<std::size_t>(word_vectors.cols()); }
};

/// Default LSA rank, clamped to the matrix dimensions.
inline constexpr std::size_t kDefaultLsaRank = 100;

/// Truncated SVD of the term-document matrix. Requires 1 <= k <= min(rows, cols).
LsaModel fit_lsa(const TermDocMatrix& matrix, std::size_t k, const SvdOptions& opts = {});

/// Cosine of latent vectors with negatives clamped to 0; unknown or zero vectors score 0.
double lsa_similarity(const LsaModel& model, std::string_view w1, std::string_view w2);

class NpmiWordSimilarity final : public WordSimilarityProvider {
 public:
  explicit NpmiWordSimilarity(const CooccurrenceModel& model) : model_(model) {}
  double similarity(std::string_view a, std::string_view b) const override {
    return npmi_similarity(model_, a, b);
  }

 private:
  const CooccurrenceModel& model_;
};

class LsaWordSimilarity final : public WordSimilarityProvider {
 public:
  explicit LsaWordSimilarity(const LsaModel& model) : model_(model) {}
  double similarity(std::string_view a, std::string_view b) const override {
    return lsa_similarity(model_, a, b);
  }

 private:
  const LsaModel& model_;
};

/// One document per line, each run through normalize + stop-word removal.
std::vector<TokenSequence> load_corpus(const std::string& path, const StopwordSet& stopwords);

}  // namespace docsim
