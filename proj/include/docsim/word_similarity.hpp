#pragma once

#include <string_view>

namespace docsim {

/// Maps a word pair to a symmetric score in [0, 1].
///
/// Implementations must be safe to call concurrently from several threads.
class WordSimilarityProvider {
 public:
  virtual ~WordSimilarityProvider() = default;
  virtual double similarity(std::string_view a, std::string_view b) const = 0;
  double operator()(std::string_view a, std::string_view b) const { return similarity(a, b); }
};

/// Provider that scores every pair 0. Used for string-only runs.
class ZeroSimilarity final : public WordSimilarityProvider {
 public:
  double similarity(std::string_view, std::string_view) const override { return 0.0; }
};

}  // namespace docsim
