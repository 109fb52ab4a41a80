#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "docsim/word_similarity.hpp"

namespace docsim {

// Character-level LCS family. All functions compare Unicode scalar values and
// are symmetric in their arguments.

/// Longest common (not necessarily contiguous) subsequence length.
std::size_t lcs_len(std::u32string_view a, std::u32string_view b);
/// Longest common prefix length (maximal consecutive run anchored at the first character).
std::size_t mclcs_1(std::u32string_view a, std::u32string_view b);
/// Longest common contiguous substring length.
std::size_t mclcs_n(std::u32string_view a, std::u32string_view b);

/// Mean of the three LCS lengths, each normalized as len^2 / (|a| |b|).
/// Throws std::invalid_argument if either word is empty.
double string_word_sim(std::u32string_view a, std::u32string_view b);

/// UTF-8 overloads.
std::size_t lcs_len(std::string_view a, std::string_view b);
std::size_t mclcs_1(std::string_view a, std::string_view b);
std::size_t mclcs_n(std::string_view a, std::string_view b);
double string_word_sim(std::string_view a, std::string_view b);

class StringWordSimilarity final : public WordSimilarityProvider {
 public:
  double similarity(std::string_view a, std::string_view b) const override {
    return string_word_sim(a, b);
  }
};

}  // namespace docsim
