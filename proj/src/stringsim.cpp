#include "docsim/stringsim.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "docsim/textprep.hpp"

namespace docsim {

std::size_t lcs_len(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  // Single row of the classic DP table, sized by the shorter word.
  std::vector<std::size_t> row(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = 0;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = a[i - 1] == b[j - 1] ? diag + 1 : std::max(up, row[j - 1]);
      diag = up;
    }
  }
  return row[b.size()];
}

std::size_t mclcs_1(std::u32string_view a, std::u32string_view b) {
  const auto mismatch = std::mismatch(a.begin(), a.begin() + std::min(a.size(), b.size()), b.begin());
  return static_cast<std::size_t>(mismatch.first - a.begin());
}

std::size_t mclcs_n(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1, 0);
  std::size_t best = 0;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = 0;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = a[i - 1] == b[j - 1] ? diag + 1 : 0;
      best = std::max(best, row[j]);
      diag = up;
    }
  }
  return best;
}

double string_word_sim(std::u32string_view a, std::u32string_view b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("string_word_sim: empty word");
  }
  const double denom = static_cast<double>(a.size()) * static_cast<double>(b.size());
  const auto normalized = [denom](std::size_t len) {
    const double l = static_cast<double>(len);
    return l * l / denom;
  };
  return (normalized(lcs_len(a, b)) + normalized(mclcs_1(a, b)) + normalized(mclcs_n(a, b))) / 3.0;
}

std::size_t lcs_len(std::string_view a, std::string_view b) {
  return lcs_len(std::u32string_view(decode_utf8(a)), std::u32string_view(decode_utf8(b)));
}

std::size_t mclcs_1(std::string_view a, std::string_view b) {
  return mclcs_1(std::u32string_view(decode_utf8(a)), std::u32string_view(decode_utf8(b)));
}

std::size_t mclcs_n(std::string_view a, std::string_view b) {
  return mclcs_n(std::u32string_view(decode_utf8(a)), std::u32string_view(decode_utf8(b)));
}

double string_word_sim(std::string_view a, std::string_view b) {
  const std::u32string wa = decode_utf8(a);
  const std::u32string wb = decode_utf8(b);
  return string_word_sim(std::u32string_view(wa), std::u32string_view(wb));
}

}  // namespace docsim
