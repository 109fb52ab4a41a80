#include "docsim/sentsim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "docsim/stringsim.hpp"

namespace docsim {

CombineWeights::CombineWeights(double w_string) : w_string_(w_string) {
  if (!(w_string >= 0.0 && w_string <= 1.0)) {
    throw std::invalid_argument("string weight must lie in [0, 1]");
  }
}

MatchResult exact_match_filter(const TokenSequence& s1, const TokenSequence& s2) {
  MatchResult r;
  r.m = s1.size();
  r.n = s2.size();
  std::unordered_map<std::string, std::size_t> available;
  for (const auto& t : s2) ++available[t];

  std::unordered_map<std::string, std::size_t> matched;
  for (const auto& t : s1) {
    auto it = available.find(t);
    if (it != available.end() && it->second > 0) {
      --it->second;
      ++matched[t];
      ++r.delta;
    } else {
      r.rest1.push_back(t);
    }
  }
  // Drop the earliest occurrences in s2 that were consumed.
  for (const auto& t : s2) {
    auto it = matched.find(t);
    if (it != matched.end() && it->second > 0) {
      --it->second;
    } else {
      r.rest2.push_back(t);
    }
  }
  return r;
}

JointMatrix build_joint_matrix(const TokenSequence& rest1, const TokenSequence& rest2,
                               const WordSimilarityProvider& provider, const CombineWeights& weights) {
  JointMatrix j;
  j.row_words = rest1;
  j.col_words = rest2;
  const auto rows = static_cast<Eigen::Index>(rest1.size());
  const auto cols = static_cast<Eigen::Index>(rest2.size());
  j.values.resize(rows, cols);
  const double ws = weights.string_weight();
  const double wk = weights.knowledge_weight();
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& a = rest1[static_cast<std::size_t>(r)];
      const auto& b = rest2[static_cast<std::size_t>(c)];
      const double s = ws > 0.0 ? string_word_sim(a, b) : 0.0;
      const double k = wk > 0.0 ? provider(a, b) : 0.0;
      j.values(r, c) = std::clamp(ws * s + wk * k, 0.0, 1.0);
    }
  }
  return j;
}

SimilarityTrace trace_similarity(const TokenSequence& s1, const TokenSequence& s2,
                                 const WordSimilarityProvider& provider, const CombineWeights& weights) {
  SimilarityTrace t;
  t.match = exact_match_filter(s1, s2);
  const double m = static_cast<double>(t.match.m);
  const double n = static_cast<double>(t.match.n);
  if (t.match.m == 0 || t.match.n == 0) {
    t.score = (t.match.m == 0 && t.match.n == 0) ? 1.0 : 0.0;
    return t;
  }
  t.joint = build_joint_matrix(t.match.rest1, t.match.rest2, provider, weights);
  t.rho = greedy_extract(t.joint.values);
  const double rho_sum = std::accumulate(t.rho.begin(), t.rho.end(), 0.0);
  const double s = (static_cast<double>(t.match.delta) + rho_sum) * (m + n) / (2.0 * m * n);
  t.score = std::clamp(s, 0.0, 1.0);
  return t;
}

double combined_similarity(const TokenSequence& s1, const TokenSequence& s2,
                           const WordSimilarityProvider& provider, const CombineWeights& weights) {
  return trace_similarity(s1, s2, provider, weights).score;
}

}  // namespace docsim
