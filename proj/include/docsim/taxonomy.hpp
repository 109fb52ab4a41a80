#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "docsim/word_similarity.hpp"

namespace docsim {

/// IS-A concept graph with cumulative occurrence counts and a lemma index.
///
/// File format (UTF-8, one concept per line, `#` comments):
///
///     concept_id <TAB> parent_id[,parent_id...] | - <TAB> lemma[,lemma...] <TAB> raw_count
///
/// `-` marks a root. The cumulative count of a concept is its raw count plus the
/// raw counts of all its distinct descendants; the total is the sum of all raw
/// counts. Every concept must end up with a positive cumulative count.
class Taxonomy {
 public:
  using ConceptIndex = std::size_t;

  static Taxonomy parse(std::istream& in, const std::string& source_name = "<taxonomy>");
  static Taxonomy load(const std::string& path);

  std::size_t concept_count() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept;
  double total_count() const noexcept { return total_; }

  bool contains(std::string_view concept_id) const;
  /// Throws std::out_of_range for unknown ids.
  ConceptIndex index_of(std::string_view concept_id) const;
  const std::string& id(ConceptIndex c) const { return ids_.at(c); }
  const std::vector<ConceptIndex>& parents(ConceptIndex c) const { return parents_.at(c); }
  double cumulative_count(ConceptIndex c) const { return cumulative_.at(c); }

  /// Concepts the word names; empty for out-of-vocabulary words.
  const std::vector<ConceptIndex>& senses(std::string_view word) const;

  /// -ln(count(c) / total).
  double information_content(ConceptIndex c) const { return ic_.at(c); }
  double information_content(std::string_view concept_id) const;

  /// Common ancestor (reflexive) with maximal information content; ties go to
  /// the lexicographically smallest concept id.
  ConceptIndex lowest_common_subsumer(ConceptIndex a, ConceptIndex b) const;
  std::string lowest_common_subsumer(std::string_view a, std::string_view b) const;

  /// 2 IC(lcs) / (IC(a) + IC(b)); 0 when the denominator is 0.
  double lin(ConceptIndex a, ConceptIndex b) const;

 private:
  Taxonomy() = default;
  void finalize(const std::string& source, const std::vector<std::size_t>& lines,
                const std::vector<double>& raw);

  std::vector<std::string> ids_;
  std::unordered_map<std::string, ConceptIndex> index_;
  std::vector<std::vector<ConceptIndex>> parents_;
  // Sorted reflexive ancestor closure of every concept.
  std::vector<std::vector<ConceptIndex>> ancestors_;
  std::vector<double> cumulative_;
  std::vector<double> ic_;
  std::unordered_map<std::string, std::vector<ConceptIndex>> lemmas_;
  double total_ = 0.0;
};

inline Taxonomy load_taxonomy(const std::string& path) { return Taxonomy::load(path); }

/// Lin similarity of two words: the maximum over all sense pairs. Identical
/// in-vocabulary words score 1; out-of-vocabulary words score 0.
double lin_similarity(const Taxonomy& taxonomy, std::string_view w1, std::string_view w2);

class LinWordSimilarity final : public WordSimilarityProvider {
 public:
  explicit LinWordSimilarity(const Taxonomy& taxonomy) : taxonomy_(taxonomy) {}
  double similarity(std::string_view a, std::string_view b) const override {
    return lin_similarity(taxonomy_, a, b);
  }

 private:
  const Taxonomy& taxonomy_;
};

}  // namespace docsim
