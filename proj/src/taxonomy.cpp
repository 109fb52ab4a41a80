#include "docsim/taxonomy.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "docsim/error.hpp"
#include "docsim/textprep.hpp"

namespace docsim {
namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<double> parse_count(const std::string& field) {
  double value = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value) || value < 0.0) return std::nullopt;
  return value;
}

const std::vector<Taxonomy::ConceptIndex> kNoSenses;

}  // namespace

Taxonomy Taxonomy::parse(std::istream& in, const std::string& source) {
  Taxonomy t;
  std::vector<std::size_t> lines;
  std::vector<double> raw;
  std::vector<std::vector<std::string>> parent_ids;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line.front() == '#') continue;

    const auto fields = split(line, '\t');
    if (fields.size() != 4) {
      throw ParseError(source, lineno,
                       "expected 4 tab-separated fields, found " + std::to_string(fields.size()));
    }
    const std::string id = trim(fields[0]);
    if (id.empty()) throw ParseError(source, lineno, "empty concept id");
    if (t.index_.count(id)) throw ParseError(source, lineno, "duplicate concept id '" + id + "'");

    std::vector<std::string> parents;
    const std::string parent_field = trim(fields[1]);
    if (parent_field.empty()) throw ParseError(source, lineno, "empty parent field (use '-' for roots)");
    if (parent_field != "-") {
      for (auto& p : split(parent_field, ',')) {
        auto pid = trim(p);
        if (pid.empty()) throw ParseError(source, lineno, "empty parent id");
        parents.push_back(std::move(pid));
      }
    }

    const auto count = parse_count(trim(fields[3]));
    if (!count) throw ParseError(source, lineno, "raw count must be a non-negative number");

    const ConceptIndex c = t.ids_.size();
    t.index_.emplace(id, c);
    t.ids_.push_back(id);
    parent_ids.push_back(std::move(parents));
    raw.push_back(*count);
    lines.push_back(lineno);

    const std::string lemma_field = trim(fields[2]);
    if (!lemma_field.empty() && lemma_field != "-") {
      for (const auto& lemma : split(lemma_field, ',')) {
        auto tokens = normalize(lemma);
        const std::string key = tokens.size() == 1 ? tokens.front() : trim(lemma);
        if (!key.empty()) t.lemmas_[key].push_back(c);
      }
    }
  }

  t.parents_.resize(t.ids_.size());
  for (ConceptIndex c = 0; c < t.ids_.size(); ++c) {
    for (const auto& pid : parent_ids[c]) {
      const auto it = t.index_.find(pid);
      if (it == t.index_.end()) {
        throw ParseError(source, lines[c], "unknown parent id '" + pid + "'");
      }
      if (it->second == c) throw ParseError(source, lines[c], "cycle: concept is its own parent");
      t.parents_[c].push_back(it->second);
    }
    std::sort(t.parents_[c].begin(), t.parents_[c].end());
    t.parents_[c].erase(std::unique(t.parents_[c].begin(), t.parents_[c].end()), t.parents_[c].end());
  }

  t.finalize(source, lines, raw);
  return t;
}

void Taxonomy::finalize(const std::string& source, const std::vector<std::size_t>& lines,
                        const std::vector<double>& raw) {
  const std::size_t n = ids_.size();
  if (n == 0) throw ParseError(source, 0, "taxonomy has no concepts");

  // Iterative DFS over child->parent edges; emits concepts parents-first.
  enum class Mark : unsigned char { kNew, kActive, kDone };
  std::vector<Mark> mark(n, Mark::kNew);
  std::vector<ConceptIndex> order;
  order.reserve(n);
  for (ConceptIndex start = 0; start < n; ++start) {
    if (mark[start] != Mark::kNew) continue;
    std::vector<std::pair<ConceptIndex, std::size_t>> stack{{start, 0}};
    mark[start] = Mark::kActive;
    while (!stack.empty()) {
      auto& [c, next] = stack.back();
      if (next < parents_[c].size()) {
        const ConceptIndex p = parents_[c][next++];
        if (mark[p] == Mark::kActive) {
          throw ParseError(source, lines[p], "cycle through concept '" + ids_[p] + "'");
        }
        if (mark[p] == Mark::kNew) {
          mark[p] = Mark::kActive;
          stack.emplace_back(p, 0);
        }
      } else {
        mark[c] = Mark::kDone;
        order.push_back(c);
        stack.pop_back();
      }
    }
  }

  ancestors_.assign(n, {});
  for (ConceptIndex c : order) {
    auto& anc = ancestors_[c];
    anc.push_back(c);
    for (ConceptIndex p : parents_[c]) anc.insert(anc.end(), ancestors_[p].begin(), ancestors_[p].end());
    std::sort(anc.begin(), anc.end());
    anc.erase(std::unique(anc.begin(), anc.end()), anc.end());
  }

  total_ = 0.0;
  for (double r : raw) total_ += r;
  if (!(total_ > 0.0)) throw ParseError(source, 0, "total count must be positive");

  cumulative_.assign(n, 0.0);
  for (ConceptIndex d = 0; d < n; ++d) {
    for (ConceptIndex a : ancestors_[d]) cumulative_[a] += raw[d];
  }
  ic_.resize(n);
  for (ConceptIndex c = 0; c < n; ++c) {
    if (!(cumulative_[c] > 0.0)) {
      throw ParseError(source, lines[c], "concept '" + ids_[c] + "' has zero cumulative count");
    }
    // Roots whose subtree holds every count get exactly 0.
    ic_[c] = cumulative_[c] >= total_ ? 0.0 : -std::log(cumulative_[c] / total_);
  }

  for (auto& [lemma, senses] : lemmas_) {
    std::sort(senses.begin(), senses.end());
    senses.erase(std::unique(senses.begin(), senses.end()), senses.end());
  }
}

Taxonomy Taxonomy::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AssetError("cannot open taxonomy file: " + path);
  return parse(in, path);
}

std::size_t Taxonomy::edge_count() const noexcept {
  std::size_t edges = 0;
  for (const auto& p : parents_) edges += p.size();
  return edges;
}

bool Taxonomy::contains(std::string_view concept_id) const {
  return index_.find(std::string(concept_id)) != index_.end();
}

Taxonomy::ConceptIndex Taxonomy::index_of(std::string_view concept_id) const {
  const auto it = index_.find(std::string(concept_id));
  if (it == index_.end()) throw std::out_of_range("unknown concept id '" + std::string(concept_id) + "'");
  return it->second;
}

const std::vector<Taxonomy::ConceptIndex>& Taxonomy::senses(std::string_view word) const {
  const auto it = lemmas_.find(std::string(word));
  return it == lemmas_.end() ? kNoSenses : it->second;
}

double Taxonomy::information_content(std::string_view concept_id) const {
  return ic_[index_of(concept_id)];
}

Taxonomy::ConceptIndex Taxonomy::lowest_common_subsumer(ConceptIndex a, ConceptIndex b) const {
  const auto& aa = ancestors_.at(a);
  const auto& ab = ancestors_.at(b);
  std::optional<ConceptIndex> best;
  auto i = aa.begin();
  auto j = ab.begin();
  while (i != aa.end() && j != ab.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      const ConceptIndex c = *i;
      if (!best || ic_[c] > ic_[*best] || (ic_[c] == ic_[*best] && ids_[c] < ids_[*best])) best = c;
      ++i;
      ++j;
    }
  }
  if (!best) throw std::domain_error("concepts '" + ids_[a] + "' and '" + ids_[b] + "' share no ancestor");
  return *best;
}

std::string Taxonomy::lowest_common_subsumer(std::string_view a, std::string_view b) const {
  return ids_[lowest_common_subsumer(index_of(a), index_of(b))];
}

double Taxonomy::lin(ConceptIndex a, ConceptIndex b) const {
  const double denom = ic_.at(a) + ic_.at(b);
  if (!(denom > 0.0)) return 0.0;
  const auto& aa = ancestors_[a];
  const auto& ab = ancestors_[b];
  // Only the maximal IC among common ancestors matters here, so skip the tie-break.
  double best = -1.0;
  auto i = aa.begin();
  auto j = ab.begin();
  while (i != aa.end() && j != ab.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      best = std::max(best, ic_[*i]);
      ++i;
      ++j;
    }
  }
  if (best < 0.0) return 0.0;
  return std::clamp(2.0 * best / denom, 0.0, 1.0);
}

double lin_similarity(const Taxonomy& taxonomy, std::string_view w1, std::string_view w2) {
  const auto& s1 = taxonomy.senses(w1);
  const auto& s2 = taxonomy.senses(w2);
  if (s1.empty() || s2.empty()) return 0.0;
  if (w1 == w2) return 1.0;
  double best = 0.0;
  for (auto c1 : s1) {
    for (auto c2 : s2) best = std::max(best, taxonomy.lin(c1, c2));
  }
  return best;
}

}  // namespace docsim
