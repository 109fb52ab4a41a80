#include "docsim/vectorspace.hpp"

#include <charconv>
#include <fstream>
#include <unordered_set>

#include "docsim/error.hpp"

namespace docsim {

TfIdfModel fit_tfidf(const std::vector<TokenSequence>& corpus) {
  if (corpus.empty()) throw std::invalid_argument("fit_tfidf: empty corpus");
  TfIdfModel model;
  model.document_count = corpus.size();
  std::vector<std::size_t> df;
  for (const auto& doc : corpus) {
    std::unordered_set<std::size_t> seen;
    for (const auto& tok : doc) seen.insert(model.vocab.add(tok));
    df.resize(model.vocab.size(), 0);
    for (auto w : seen) ++df[w];
  }
  const double n = static_cast<double>(corpus.size());
  model.idf.resize(df.size());
  for (std::size_t w = 0; w < df.size(); ++w) model.idf[w] = std::log(n / static_cast<double>(df[w]));
  return model;
}

SparseVector vectorize(const TfIdfModel& model, const TokenSequence& sentence) {
  SparseVector v(static_cast<Eigen::Index>(model.dimension()));
  for (const auto& tok : sentence) {
    const auto w = model.vocab.find(tok);
    if (w < 0) continue;
    const double weight = model.idf[static_cast<std::size_t>(w)];
    if (weight > 0.0) v.coeffRef(w) += weight;
  }
  return v;
}

EmbeddingTable EmbeddingTable::parse(std::istream& in, const std::string& source) {
  EmbeddingTable table;
  std::string line;
  std::size_t lineno = 0;
  std::vector<double> values;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) throw ParseError(source, lineno, "expected 'id<TAB>values'");
    const std::string id = line.substr(0, tab);
    if (table.index_.count(id)) throw ParseError(source, lineno, "duplicate id '" + id + "'");

    values.clear();
    const char* p = line.data() + tab + 1;
    const char* end = line.data() + line.size();
    while (p < end) {
      while (p < end && *p == ' ') ++p;
      if (p == end) break;
      double x = 0.0;
      const auto [next, ec] = std::from_chars(p, end, x);
      if (ec != std::errc() || (next != end && *next != ' ') || !std::isfinite(x)) {
        throw ParseError(source, lineno, "non-numeric vector component");
      }
      values.push_back(x);
      p = next;
    }
    if (values.empty()) throw ParseError(source, lineno, "empty vector");
    if (table.vectors_.empty()) {
      table.dimension_ = values.size();
    } else if (values.size() != table.dimension_) {
      throw ParseError(source, lineno,
                       "dimension " + std::to_string(values.size()) + " differs from " +
                           std::to_string(table.dimension_));
    }
    table.index_.emplace(id, table.vectors_.size());
    table.vectors_.push_back(Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size())));
  }
  return table;
}

EmbeddingTable EmbeddingTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AssetError("cannot open embedding file: " + path);
  return parse(in, path);
}

const Eigen::VectorXd& EmbeddingTable::at(const std::string& id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) throw std::out_of_range("no embedding for id '" + id + "'");
  return vectors_[it->second];
}

}  // namespace docsim
