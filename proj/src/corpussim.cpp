#include "docsim/corpussim.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "docsim/error.hpp"

namespace docsim {

std::size_t Vocabulary::add(const std::string& word) {
  const auto [it, inserted] = index_.try_emplace(word, words_.size());
  if (inserted) words_.push_back(word);
  return it->second;
}

std::ptrdiff_t Vocabulary::find(std::string_view word) const {
  const auto it = index_.find(std::string(word));
  return it == index_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

std::uint64_t CooccurrenceModel::key(std::size_t a, std::size_t b) noexcept {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

std::uint64_t CooccurrenceModel::unigram_count(std::string_view w) const {
  const auto i = vocab_.find(w);
  return i < 0 ? 0 : unigrams_[static_cast<std::size_t>(i)];
}

std::uint64_t CooccurrenceModel::pair_count(std::string_view a, std::string_view b) const {
  const auto i = vocab_.find(a);
  const auto j = vocab_.find(b);
  if (i < 0 || j < 0 || i == j) return 0;
  const auto it = pairs_.find(key(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  return it == pairs_.end() ? 0 : it->second;
}

CooccurrenceModel build_cooccurrence(const std::vector<TokenSequence>& corpus, std::size_t window_size) {
  if (corpus.empty()) throw std::invalid_argument("build_cooccurrence: empty corpus");
  if (window_size == 0) throw std::invalid_argument("build_cooccurrence: window size must be positive");

  CooccurrenceModel m;
  m.window_ = window_size;
  std::vector<std::size_t> ids;
  std::vector<std::size_t> window;
  for (const auto& doc : corpus) {
    if (doc.empty()) continue;
    ids.clear();
    for (const auto& tok : doc) ids.push_back(m.vocab_.add(tok));
    m.unigrams_.resize(m.vocab_.size(), 0);

    const std::size_t span = std::min(window_size, ids.size());
    const std::size_t count = ids.size() - span + 1;
    for (std::size_t start = 0; start < count; ++start) {
      window.assign(ids.begin() + static_cast<std::ptrdiff_t>(start),
                    ids.begin() + static_cast<std::ptrdiff_t>(start + span));
      std::sort(window.begin(), window.end());
      window.erase(std::unique(window.begin(), window.end()), window.end());
      for (std::size_t a = 0; a < window.size(); ++a) {
        ++m.unigrams_[window[a]];
        for (std::size_t b = a + 1; b < window.size(); ++b) ++m.pairs_[CooccurrenceModel::key(window[a], window[b])];
      }
      ++m.windows_;
    }
  }
  if (m.windows_ == 0) throw std::invalid_argument("build_cooccurrence: corpus has no tokens");
  return m;
}

double npmi_similarity(const CooccurrenceModel& model, std::string_view w1, std::string_view w2) {
  const double total = static_cast<double>(model.window_total());
  const auto c1 = model.unigram_count(w1);
  const auto c2 = model.unigram_count(w2);
  if (c1 == 0 || c2 == 0) return 0.0;
  const auto joint = w1 == w2 ? c1 : model.pair_count(w1, w2);
  if (joint == 0) return 0.0;
  const double p12 = static_cast<double>(joint) / total;
  if (p12 >= 1.0) return 1.0;
  const double p1 = static_cast<double>(c1) / total;
  const double p2 = static_cast<double>(c2) / total;
  const double pmi = std::log(p12 / (p1 * p2));
  return std::clamp(pmi / -std::log(p12), 0.0, 1.0);
}

TermDocMatrix build_term_doc(const std::vector<TokenSequence>& corpus) {
  if (corpus.empty()) throw std::invalid_argument("build_term_doc: empty corpus");
  TermDocMatrix out;
  out.document_count = corpus.size();

  // (word, doc) -> term frequency, plus document frequency per word.
  std::vector<std::vector<std::pair<std::size_t, double>>> tf_by_doc(corpus.size());
  std::vector<std::size_t> df;
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    std::unordered_map<std::size_t, double> tf;
    for (const auto& tok : corpus[d]) tf[out.vocab.add(tok)] += 1.0;
    df.resize(out.vocab.size(), 0);
    for (const auto& [w, f] : tf) {
      ++df[w];
      tf_by_doc[d].emplace_back(w, f);
    }
  }

  const double n = static_cast<double>(corpus.size());
  std::vector<Eigen::Triplet<double>> triplets;
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    for (const auto& [w, f] : tf_by_doc[d]) {
      const double weight = f * std::log(n / static_cast<double>(df[w]));
      if (weight > 0.0) {
        triplets.emplace_back(static_cast<int>(w), static_cast<int>(d), weight);
      }
    }
  }
  out.weights.resize(static_cast<Eigen::Index>(out.vocab.size()), static_cast<Eigen::Index>(corpus.size()));
  out.weights.setFromTriplets(triplets.begin(), triplets.end());
  out.weights.makeCompressed();
  return out;
}

LsaModel fit_lsa(const TermDocMatrix& matrix, std::size_t k, const SvdOptions& opts) {
  const auto svd = truncated_svd(matrix.weights, static_cast<Eigen::Index>(k), opts);
  LsaModel model;
  model.vocab = matrix.vocab;
  model.singular_values = svd.singular_values;
  model.word_vectors = svd.U * svd.singular_values.asDiagonal();
  return model;
}

double lsa_similarity(const LsaModel& model, std::string_view w1, std::string_view w2) {
  const auto i = model.vocab.find(w1);
  const auto j = model.vocab.find(w2);
  if (i < 0 || j < 0) return 0.0;
  const auto a = model.word_vectors.row(i);
  const auto b = model.word_vectors.row(j);
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  if (i == j) return 1.0;
  return std::clamp(a.dot(b) / (na * nb), 0.0, 1.0);
}

std::vector<TokenSequence> load_corpus(const std::string& path, const StopwordSet& stopwords) {
  std::ifstream in(path);
  if (!in) throw AssetError("cannot open corpus file: " + path);
  std::vector<TokenSequence> corpus;
  std::string line;
  while (std::getline(in, line)) corpus.push_back(preprocess(line, stopwords));
  return corpus;
}

}  // namespace docsim
