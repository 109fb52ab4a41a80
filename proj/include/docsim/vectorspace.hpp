#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <istream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "docsim/corpussim.hpp"
#include "docsim/textprep.hpp"

namespace docsim {

using SparseVector = Eigen::SparseVector<double>;

struct TfIdfModel {
  Vocabulary vocab;
  std::vector<double> idf;
  std::size_t document_count = 0;

  std::size_t dimension() const noexcept { return vocab.size(); }
};

/// idf(w) = ln(N / df(w)) over the corpus documents. Throws std::invalid_argument if empty.
TfIdfModel fit_tfidf(const std::vector<TokenSequence>& corpus);

/// entry(w) = tf(w) * idf(w); unknown tokens are dropped.
SparseVector vectorize(const TfIdfModel& model, const TokenSequence& sentence);

/// Cosine similarity clamped to [0, 1]; 0 when either vector is zero.
template <typename Scalar>
double cosine(const Eigen::SparseVector<Scalar>& a, const Eigen::SparseVector<Scalar>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("cosine: dimension mismatch");
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(static_cast<double>(a.dot(b)) / (na * nb), 0.0, 1.0);
}

template <typename DerivedA, typename DerivedB>
double cosine(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("cosine: dimension mismatch");
  const double na = static_cast<double>(a.norm());
  const double nb = static_cast<double>(b.norm());
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(static_cast<double>(a.dot(b)) / (na * nb), 0.0, 1.0);
}

/// Precomputed sentence embeddings keyed by record id.
///
/// File format: `id <TAB> f1 f2 ... fd`, space-separated decimals, one vector per line.
class EmbeddingTable {
 public:
  static EmbeddingTable parse(std::istream& in, const std::string& source_name = "<embeddings>");
  static EmbeddingTable load(const std::string& path);

  std::size_t size() const noexcept { return vectors_.size(); }
  std::size_t dimension() const noexcept { return dimension_; }
  bool contains(const std::string& id) const { return index_.count(id) != 0; }
  /// Throws std::out_of_range for unknown ids.
  const Eigen::VectorXd& at(const std::string& id) const;

 private:
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Eigen::VectorXd> vectors_;
  std::size_t dimension_ = 0;
};

inline EmbeddingTable load_embeddings(const std::string& path) { return EmbeddingTable::load(path); }

}  // namespace docsim
