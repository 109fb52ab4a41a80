#include "docsim/benchmark.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "docsim/corpussim.hpp"
#include "docsim/error.hpp"
#include "docsim/metrics.hpp"
#include "docsim/sentsim.hpp"
#include "docsim/stringsim.hpp"
#include "docsim/taxonomy.hpp"
#include "docsim/vectorspace.hpp"

namespace docsim {
namespace {

std::vector<TokenSequence> sentences_of(const std::vector<PairRecord>& records, const StopwordSet& stopwords) {
  std::vector<TokenSequence> docs;
  docs.reserve(2 * records.size());
  for (const auto& r : records) {
    docs.push_back(preprocess(r.s1, stopwords));
    docs.push_back(preprocess(r.s2, stopwords));
  }
  return docs;
}

// Owns whatever model backs the word provider for one task.
class CombinedScorer final : public PairScorer {
 public:
  CombinedScorer(StopwordSet stopwords, CombineWeights weights, std::shared_ptr<const void> model,
                 std::unique_ptr<WordSimilarityProvider> provider)
      : stopwords_(std::move(stopwords)),
        weights_(weights),
        model_(std::move(model)),
        provider_(std::move(provider)) {}

  double score(const PairRecord& r) const override {
    return combined_similarity(preprocess(r.s1, stopwords_), preprocess(r.s2, stopwords_), *provider_, weights_);
  }

 private:
  StopwordSet stopwords_;
  CombineWeights weights_;
  std::shared_ptr<const void> model_;
  std::unique_ptr<WordSimilarityProvider> provider_;
};

class CombinedMethod final : public Method {
 public:
  CombinedMethod(const MethodConfig& config, StopwordSet stopwords)
      : config_(config), stopwords_(std::move(stopwords)) {
    if (config.kind == MethodKind::kLinString) {
      taxonomy_ = std::make_shared<const Taxonomy>(Taxonomy::load(config.taxonomy));
    }
    if (!config.corpus.empty()) {
      corpus_ = std::make_shared<const std::vector<TokenSequence>>(load_corpus(config.corpus, stopwords_));
    }
  }

  std::unique_ptr<PairScorer> prepare(const std::vector<PairRecord>& train) const override {
    const auto corpus = [&] { return corpus_ ? *corpus_ : sentences_of(train, stopwords_); };
    switch (config_.kind) {
      case MethodKind::kString:
        return std::make_unique<CombinedScorer>(stopwords_, CombineWeights(1.0), nullptr,
                                                std::make_unique<ZeroSimilarity>());
      case MethodKind::kLinString:
        return std::make_unique<CombinedScorer>(stopwords_, CombineWeights(config_.w_string), taxonomy_,
                                                std::make_unique<LinWordSimilarity>(*taxonomy_));
      case MethodKind::kPmiString: {
        auto model = std::make_shared<const CooccurrenceModel>(build_cooccurrence(corpus(), config_.window));
        auto provider = std::make_unique<NpmiWordSimilarity>(*model);
        return std::make_unique<CombinedScorer>(stopwords_, CombineWeights(config_.w_string), std::move(model),
                                                std::move(provider));
      }
      case MethodKind::kLsaString: {
        const auto matrix = build_term_doc(corpus());
        const auto dims = std::min(matrix.weights.rows(), matrix.weights.cols());
        const auto k = std::min<Eigen::Index>(static_cast<Eigen::Index>(config_.rank), dims);
        if (k < 1) {
          return std::make_unique<CombinedScorer>(stopwords_, CombineWeights(config_.w_string), nullptr,
                                                  std::make_unique<ZeroSimilarity>());
        }
        auto model = std::make_shared<const LsaModel>(fit_lsa(matrix, static_cast<std::size_t>(k)));
        auto provider = std::make_unique<LsaWordSimilarity>(*model);
        return std::make_unique<CombinedScorer>(stopwords_, CombineWeights(config_.w_string), std::move(model),
                                                std::move(provider));
      }
      default:
        throw std::logic_error("CombinedMethod: unexpected kind");
    }
  }

 private:
  MethodConfig config_;
  StopwordSet stopwords_;
  std::shared_ptr<const Taxonomy> taxonomy_;
  std::shared_ptr<const std::vector<TokenSequence>> corpus_;
};

class TfIdfScorer final : public PairScorer {
 public:
  TfIdfScorer(StopwordSet stopwords, TfIdfModel model) : stopwords_(std::move(stopwords)), model_(std::move(model)) {}
  double score(const PairRecord& r) const override {
    return cosine(vectorize(model_, preprocess(r.s1, stopwords_)), vectorize(model_, preprocess(r.s2, stopwords_)));
  }

 private:
  StopwordSet stopwords_;
  TfIdfModel model_;
};

class TfIdfMethod final : public Method {
 public:
  TfIdfMethod(const MethodConfig& config, StopwordSet stopwords) : stopwords_(std::move(stopwords)) {
    if (!config.corpus.empty()) corpus_ = load_corpus(config.corpus, stopwords_);
  }
  std::unique_ptr<PairScorer> prepare(const std::vector<PairRecord>& train) const override {
    return std::make_unique<TfIdfScorer>(stopwords_,
                                         fit_tfidf(corpus_.empty() ? sentences_of(train, stopwords_) : corpus_));
  }

 private:
  StopwordSet stopwords_;
  std::vector<TokenSequence> corpus_;
};

class EmbeddingScorer final : public PairScorer {
 public:
  EmbeddingScorer(std::shared_ptr<const EmbeddingTable> table, std::string source)
      : table_(std::move(table)), source_(std::move(source)) {}
  double score(const PairRecord& r) const override { return cosine(lookup(r.id + ":1"), lookup(r.id + ":2")); }

 private:
  const Eigen::VectorXd& lookup(const std::string& id) const {
    if (!table_->contains(id)) throw ParseError(source_, 0, "no embedding for id '" + id + "'");
    return table_->at(id);
  }
  std::shared_ptr<const EmbeddingTable> table_;
  std::string source_;
};

class EmbeddingMethod final : public Method {
 public:
  explicit EmbeddingMethod(const MethodConfig& config)
      : table_(std::make_shared<const EmbeddingTable>(EmbeddingTable::load(config.embeddings))),
        source_(config.embeddings) {}
  std::unique_ptr<PairScorer> prepare(const std::vector<PairRecord>&) const override {
    return std::make_unique<EmbeddingScorer>(table_, source_);
  }

 private:
  std::shared_ptr<const EmbeddingTable> table_;
  std::string source_;
};

std::vector<double> predictions(const std::vector<ScoredPair>& scored) {
  std::vector<double> out;
  out.reserve(scored.size());
  for (const auto& s : scored) out.push_back(s.predicted);
  return out;
}

std::vector<double> gold_scores(const std::vector<ScoredPair>& scored) {
  std::vector<double> out;
  out.reserve(scored.size());
  for (const auto& s : scored) out.push_back(std::get<ScoreLabel>(s.gold).value);
  return out;
}

std::vector<int> gold_binary(const std::vector<ScoredPair>& scored) {
  std::vector<int> out;
  out.reserve(scored.size());
  for (const auto& s : scored) out.push_back(std::get<BinaryLabel>(s.gold).value);
  return out;
}

struct Task {
  std::string name;
  std::vector<PairRecord> train;
  std::vector<PairRecord> test;
};

template <typename F>
std::optional<double> guarded(F&& f, const std::string& what, std::ostream* log) {
  try {
    return f();
  } catch (const UndefinedResultError& e) {
    if (log) *log << "warning: " << what << ": " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    if (log) *log << "warning: " << what << ": " << e.what() << "\n";
  }
  return std::nullopt;
}

std::string seconds_since(std::chrono::steady_clock::time_point start) {
  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", elapsed);
  return buf;
}

}  // namespace

std::unique_ptr<Method> Method::create(const MethodConfig& config, const StopwordSet& stopwords) {
  switch (config.kind) {
    case MethodKind::kString:
    case MethodKind::kLinString:
    case MethodKind::kPmiString:
    case MethodKind::kLsaString:
      return std::make_unique<CombinedMethod>(config, stopwords);
    case MethodKind::kTfIdf:
      return std::make_unique<TfIdfMethod>(config, stopwords);
    case MethodKind::kEmbedding:
      return std::make_unique<EmbeddingMethod>(config);
  }
  throw std::logic_error("unknown method kind");
}

std::vector<ScoredPair> score_records(const PairScorer& scorer, const std::vector<PairRecord>& records,
                                      std::size_t threads) {
  std::vector<ScoredPair> out(records.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(1, records.size() / 64));

  const auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      out[i] = ScoredPair{records[i].id, scorer.score(records[i]), records[i].gold};
    }
  };
  if (threads <= 1) {
    work(0, records.size());
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const std::size_t chunk = (records.size() + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(records.size(), begin + chunk);
    pool.emplace_back([&, t, begin, end] {
      try {
        work(begin, end);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

double calibrate_threshold(const std::vector<ScoredPair>& train) {
  const auto scores = predictions(train);
  const auto labels = gold_binary(train);
  return fit_threshold(scores, labels).threshold;
}

void ReportTable::add_row(std::string method, Row cells) {
  methods_.push_back(std::move(method));
  rows_.push_back(cells);
}

const ReportTable::Row& ReportTable::row(std::string_view method) const {
  for (std::size_t i = 0; i < methods_.size(); ++i) {
    if (methods_[i] == method) return rows_[i];
  }
  throw std::out_of_range("no report row for method '" + std::string(method) + "'");
}

std::string ReportTable::format_cell(const std::optional<double>& value) {
  if (!value) return "N/A";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f%%", *value * 100.0);
  return buf;
}

std::string ReportTable::to_markdown() const {
  std::ostringstream out;
  out << "| Method |";
  for (auto c : kColumns) out << ' ' << c << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < kColumns.size(); ++i) out << "---|";
  out << '\n';
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    out << "| " << methods_[r] << " |";
    for (const auto& cell : rows_[r]) out << ' ' << format_cell(cell) << " |";
    out << '\n';
  }
  return out.str();
}

std::string ReportTable::to_csv() const {
  const auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q.push_back('"');
      q.push_back(c);
    }
    return q + "\"";
  };
  std::ostringstream out;
  out << "Method";
  for (auto c : kColumns) out << ',' << c;
  out << '\n';
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    out << quote(methods_[r]);
    for (const auto& cell : rows_[r]) out << ',' << format_cell(cell);
    out << '\n';
  }
  return out.str();
}

ReportTable run_benchmark(const RunConfig& config, std::ostream* log) {
  check_assets(config);
  const StopwordSet stopwords = load_stopwords(config.stopwords.empty() ? default_stopwords_path() : config.stopwords);
  const SplitSpec split{0.6, 0.2, 0.2, config.seed};

  std::optional<Task> mrpc, sick_r, afs;
  if (!config.mrpc.empty()) {
    std::vector<PairRecord> pooled;
    const auto read_all = [&](const std::vector<std::string>& files) {
      std::vector<PairRecord> records;
      for (const auto& path : files) {
        std::ifstream in(path);
        if (!in) throw AssetError("cannot open dataset file: " + path);
        auto part = read_mrpc(in, path, "mrpc", pooled.size() + records.size());
        records.insert(records.end(), part.begin(), part.end());
      }
      pooled.insert(pooled.end(), records.begin(), records.end());
      return records;
    };
    auto train = read_all(config.mrpc);
    if (config.mrpc_test.empty()) {
      auto parts = split_dataset(train, split);
      mrpc = Task{"MRPC", std::move(parts.train), std::move(parts.test)};
    } else {
      auto test = read_all(config.mrpc_test);
      mrpc = Task{"MRPC", std::move(train), std::move(test)};
    }
  }
  if (!config.sick.empty()) {
    auto views = load_sick(config.sick);
    auto parts = split_dataset(views.relatedness, split);
    sick_r = Task{"SICK-R", std::move(parts.train), std::move(parts.test)};
  }
  if (!config.afs.empty()) {
    std::vector<PairRecord> pooled;
    for (const auto& path : config.afs) {
      std::ifstream in(path);
      if (!in) throw AssetError("cannot open dataset file: " + path);
      auto part = read_afs(in, path, config.afs_options, "afs", pooled.size());
      pooled.insert(pooled.end(), part.begin(), part.end());
    }
    auto parts = split_dataset(pooled, split);
    afs = Task{"AFS", std::move(parts.train), std::move(parts.test)};
  }

  ReportTable table;
  for (const auto& mc : config.methods) {
    const auto method = Method::create(mc, stopwords);
    ReportTable::Row row{};

    const auto correlate = [&](const Task& task, ReportTable::Column pearson_col, ReportTable::Column spearman_col) {
      const auto start = std::chrono::steady_clock::now();
      const auto scorer = method->prepare(task.train);
      const auto scored = score_records(*scorer, task.test, config.threads);
      const auto pred = predictions(scored);
      const auto gold = gold_scores(scored);
      const std::string what = mc.name + " / " + task.name;
      row[pearson_col] = guarded([&] { return pearson(pred, gold); }, what + " Pearson", log);
      row[spearman_col] = guarded([&] { return spearman(pred, gold); }, what + " Spearman", log);
      if (log) {
        *log << "[bench] " << mc.name << " " << task.name << ": " << scored.size() << " test pairs in "
             << seconds_since(start) << " s\n";
      }
    };

    if (sick_r) correlate(*sick_r, ReportTable::kSickRPearson, ReportTable::kSickRSpearman);
    if (afs) correlate(*afs, ReportTable::kAfsPearson, ReportTable::kAfsSpearman);
    // Scalar methods have no three-way entailment output.
    row[ReportTable::kSickEAccuracy] = std::nullopt;

    if (mrpc) {
      const auto start = std::chrono::steady_clock::now();
      const auto scorer = method->prepare(mrpc->train);
      const auto train_scored = score_records(*scorer, mrpc->train, config.threads);
      const auto test_scored = score_records(*scorer, mrpc->test, config.threads);
      row[ReportTable::kMrpcAccuracy] = guarded(
          [&] {
            const double threshold = calibrate_threshold(train_scored);
            std::vector<int> predicted;
            for (const auto& s : test_scored) predicted.push_back(s.predicted >= threshold ? 1 : 0);
            if (log) *log << "[bench] " << mc.name << " MRPC threshold " << threshold << "\n";
            return accuracy(predicted, gold_binary(test_scored));
          },
          mc.name + " / MRPC accuracy", log);
      if (log) {
        *log << "[bench] " << mc.name << " MRPC: " << train_scored.size() << " train + " << test_scored.size()
             << " test pairs in " << seconds_since(start) << " s\n";
      }
    }
    table.add_row(mc.name, row);
  }
  return table;
}

}  // namespace docsim
