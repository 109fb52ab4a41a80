// docsim: sentence similarity from the command line.
//
//   docsim compare  --method lin+string --taxonomy wn.tsv "first sentence" "second sentence"
//   docsim bench    --config bench.cfg [--out report] [--seed N]
//   docsim validate --taxonomy wn.tsv --mrpc train.tsv ...
//
// Exit codes: 0 ok, 2 usage/config, 3 missing asset, 4 data error.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "docsim/benchmark.hpp"
#include "docsim/config.hpp"
#include "docsim/corpussim.hpp"
#include "docsim/datasets.hpp"
#include "docsim/error.hpp"
#include "docsim/sentsim.hpp"
#include "docsim/stringsim.hpp"
#include "docsim/taxonomy.hpp"
#include "docsim/textprep.hpp"
#include "docsim/vectorspace.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kMissingAsset = 3;
constexpr int kDataError = 4;

struct CompareArgs {
  std::string method = "string";
  std::string taxonomy;
  std::string embeddings;
  std::string corpus;
  std::string stopwords;
  double w_string = 0.5;
  std::size_t window = 5;
  std::size_t rank = docsim::kDefaultLsaRank;
  std::string first;
  std::string second;
};

struct BenchArgs {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
};

struct ValidateArgs {
  std::string config;
  std::vector<std::string> taxonomy;
  std::vector<std::string> embeddings;
  std::vector<std::string> stopwords;
  std::vector<std::string> corpus;
  std::vector<std::string> mrpc;
  std::vector<std::string> afs;
  std::vector<std::string> sick;
};

void require_file(const std::string& path, const std::string& what) {
  if (path.empty()) throw docsim::AssetError("method requires --" + what);
  if (!std::filesystem::is_regular_file(path)) throw docsim::AssetError("missing " + what + ": " + path);
}

docsim::StopwordSet stopwords_from(const std::string& path) {
  return docsim::load_stopwords(path.empty() ? docsim::default_stopwords_path() : path);
}

int run_compare(const CompareArgs& a) {
  using namespace docsim;
  const MethodKind kind = parse_method_kind(a.method);
  const CombineWeights weights(kind == MethodKind::kString ? 1.0 : a.w_string);
  if (!a.stopwords.empty()) require_file(a.stopwords, "stopwords");
  const StopwordSet stopwords = stopwords_from(a.stopwords);
  const TokenSequence s1 = preprocess(a.first, stopwords);
  const TokenSequence s2 = preprocess(a.second, stopwords);

  double score = 0.0;
  switch (kind) {
    case MethodKind::kString:
      score = combined_similarity(s1, s2, ZeroSimilarity{}, weights);
      break;
    case MethodKind::kLinString: {
      require_file(a.taxonomy, "taxonomy");
      const Taxonomy taxonomy = Taxonomy::load(a.taxonomy);
      score = combined_similarity(s1, s2, LinWordSimilarity(taxonomy), weights);
      break;
    }
    case MethodKind::kPmiString: {
      require_file(a.corpus, "corpus");
      const auto model = build_cooccurrence(load_corpus(a.corpus, stopwords), a.window);
      score = combined_similarity(s1, s2, NpmiWordSimilarity(model), weights);
      break;
    }
    case MethodKind::kLsaString: {
      require_file(a.corpus, "corpus");
      const auto matrix = build_term_doc(load_corpus(a.corpus, stopwords));
      const auto k = std::min<Eigen::Index>(static_cast<Eigen::Index>(a.rank),
                                            std::min(matrix.weights.rows(), matrix.weights.cols()));
      if (k < 1) {
        score = combined_similarity(s1, s2, ZeroSimilarity{}, weights);
      } else {
        const auto model = fit_lsa(matrix, static_cast<std::size_t>(k));
        score = combined_similarity(s1, s2, LsaWordSimilarity(model), weights);
      }
      break;
    }
    case MethodKind::kTfIdf: {
      std::vector<TokenSequence> corpus;
      if (!a.corpus.empty()) {
        require_file(a.corpus, "corpus");
        corpus = load_corpus(a.corpus, stopwords);
      } else {
        corpus = {s1, s2};
      }
      const auto model = fit_tfidf(corpus);
      score = cosine(vectorize(model, s1), vectorize(model, s2));
      break;
    }
    case MethodKind::kEmbedding: {
      // The two positional arguments are ids in the embedding table.
      require_file(a.embeddings, "embeddings");
      const auto table = EmbeddingTable::load(a.embeddings);
      for (const auto* id : {&a.first, &a.second}) {
        if (!table.contains(*id)) throw ParseError(a.embeddings, 0, "no embedding for id '" + *id + "'");
      }
      score = cosine(table.at(a.first), table.at(a.second));
      break;
    }
  }
  std::printf("%.6f\n", score);
  return kOk;
}

std::string strip_report_extension(std::string out) {
  for (const char* ext : {".csv", ".md"}) {
    const std::string e = ext;
    if (out.size() > e.size() && out.compare(out.size() - e.size(), e.size(), e) == 0) {
      return out.substr(0, out.size() - e.size());
    }
  }
  return out;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw docsim::AssetError("cannot write report: " + path);
  out << contents;
}

int run_bench(const BenchArgs& a) {
  docsim::RunConfig config = docsim::load_config(a.config);
  if (a.seed) config.seed = *a.seed;
  if (!a.out.empty()) config.out = a.out;

  const auto start = std::chrono::steady_clock::now();
  const auto table = docsim::run_benchmark(config, &std::cerr);
  std::cerr << "[bench] total "
            << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";

  if (config.out.empty()) {
    std::cout << table.to_csv();
    return kOk;
  }
  const std::string prefix = strip_report_extension(config.out);
  write_file(prefix + ".md", table.to_markdown());
  write_file(prefix + ".csv", table.to_csv());
  std::cout << prefix << ".md\n" << prefix << ".csv\n";
  return kOk;
}

std::string count(std::size_t n, const char* what) { return std::to_string(n) + " " + what; }

int run_validate(const ValidateArgs& a) {
  using namespace docsim;
  int status = kOk;
  const auto check = [&](const std::string& kind, const std::string& path, auto&& load) {
    try {
      if (!std::filesystem::is_regular_file(path)) throw AssetError("file not found");
      const std::string summary = load(path);
      std::cout << "OK\t" << kind << '\t' << path << '\t' << summary << '\n';
    } catch (const AssetError& e) {
      std::cout << "ERROR\t" << kind << '\t' << path << '\t' << e.what() << '\n';
      status = std::max(status, kMissingAsset);
    } catch (const ParseError& e) {
      std::cout << "ERROR\t" << kind << '\t' << path << '\t' << e.what() << '\n';
      status = std::max(status, kDataError);
    } catch (const std::exception& e) {
      std::cout << "ERROR\t" << kind << '\t' << path << '\t' << e.what() << '\n';
      status = std::max(status, kDataError);
    }
  };

  ValidateArgs all = a;
  AfsOptions afs_options;
  if (!a.config.empty()) {
    const RunConfig cfg = load_config(a.config);
    if (!cfg.stopwords.empty()) all.stopwords.push_back(cfg.stopwords);
    all.mrpc.insert(all.mrpc.end(), cfg.mrpc.begin(), cfg.mrpc.end());
    all.mrpc.insert(all.mrpc.end(), cfg.mrpc_test.begin(), cfg.mrpc_test.end());
    all.afs.insert(all.afs.end(), cfg.afs.begin(), cfg.afs.end());
    if (!cfg.sick.empty()) all.sick.push_back(cfg.sick);
    afs_options = cfg.afs_options;
    for (const auto& m : cfg.methods) {
      if (!m.taxonomy.empty()) all.taxonomy.push_back(m.taxonomy);
      if (!m.embeddings.empty()) all.embeddings.push_back(m.embeddings);
      if (!m.corpus.empty()) all.corpus.push_back(m.corpus);
    }
  }

  for (const auto& p : all.stopwords) {
    check("stopwords", p, [](const std::string& path) { return count(load_stopwords(path).size(), "words"); });
  }
  for (const auto& p : all.taxonomy) {
    check("taxonomy", p, [](const std::string& path) {
      const auto t = Taxonomy::load(path);
      return count(t.concept_count(), "concepts") + ", " + count(t.edge_count(), "edges");
    });
  }
  for (const auto& p : all.embeddings) {
    check("embeddings", p, [](const std::string& path) {
      const auto t = EmbeddingTable::load(path);
      return count(t.size(), "vectors") + ", dimension " + std::to_string(t.dimension());
    });
  }
  for (const auto& p : all.corpus) {
    check("corpus", p, [](const std::string& path) { return count(load_corpus(path, StopwordSet{}).size(), "documents"); });
  }
  for (const auto& p : all.mrpc) {
    check("mrpc", p, [](const std::string& path) { return count(load_mrpc(path).size(), "records"); });
  }
  for (const auto& p : all.afs) {
    check("afs", p, [&](const std::string& path) { return count(load_afs(path, afs_options).size(), "records"); });
  }
  for (const auto& p : all.sick) {
    check("sick", p, [](const std::string& path) { return count(load_sick(path).relatedness.size(), "records"); });
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sentence similarity measures and benchmark runner"};
  app.require_subcommand(1);

  CompareArgs compare;
  auto* cmp = app.add_subcommand("compare", "Score one sentence pair");
  cmp->add_option("--method", compare.method, "string | lin+string | pmi+string | lsa+string | tfidf | embedding")
      ->capture_default_str();
  cmp->add_option("--taxonomy", compare.taxonomy, "Taxonomy TSV (lin+string)");
  cmp->add_option("--embeddings", compare.embeddings, "Embedding TSV (embedding; positionals are ids)");
  cmp->add_option("--corpus", compare.corpus, "Corpus, one document per line (pmi/lsa/tfidf)");
  cmp->add_option("--stopwords", compare.stopwords, "Stop-word list (default: shipped English list)");
  cmp->add_option("--weights", compare.w_string, "Weight of string similarity in the joint matrix")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmp->add_option("--window", compare.window, "PMI window size")->check(CLI::PositiveNumber)->capture_default_str();
  cmp->add_option("--rank", compare.rank, "LSA rank")->check(CLI::PositiveNumber)->capture_default_str();
  cmp->add_option("first", compare.first, "First sentence")->required();
  cmp->add_option("second", compare.second, "Second sentence")->required();

  BenchArgs bench;
  std::uint64_t seed = 0;
  auto* bch = app.add_subcommand("bench", "Run the benchmark described by a config file");
  bch->add_option("--config", bench.config, "Benchmark config")->required();
  bch->add_option("--out", bench.out, "Report path prefix (writes .md and .csv)");
  auto* seed_opt = bch->add_option("--seed", seed, "Override the config seed");

  ValidateArgs validate;
  auto* val = app.add_subcommand("validate", "Check asset and dataset files without running");
  val->add_option("--config", validate.config, "Validate every file a config references");
  val->add_option("--taxonomy", validate.taxonomy);
  val->add_option("--embeddings", validate.embeddings);
  val->add_option("--stopwords", validate.stopwords);
  val->add_option("--corpus", validate.corpus);
  val->add_option("--mrpc", validate.mrpc);
  val->add_option("--afs", validate.afs);
  val->add_option("--sick", validate.sick);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (*seed_opt) bench.seed = seed;

  try {
    if (*cmp) return run_compare(compare);
    if (*bch) return run_bench(bench);
    if (*val) return run_validate(validate);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const docsim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kUsage;
  } catch (const docsim::AssetError& e) {
    std::cerr << "missing asset: " << e.what() << '\n';
    return kMissingAsset;
  } catch (const docsim::ParseError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsage;
}
