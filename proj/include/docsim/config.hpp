#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "docsim/datasets.hpp"

namespace docsim {

enum class MethodKind { kString, kLinString, kPmiString, kLsaString, kTfIdf, kEmbedding };

/// Parses "string", "lin+string", "pmi+string", "lsa+string", "tfidf" or "embedding".
/// Throws ConfigError (line 0) for anything else.
MethodKind parse_method_kind(std::string_view name);
std::string_view method_kind_name(MethodKind kind);

struct MethodConfig {
  std::string name;
  MethodKind kind = MethodKind::kString;
  std::string taxonomy;
  std::string embeddings;
  std::string corpus;  ///< empty: fit on each task's training sentences
  double w_string = 0.5;
  std::size_t window = 5;
  std::size_t rank = 100;
  std::size_t line = 0;
};

/// Benchmark run description.
///
/// Line-oriented `key = value` pairs; `[method:NAME]` opens a method section
/// whose keys apply to that method. `#` starts a comment line. Relative paths
/// resolve against the directory of the config file. Global keys:
///
///     seed, stopwords, mrpc, mrpc_test, sick, afs, afs_fields,
///     afs_score_column, afs_s1_column, afs_s2_column, out, threads
///
/// `mrpc` and `afs` accept comma-separated file lists that are pooled. When
/// `mrpc_test` is given, `mrpc` is the training set and `mrpc_test` the test
/// set instead of pooling and re-splitting. Method keys: kind, taxonomy,
/// embeddings, corpus, weights (string weight), window, rank.
struct RunConfig {
  std::uint64_t seed = 0;
  std::string stopwords;
  std::vector<std::string> mrpc;
  std::vector<std::string> mrpc_test;
  std::string sick;
  std::vector<std::string> afs;
  AfsOptions afs_options;
  std::string out;
  std::size_t threads = 0;
  std::vector<MethodConfig> methods;
};

RunConfig parse_config(std::istream& in, const std::string& base_dir = "");
/// Throws AssetError if the file cannot be opened, ConfigError on syntax errors.
RunConfig load_config(const std::string& path);

/// Throws AssetError naming the first referenced file that does not exist.
void check_assets(const RunConfig& config);

}  // namespace docsim
