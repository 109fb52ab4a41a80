#include "docsim/config.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>

#include "docsim/error.hpp"

namespace docsim {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string resolve(const std::string& base, const std::string& path) {
  if (path.empty() || base.empty() || std::filesystem::path(path).is_absolute()) return path;
  return (std::filesystem::path(base) / path).lexically_normal().string();
}

std::vector<std::string> path_list(const std::string& base, const std::string& value) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    const auto pos = value.find(',', start);
    auto item = trim(std::string_view(value).substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (!item.empty()) out.push_back(resolve(base, item));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
T parse_number(const std::string& value, std::size_t line, const std::string& key) {
  T out{};
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) throw ConfigError(line, "invalid number for '" + key + "': " + value);
  return out;
}

}  // namespace

MethodKind parse_method_kind(std::string_view name) {
  if (name == "string") return MethodKind::kString;
  if (name == "lin+string") return MethodKind::kLinString;
  if (name == "pmi+string") return MethodKind::kPmiString;
  if (name == "lsa+string") return MethodKind::kLsaString;
  if (name == "tfidf") return MethodKind::kTfIdf;
  if (name == "embedding") return MethodKind::kEmbedding;
  throw ConfigError(0, "unknown method '" + std::string(name) + "'");
}

std::string_view method_kind_name(MethodKind kind) {
  switch (kind) {
    case MethodKind::kString: return "string";
    case MethodKind::kLinString: return "lin+string";
    case MethodKind::kPmiString: return "pmi+string";
    case MethodKind::kLsaString: return "lsa+string";
    case MethodKind::kTfIdf: return "tfidf";
    case MethodKind::kEmbedding: return "embedding";
  }
  return "?";
}

RunConfig parse_config(std::istream& in, const std::string& base_dir) {
  RunConfig cfg;
  MethodConfig* method = nullptr;
  bool kind_set = false;
  const auto finish_method = [&] {
    if (method && !kind_set) throw ConfigError(method->line, "method '" + method->name + "' has no kind");
  };

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw);
    if (text.empty() || text.front() == '#') continue;

    if (text.front() == '[') {
      if (text.back() != ']') throw ConfigError(line, "unterminated section header");
      const std::string inner = trim(std::string_view(text).substr(1, text.size() - 2));
      constexpr std::string_view kPrefix = "method:";
      if (inner.rfind(kPrefix, 0) != 0) throw ConfigError(line, "unknown section '" + inner + "'");
      finish_method();
      const std::string name = trim(std::string_view(inner).substr(kPrefix.size()));
      if (name.empty()) throw ConfigError(line, "method section needs a name");
      for (const auto& m : cfg.methods) {
        if (m.name == name) throw ConfigError(line, "duplicate method '" + name + "'");
      }
      cfg.methods.push_back(MethodConfig{});
      method = &cfg.methods.back();
      method->name = name;
      method->line = line;
      kind_set = false;
      continue;
    }

    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ConfigError(line, "expected 'key = value'");
    const std::string key = trim(std::string_view(text).substr(0, eq));
    const std::string value = trim(std::string_view(text).substr(eq + 1));
    if (key.empty()) throw ConfigError(line, "empty key");

    if (method) {
      if (key == "kind") {
        try {
          method->kind = parse_method_kind(value);
        } catch (const ConfigError& e) {
          throw ConfigError(line, e.what());
        }
        kind_set = true;
      } else if (key == "taxonomy") {
        method->taxonomy = resolve(base_dir, value);
      } else if (key == "embeddings") {
        method->embeddings = resolve(base_dir, value);
      } else if (key == "corpus") {
        method->corpus = resolve(base_dir, value);
      } else if (key == "weights") {
        method->w_string = parse_number<double>(value, line, key);
        if (!(method->w_string >= 0.0 && method->w_string <= 1.0)) {
          throw ConfigError(line, "weights must lie in [0, 1]");
        }
      } else if (key == "window") {
        method->window = parse_number<std::size_t>(value, line, key);
        if (method->window == 0) throw ConfigError(line, "window must be positive");
      } else if (key == "rank") {
        method->rank = parse_number<std::size_t>(value, line, key);
        if (method->rank == 0) throw ConfigError(line, "rank must be positive");
      } else {
        throw ConfigError(line, "unknown method key '" + key + "'");
      }
      continue;
    }

    if (key == "seed") {
      cfg.seed = parse_number<std::uint64_t>(value, line, key);
    } else if (key == "stopwords") {
      cfg.stopwords = resolve(base_dir, value);
    } else if (key == "mrpc") {
      cfg.mrpc = path_list(base_dir, value);
    } else if (key == "mrpc_test") {
      cfg.mrpc_test = path_list(base_dir, value);
    } else if (key == "sick") {
      cfg.sick = resolve(base_dir, value);
    } else if (key == "afs") {
      cfg.afs = path_list(base_dir, value);
    } else if (key == "afs_fields") {
      cfg.afs_options.fields = parse_number<std::size_t>(value, line, key);
    } else if (key == "afs_score_column") {
      cfg.afs_options.score_column = parse_number<std::size_t>(value, line, key);
    } else if (key == "afs_s1_column") {
      cfg.afs_options.s1_column = parse_number<std::size_t>(value, line, key);
    } else if (key == "afs_s2_column") {
      cfg.afs_options.s2_column = parse_number<std::size_t>(value, line, key);
    } else if (key == "out") {
      cfg.out = resolve(base_dir, value);
    } else if (key == "threads") {
      cfg.threads = parse_number<std::size_t>(value, line, key);
    } else {
      throw ConfigError(line, "unknown key '" + key + "'");
    }
  }
  finish_method();

  const auto& o = cfg.afs_options;
  if (std::max({o.score_column, o.s1_column, o.s2_column}) >= o.fields) {
    throw ConfigError(0, "AFS column index beyond afs_fields");
  }
  if (!cfg.mrpc_test.empty() && cfg.mrpc.empty()) throw ConfigError(0, "mrpc_test requires mrpc");
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AssetError("cannot open config file: " + path);
  const auto base = std::filesystem::path(path).parent_path().string();
  return parse_config(in, base.empty() ? "." : base);
}

void check_assets(const RunConfig& config) {
  const auto require = [](const std::string& path, const std::string& what) {
    if (!path.empty() && !std::filesystem::is_regular_file(path)) {
      throw AssetError("missing " + what + ": " + path);
    }
  };
  require(config.stopwords, "stop-word file");
  for (const auto& p : config.mrpc) require(p, "MRPC file");
  for (const auto& p : config.mrpc_test) require(p, "MRPC test file");
  require(config.sick, "SICK file");
  for (const auto& p : config.afs) require(p, "AFS file");
  for (const auto& m : config.methods) {
    if (m.kind == MethodKind::kLinString && m.taxonomy.empty()) {
      throw AssetError("method '" + m.name + "' needs a taxonomy");
    }
    if (m.kind == MethodKind::kEmbedding && m.embeddings.empty()) {
      throw AssetError("method '" + m.name + "' needs an embedding file");
    }
    require(m.taxonomy, "taxonomy");
    require(m.embeddings, "embedding file");
    require(m.corpus, "corpus");
  }
}

}  // namespace docsim
