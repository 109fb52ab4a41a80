#include "docsim/datasets.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "docsim/error.hpp"
#include "docsim/rng.hpp"

namespace docsim {
namespace {

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AssetError("cannot open dataset file: " + path);
  return in;
}

// Strips the line terminator and, on the first line, a UTF-8 byte-order mark.
void clean_line(std::string& line, std::size_t lineno) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (lineno == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
}

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find('\t', start);
    out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::optional<double> parse_real(const std::string& field) {
  const std::string t = trim(field);
  if (t.empty()) return std::nullopt;
  double v = 0.0;
  const auto* end = t.data() + t.size();
  const auto [ptr, ec] = std::from_chars(t.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

void require_sentences(const PairRecord& r, const std::string& source, std::size_t lineno) {
  if (r.s1.empty() || r.s2.empty()) throw ParseError(source, lineno, "empty sentence");
}

std::string make_id(const std::string& dataset, std::size_t row) { return dataset + ":" + std::to_string(row); }

}  // namespace

std::vector<PairRecord> read_mrpc(std::istream& in, const std::string& source, const std::string& dataset,
                                  std::size_t first_row) {
  std::vector<PairRecord> out;
  std::string line;
  std::size_t lineno = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++lineno;
    clean_line(line, lineno);
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    const auto cols = split_tabs(line);
    if (cols.size() != 5) {
      throw ParseError(source, lineno, "expected 5 tab-separated columns, found " + std::to_string(cols.size()));
    }
    const std::string label = trim(cols[0]);
    if (label != "0" && label != "1") throw ParseError(source, lineno, "label must be 0 or 1, got '" + label + "'");
    PairRecord r{make_id(dataset, first_row + out.size()), cols[3], cols[4], BinaryLabel{label == "1" ? 1 : 0}};
    require_sentences(r, source, lineno);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<PairRecord> load_mrpc(const std::string& path) {
  auto in = open(path);
  return read_mrpc(in, path);
}

std::vector<std::string> split_double_comma(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  const auto flush = [&] {
    std::string collapsed;
    collapsed.reserve(current.size());
    for (std::size_t i = 0; i < current.size(); ++i) {
      collapsed.push_back(current[i]);
      if (current[i] == ',' && i + 1 < current.size() && current[i + 1] == ',') ++i;
    }
    fields.push_back(std::move(collapsed));
    current.clear();
  };
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    const bool lone = c == ',' && (i == 0 || line[i - 1] != ',') && (i + 1 == line.size() || line[i + 1] != ',');
    if (lone) {
      flush();
    } else {
      current.push_back(c);
    }
  }
  flush();
  return fields;
}

std::vector<PairRecord> read_afs(std::istream& in, const std::string& source, const AfsOptions& options,
                                 const std::string& dataset, std::size_t first_row) {
  const std::size_t needed = std::max({options.score_column, options.s1_column, options.s2_column}) + 1;
  if (options.fields < needed) throw std::invalid_argument("AfsOptions: column index beyond field count");

  std::vector<PairRecord> out;
  std::string line;
  std::size_t lineno = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    clean_line(line, lineno);
    if (line.empty()) continue;
    const auto fields = split_double_comma(line);
    if (fields.size() != options.fields) {
      throw ParseError(source, lineno,
                       "expected " + std::to_string(options.fields) + " fields, found " + std::to_string(fields.size()));
    }
    const auto score = parse_real(fields[options.score_column]);
    if (!score) {
      if (first && options.detect_header) {
        first = false;
        continue;
      }
      throw ParseError(source, lineno, "unparseable score '" + fields[options.score_column] + "'");
    }
    first = false;
    PairRecord r{make_id(dataset, first_row + out.size()), fields[options.s1_column], fields[options.s2_column],
                 ScoreLabel{*score}};
    require_sentences(r, source, lineno);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<PairRecord> load_afs(const std::string& path, const AfsOptions& options) {
  auto in = open(path);
  return read_afs(in, path, options);
}

SickViews read_sick(std::istream& in, const std::string& source, const std::string& dataset) {
  SickViews views;
  std::string line;
  std::size_t lineno = 0;
  std::size_t col_a = 0, col_b = 0, col_score = 0, col_label = 0, width = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    clean_line(line, lineno);
    if (!have_header) {
      const auto names = split_tabs(line);
      const auto locate = [&](const std::string& want) {
        for (std::size_t i = 0; i < names.size(); ++i) {
          if (lower(trim(names[i])) == want) return i;
        }
        throw ParseError(source, lineno, "missing column '" + want + "'");
      };
      col_a = locate("sentence_a");
      col_b = locate("sentence_b");
      col_score = locate("relatedness_score");
      col_label = locate("entailment_judgment");
      width = names.size();
      have_header = true;
      continue;
    }
    if (line.empty()) continue;
    const auto cols = split_tabs(line);
    if (cols.size() < width) {
      throw ParseError(source, lineno, "expected " + std::to_string(width) + " columns, found " +
                                           std::to_string(cols.size()));
    }
    const auto score = parse_real(cols[col_score]);
    if (!score) throw ParseError(source, lineno, "unparseable relatedness score");
    if (*score < 1.0 || *score > 5.0) throw ParseError(source, lineno, "relatedness score outside [1, 5]");

    const std::string label = lower(trim(cols[col_label]));
    Entailment e;
    if (label == "entailment") {
      e = Entailment::kEntailment;
    } else if (label == "neutral") {
      e = Entailment::kNeutral;
    } else if (label == "contradiction") {
      e = Entailment::kContradiction;
    } else {
      throw ParseError(source, lineno, "unknown entailment label '" + trim(cols[col_label]) + "'");
    }

    const std::string id = make_id(dataset, views.relatedness.size());
    PairRecord r{id, cols[col_a], cols[col_b], ScoreLabel{*score}};
    require_sentences(r, source, lineno);
    views.relatedness.push_back(r);
    r.gold = EntailmentLabel{e};
    views.entailment.push_back(std::move(r));
  }
  if (!have_header) throw ParseError(source, 0, "missing header line");
  return views;
}

SickViews load_sick(const std::string& path) {
  auto in = open(path);
  return read_sick(in, path);
}

std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  Lcg64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(idx[i - 1], idx[rng.below(i)]);
  }
  return idx;
}

DatasetSplit split_dataset(const std::vector<PairRecord>& records, const SplitSpec& spec) {
  const double sum = spec.train_frac + spec.test_frac + spec.dev_frac;
  if (spec.train_frac < 0 || spec.test_frac < 0 || spec.dev_frac < 0 || std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("split fractions must be non-negative and sum to 1");
  }
  const std::size_t n = records.size();
  // The epsilon keeps exact products such as 0.6 * 10 from flooring to 5.
  const auto portion = [n](double frac) {
    return std::min(n, static_cast<std::size_t>(std::floor(frac * static_cast<double>(n) + 1e-9)));
  };
  const std::size_t n_train = portion(spec.train_frac);
  const std::size_t n_test = std::min(n - n_train, portion(spec.test_frac));

  DatasetSplit out;
  const auto order = shuffled_indices(n, spec.seed);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = records[order[i]];
    if (i < n_train) {
      out.train.push_back(r);
    } else if (i < n_train + n_test) {
      out.test.push_back(r);
    } else {
      out.dev.push_back(r);
    }
  }
  return out;
}

}  // namespace docsim
