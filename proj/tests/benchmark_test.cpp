#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "docsim/benchmark.hpp"
#include "docsim/error.hpp"

namespace {

const std::string kData = DOCSIM_TEST_DATA;

class ConstantScorer final : public docsim::PairScorer {
 public:
  double score(const docsim::PairRecord& r) const override { return static_cast<double>(r.s1.size()) / 100.0; }
};

}  // namespace

TEST(ScoreRecords, PreservesOrderAcrossThreadCounts) {
  std::vector<docsim::PairRecord> records;
  for (int i = 0; i < 103; ++i) records.push_back({"r:" + std::to_string(i), std::string(i % 37, 'x'), "y", {}});
  const ConstantScorer scorer;
  const auto serial = docsim::score_records(scorer, records, 1);
  for (std::size_t threads : {2u, 3u, 8u, 0u}) {
    const auto parallel = docsim::score_records(scorer, records, threads);
    ASSERT_EQ(parallel.size(), records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
      EXPECT_EQ(parallel[i].id, records[i].id);
      EXPECT_EQ(parallel[i].predicted, serial[i].predicted);
    }
  }
  EXPECT_TRUE(docsim::score_records(scorer, {}, 4).empty());
}

TEST(ReportTableTest, Formatting) {
  EXPECT_EQ(docsim::ReportTable::format_cell(0.70172), "70.172%");
  EXPECT_EQ(docsim::ReportTable::format_cell(std::nullopt), "N/A");
  EXPECT_EQ(docsim::ReportTable::format_cell(-0.0123456), "-1.235%");

  docsim::ReportTable t;
  t.add_row("A, B", {0.5, std::nullopt, std::nullopt, 1.0, 0.25, 0.125});
  EXPECT_EQ(t.to_csv(),
            "Method,SICK-R Pearson,SICK-R Spearman,SICK-E Accuracy,AFS Pearson,AFS Spearman,MRPC Accuracy\n"
            "\"A, B\",50.000%,N/A,N/A,100.000%,25.000%,12.500%\n");
  EXPECT_NE(t.to_markdown().find("| A, B | 50.000% | N/A | N/A |"), std::string::npos);
  EXPECT_THROW(t.row("missing"), std::out_of_range);
}

TEST(RunBenchmark, FixtureTable) {
  const auto config = docsim::load_config(kData + "/bench_fixture.cfg");
  std::ostringstream log;
  const auto table = docsim::run_benchmark(config, &log);
  ASSERT_EQ(table.methods().size(), 4u);
  EXPECT_EQ(table.methods()[0], "String Similarity");
  for (const auto& row : table.rows()) {
    EXPECT_FALSE(row[docsim::ReportTable::kSickEAccuracy].has_value());
    ASSERT_TRUE(row[docsim::ReportTable::kMrpcAccuracy].has_value());
    EXPECT_GE(*row[docsim::ReportTable::kMrpcAccuracy], 0.0);
    EXPECT_LE(*row[docsim::ReportTable::kMrpcAccuracy], 1.0);
    for (auto col : {docsim::ReportTable::kSickRPearson, docsim::ReportTable::kSickRSpearman,
                     docsim::ReportTable::kAfsPearson, docsim::ReportTable::kAfsSpearman}) {
      if (row[col]) {
        EXPECT_GE(*row[col], -1.0 - 1e-12);
        EXPECT_LE(*row[col], 1.0 + 1e-12);
      }
    }
  }
  EXPECT_NE(log.str().find("[bench]"), std::string::npos);

  const auto again = docsim::run_benchmark(config);
  EXPECT_EQ(table.to_csv(), again.to_csv());
}

TEST(RunBenchmark, SeedChangesSplitButNotShape) {
  auto config = docsim::load_config(kData + "/bench_fixture.cfg");
  config.seed = 43;
  const auto table = docsim::run_benchmark(config);
  EXPECT_EQ(table.rows().size(), 4u);
}

TEST(RunBenchmark, MrpcOnlyLeavesOtherColumnsEmpty) {
  const auto table = docsim::run_benchmark(docsim::load_config(kData + "/bench_mrpc_only.cfg"));
  ASSERT_EQ(table.rows().size(), 1u);
  const auto& row = table.rows()[0];
  for (std::size_t c = 0; c < row.size(); ++c) {
    EXPECT_EQ(row[c].has_value(), c == docsim::ReportTable::kMrpcAccuracy) << c;
  }
}

TEST(RunBenchmark, MissingAssets) {
  auto config = docsim::load_config(kData + "/bench_fixture.cfg");
  config.methods[1].taxonomy = kData + "/no_such_taxonomy.tsv";
  EXPECT_THROW(docsim::run_benchmark(config), docsim::AssetError);

  config = docsim::load_config(kData + "/bench_fixture.cfg");
  config.methods[1].taxonomy.clear();
  EXPECT_THROW(docsim::run_benchmark(config), docsim::AssetError);

  config = docsim::load_config(kData + "/bench_fixture.cfg");
  config.sick = kData + "/missing_sick.tsv";
  EXPECT_THROW(docsim::run_benchmark(config), docsim::AssetError);
}

TEST(Config, ParseErrorsCarryLines) {
  const auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      docsim::parse_config(in);
    } catch (const docsim::ConfigError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("seed = 1\nbogus = 2\n"), 2u);
  EXPECT_EQ(line_of("seed = x\n"), 1u);
  EXPECT_EQ(line_of("[method:A]\nkind = magic\n"), 2u);
  EXPECT_EQ(line_of("[method:A]\nkind = string\nweights = 1.5\n"), 3u);
  EXPECT_EQ(line_of("no equals sign\n"), 1u);

  std::istringstream ok("# c\nseed = 9\nafs = a.csv, b.csv\n[method:X]\nkind = pmi+string\nwindow = 3\n");
  const auto cfg = docsim::parse_config(ok, "/base");
  EXPECT_EQ(cfg.seed, 9u);
  EXPECT_EQ(cfg.afs, (std::vector<std::string>{"/base/a.csv", "/base/b.csv"}));
  ASSERT_EQ(cfg.methods.size(), 1u);
  EXPECT_EQ(cfg.methods[0].kind, docsim::MethodKind::kPmiString);
  EXPECT_EQ(cfg.methods[0].window, 3u);
}
