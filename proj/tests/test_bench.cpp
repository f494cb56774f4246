#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "dcsp/bench.hpp"

using namespace dcsp;

namespace {

RunRecord record(std::string id, double s, bool success, int generations,
                 std::int64_t time_ms) {
  RunRecord r;
  r.instance_id = std::move(id);
  r.n = 10;
  r.l_a = 128;
  r.l_x = r.l_y = 16;
  r.s = s;
  r.seed = 1;
  r.success = success;
  r.generations = generations;
  r.time_ms = time_ms;
  r.final_cost = success ? 0 : 5;
  return r;
}

}  // namespace

TEST_CASE("CSV round trip") {
  std::vector<RunRecord> in{
      record("i1", 16.0, true, 100, 10000),
      record("i2", 17.5, false, 2000, 123456),
  };
  in[1].seed = 0xdeadbeefcafeull;

  std::ostringstream out;
  write_csv(out, in);
  CHECK(out.str().find("instance_id,n,l_a,l_x,l_y,s,seed,success,generations") !=
        std::string::npos);

  std::istringstream back(out.str());
  CHECK(read_csv(back) == in);

  std::istringstream empty("");
  CHECK_THROWS_AS(read_csv(empty), std::invalid_argument);
  std::istringstream bad("header\n1,2,3\n");
  CHECK_THROWS_AS(read_csv(bad), std::invalid_argument);
}

TEST_CASE("summaries by instance") {
  SUBCASE("single successful run") {
    auto stats = summarize({record("i1", 16, true, 100, 10000)}, Grouping::by_instance);
    REQUIRE(stats.size() == 1);
    CHECK(stats[0].key == "i1");
    CHECK(stats[0].runs == 1);
    CHECK(stats[0].successes == 1);
    CHECK(stats[0].mean_g == 100.0);
    CHECK(stats[0].mean_t == 10.0);
    CHECK(stats[0].stddev_g == 0.0);
    CHECK(stats[0].sec_per_gen == doctest::Approx(0.1));
  }

  SUBCASE("sample stddev over successes, failures excluded") {
    std::vector<RunRecord> rs{
        record("i1", 16, true, 180, 1800),
        record("i1", 16, true, 186, 2000),
        record("i1", 16, false, 2000, 99999),
        record("i2", 16, true, 7, 70),
    };
    auto stats = summarize(rs, Grouping::by_instance);
    REQUIRE(stats.size() == 2);
    CHECK(stats[0].key == "i1");  // first-appearance order
    CHECK(stats[0].runs == 3);
    CHECK(stats[0].successes == 2);
    CHECK(stats[0].mean_g == doctest::Approx(183.0));
    CHECK(stats[0].stddev_g == doctest::Approx(std::sqrt(18.0)));
    CHECK(stats[1].key == "i2");
    CHECK(stats[1].runs == 1);
  }

  SUBCASE("group with no successes reports zeros") {
    auto stats = summarize({record("i1", 16, false, 500, 1000)}, Grouping::by_instance);
    REQUIRE(stats.size() == 1);
    CHECK(stats[0].successes == 0);
    CHECK(stats[0].mean_g == 0.0);
    CHECK(stats[0].sec_per_gen == 0.0);
  }
}

TEST_CASE("summaries by s interval") {
  std::vector<RunRecord> rs{
      record("a", 30.0, true, 10, 100),   // [30, 45)
      record("b", 20.0, true, 20, 200),   // [15, 30)
      record("c", 29.9, true, 30, 300),   // [15, 30)
      record("d", 44.999, true, 40, 400), // [30, 45)
  };
  auto stats = summarize(rs, Grouping::by_s_interval);
  REQUIRE(stats.size() == 2);
  CHECK(stats[0].key == "15-30");
  CHECK(stats[0].runs == 2);
  CHECK(stats[0].mean_g == doctest::Approx(25.0));
  CHECK(stats[1].key == "30-45");
  CHECK(stats[1].runs == 2);
  CHECK(stats[1].mean_g == doctest::Approx(25.0));

  std::ostringstream out;
  write_summary(out, stats);
  CHECK(out.str().find("group,runs,successes") != std::string::npos);
  CHECK(out.str().find("15-30,2,2,25") != std::string::npos);
}

TEST_CASE("bench config parsing") {
  std::istringstream in(
      "# suite\n"
      "pop 20\n"
      "params 2,4,2,9,3,0\n"
      "sigma 500\n"
      "init-len 2\n"
      "group s\n"
      "instance rank=10 la=128 lx=16 ly=16 count=3 repeat=10 seed=42\n"
      "instance file=inst.txt repeat=2 seed=7  # trailing comment\n");
  BenchConfig cfg = parse_bench_config(in);
  CHECK(cfg.params.population == 20);
  CHECK(cfg.params.counts == std::array<int, 6>{2, 4, 2, 9, 3, 0});
  CHECK(cfg.ga.sigma == 500);
  CHECK(cfg.ga.initial_length == 2);
  CHECK(cfg.grouping == Grouping::by_s_interval);
  REQUIRE(cfg.lines.size() == 2);
  CHECK_FALSE(cfg.lines[0].file.has_value());
  CHECK(cfg.lines[0].gen.rank == 10);
  CHECK(cfg.lines[0].gen.l_a == 128);
  CHECK(cfg.lines[0].count == 3);
  CHECK(cfg.lines[0].repeat == 10);
  CHECK(cfg.lines[0].seed == 42);
  CHECK(cfg.lines[1].file == "inst.txt");
  CHECK(cfg.lines[1].repeat == 2);

  auto parse = [](const std::string& text) {
    std::istringstream s(text);
    return parse_bench_config(s);
  };
  CHECK_THROWS_WITH_AS(parse("bogus 1\n"), doctest::Contains("unknown key"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse("group neither\n"), doctest::Contains("line 1"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse("instance count=1\n"), doctest::Contains("file= or rank="),
                       std::invalid_argument);
  CHECK_THROWS_AS(parse("instance rank=10 count=0\n"), std::invalid_argument);
  // defaults must still validate: pop 200 with mismatched counts
  CHECK_THROWS_AS(parse("params 1,1,1,1,1,1\n"), std::invalid_argument);
}

TEST_CASE("mix_seed separates salts") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t salt = 0; salt < 200; ++salt) {
    seen.insert(mix_seed(7, salt));
  }
  CHECK(seen.size() == 200);
  CHECK(mix_seed(7, 3) == mix_seed(7, 3));
  CHECK(mix_seed(7, 3) != mix_seed(8, 3));
}

TEST_CASE("run_bench end to end") {
  std::istringstream in(
      "pop 20\n"
      "params 2,4,2,9,3,0\n"
      "sigma 2000\n"
      "instance rank=4 la=8 lx=2 ly=2 count=2 repeat=2 seed=5\n");
  BenchConfig cfg = parse_bench_config(in);

  std::vector<RunRecord> records = run_bench(cfg, 1);
  REQUIRE(records.size() == 4);
  std::set<std::string> ids;
  for (const RunRecord& r : records) {
    ids.insert(r.instance_id);
    CHECK(r.n == 4);
    CHECK(r.l_a == 8);
    CHECK(r.s == 2.0);
    CHECK(r.success);
    CHECK(r.final_cost == 0);
  }
  CHECK(ids.size() == 2);
  for (std::size_t k = 0; k + 1 < records.size(); ++k) {
    CHECK(std::pair(records[k].instance_id, records[k].seed) <=
          std::pair(records[k + 1].instance_id, records[k + 1].seed));
  }

  // a thread pool must not change the results (timings aside)
  std::vector<RunRecord> parallel = run_bench(cfg, 4);
  REQUIRE(parallel.size() == records.size());
  for (std::size_t k = 0; k < records.size(); ++k) {
    CHECK(parallel[k].instance_id == records[k].instance_id);
    CHECK(parallel[k].seed == records[k].seed);
    CHECK(parallel[k].success == records[k].success);
    CHECK(parallel[k].generations == records[k].generations);
    CHECK(parallel[k].final_cost == records[k].final_cost);
  }
}
