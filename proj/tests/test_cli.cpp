#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dcsp/instance.hpp"

namespace fs = std::filesystem;

namespace {

std::string g_cli;
fs::path g_dir;

struct Run {
  int exit_code;
  std::string out;
  std::string err;
};

// Executes the installed binary through the shell; stdout/stderr captured
// via temp files so assertions can inspect both streams.
Run run_cli(const std::string& args) {
  static int counter = 0;
  fs::path out = g_dir / ("out" + std::to_string(counter) + ".txt");
  fs::path err = g_dir / ("err" + std::to_string(counter) + ".txt");
  ++counter;
  std::string cmd = "'" + g_cli + "' " + args + " >'" + out.string() + "' 2>'" +
                    err.string() + "'";
  int status = std::system(cmd.c_str());
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  int code = status < 0 ? status : WEXITSTATUS(status);
  return Run{code, slurp(out), slurp(err)};
}

}  // namespace

TEST_CASE("reduce prints normal forms") {
  Run r = run_cli("reduce --rank 8 \"6 8 -1 2 -8 -2 6 4 5\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "-1 4 6 6 5\n");

  r = run_cli("reduce --rank 8 --pseudo \"6 8 -1 2 -8 -2 6 4 5\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "6 -1 6 4 5\n");

  r = run_cli("reduce --rank 4 \"3 1\"");
  CHECK(r.out == "1 3\n");

  r = run_cli("reduce --rank 4 \"1 -1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "\n");
}

TEST_CASE("reduce accepts a word file") {
  fs::path wf = g_dir / "word.txt";
  std::ofstream(wf) << "6 8 -1 2 -8 -2 6 4 5\n";
  Run r = run_cli("reduce --rank 8 '" + wf.string() + "'");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "-1 4 6 6 5\n");
}

TEST_CASE("reduce rejects bad input") {
  Run r = run_cli("reduce --rank 4 \"5\"");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("error:") != std::string::npos);

  r = run_cli("reduce --rank 4 \"1 frog\"");
  CHECK(r.exit_code == 1);

  r = run_cli("reduce \"1\"");  // missing --rank
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("error:") != std::string::npos);

  r = run_cli("");  // missing subcommand
  CHECK(r.exit_code == 1);
}

TEST_CASE("gen then solve round trip") {
  fs::path inst = g_dir / "inst.txt";
  Run r = run_cli("gen --rank 4 --la 8 --lx 2 --ly 2 --seed 9 -o '" + inst.string() + "'");
  REQUIRE(r.exit_code == 0);

  // the emitted file is loadable and its witness solves it
  dcsp::InstanceFile f = dcsp::load_instance(inst.string());
  REQUIRE(f.witness_x.has_value());
  REQUIRE(f.witness_y.has_value());
  CHECK(dcsp::is_solution(f.instance, dcsp::Chromosome{*f.witness_x, *f.witness_y}));

  r = run_cli("solve '" + inst.string() +
              "' --pop 20 --params 2,4,2,9,3,0 --sigma 2000 --seed 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("status: solution\n") != std::string::npos);
  CHECK(r.out.find("cost: 0\n") != std::string::npos);

  // parse the reported pair back out and verify it
  std::istringstream lines(r.out);
  std::string line;
  dcsp::Word chi, zeta;
  while (std::getline(lines, line)) {
    if (line.rfind("chi: ", 0) == 0) chi = dcsp::parse_word(line.substr(5), f.instance.spec);
    if (line.rfind("zeta: ", 0) == 0) zeta = dcsp::parse_word(line.substr(6), f.instance.spec);
  }
  CHECK(dcsp::is_solution(f.instance, dcsp::Chromosome{chi, zeta}));
}

TEST_CASE("gen to stdout and explicit subgroup layout") {
  Run r = run_cli("gen --rank 9 --la 6 --lx 2 --ly 2 --seed 1 --Y \"2 3\" --Z \"8 9\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n: 9") != std::string::npos);
  CHECK(r.out.find("Y: 2 3") != std::string::npos);

  r = run_cli("gen --rank 9 --la 6 --Y \"2 3\"");  // Z missing
  CHECK(r.exit_code == 1);
  r = run_cli("gen --rank 10 --problem-p --Y \"1 2\" --Z \"9 10\"");  // exclusive
  CHECK(r.exit_code == 1);
  r = run_cli("gen --rank 9 --la 4");  // odd rank without explicit layout
  CHECK(r.exit_code == 1);
}

TEST_CASE("solve reports a timeout with exit code 2") {
  fs::path inst = g_dir / "hard.txt";
  Run r = run_cli("gen --rank 10 --la 64 --lx 12 --ly 12 --seed 4 -o '" + inst.string() + "'");
  REQUIRE(r.exit_code == 0);

  r = run_cli("solve '" + inst.string() + "' --pop 20 --params 2,4,2,9,3,0 --sigma 2 --seed 1");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("status: timeout\n") != std::string::npos);
  CHECK(r.out.find("generations: 2\n") != std::string::npos);

  r = run_cli("solve '" + (g_dir / "nonexistent.txt").string() + "'");
  CHECK(r.exit_code == 1);
}

TEST_CASE("solve --trace dumps the reduced expression") {
  fs::path inst = g_dir / "traced.txt";
  Run r = run_cli("gen --rank 10 --la 64 --lx 12 --ly 12 --seed 4 -o '" + inst.string() + "'");
  REQUIRE(r.exit_code == 0);
  r = run_cli("solve '" + inst.string() +
              "' --pop 20 --params 2,4,2,9,3,0 --sigma 2 --seed 1 --trace");
  CHECK(r.out.find("-- generation 0 best cost ") != std::string::npos);
  CHECK(r.out.find("block 1: side=") != std::string::npos);
}

TEST_CASE("bench writes a CSV and prints a summary") {
  fs::path cfg = g_dir / "suite.txt";
  fs::path csv = g_dir / "records.csv";
  std::ofstream(cfg) << "pop 20\n"
                        "params 2,4,2,9,3,0\n"
                        "sigma 1000\n"
                        "instance rank=4 la=8 lx=2 ly=2 count=2 repeat=2 seed=5\n";
  Run r = run_cli("bench --config '" + cfg.string() + "' --out '" + csv.string() +
                  "' --jobs 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("group,runs,successes", 0) == 0);

  std::ifstream in(csv);
  REQUIRE(in.good());
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 6);  // metadata + header + 4 records
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_tests <path-to-dcsp-binary> [doctest args]\n");
    return 1;
  }
  g_cli = argv[1];
  g_dir = fs::temp_directory_path() / "dcsp-cli-tests";
  fs::remove_all(g_dir);
  fs::create_directories(g_dir);

  doctest::Context ctx;
  ctx.applyCommandLine(argc - 1, argv + 1);
  int rc = ctx.run();
  fs::remove_all(g_dir);
  return rc;
}
