#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dcsp/bench.hpp"
#include "dcsp/ga.hpp"
#include "dcsp/generate.hpp"

namespace {

using namespace dcsp;

std::string read_word_argument(const std::string& arg) {
  if (std::filesystem::exists(arg) && std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return arg;
}

std::vector<int> parse_indices(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  int v;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw std::invalid_argument("bad generator index list '" + text + "'");
  return out;
}

void dump_trace(std::ostream& out, const TracebackDetail& d) {
  // Two rows: surviving labels above their letters, then the block table.
  std::string labels_row, letters_row;
  for (const LabeledLetter& x : d.ebar) {
    std::string lab = x.label >= 0 ? std::to_string(x.label) : "";
    std::string let = std::to_string(x.letter);
    std::size_t w = std::max(lab.size(), let.size()) + 1;
    labels_row += std::string(w - lab.size(), ' ') + lab;
    letters_row += std::string(w - let.size(), ' ') + let;
  }
  out << labels_row << '\n' << letters_row << '\n';
  int k = 0;
  for (const Block& b : d.blocks) {
    out << "block " << ++k << ": side=" << (b.side == Side::chi ? "chi" : "zeta")
        << " span=[" << b.begin << "," << b.end << "] labels=";
    for (std::size_t i = 0; i < b.labels.size(); ++i) {
      if (i) out << ',';
      out << b.labels[i];
    }
    out << '\n';
  }
}

int cmd_reduce(int rank, bool pseudo, const std::string& arg) {
  GroupSpec spec{rank};
  if (!spec.valid()) throw std::invalid_argument("--rank must be >= 2");
  Word u = parse_word(read_word_argument(arg), spec);
  Word r = pseudo ? pseudo_normal_form(u, spec) : normal_form(u, spec);
  std::cout << format_word(r) << '\n';
  return 0;
}

struct GenOptions {
  InstanceSpec spec;
  std::string y_text, z_text;
  std::string out_path;
};

int cmd_gen(GenOptions& opt) {
  if (!opt.y_text.empty() || !opt.z_text.empty()) {
    if (opt.y_text.empty() || opt.z_text.empty()) {
      throw std::invalid_argument("--Y and --Z must be given together");
    }
    GroupSpec spec{opt.spec.rank};
    opt.spec.problem_p = false;
    opt.spec.y_set = GeneratorSubset::of(parse_indices(opt.y_text), spec);
    opt.spec.z_set = GeneratorSubset::of(parse_indices(opt.z_text), spec);
  }
  GeneratedInstance g = generate(opt.spec);
  InstanceFile f = g.to_file();
  if (opt.out_path.empty()) {
    write_instance(std::cout, f);
  } else {
    std::ofstream out(opt.out_path);
    if (!out) throw std::runtime_error("cannot write '" + opt.out_path + "'");
    write_instance(out, f);
  }
  return 0;
}

struct SolveOptions {
  std::string file;
  ParameterSet params;
  GaConfig config;
  std::string params_text;
  std::string substitution = "random";
  bool trace = false;
};

int cmd_solve(SolveOptions& opt) {
  if (!opt.params_text.empty()) opt.params.counts = ParameterSet::parse_counts(opt.params_text);
  if (opt.substitution == "recommended") {
    opt.config.substitution = SubstitutionMode::recommended;
  } else if (opt.substitution != "random") {
    throw std::invalid_argument("--substitution must be random or recommended");
  }
  opt.params.validate();
  opt.config.validate();

  InstanceFile f = load_instance(opt.file);
  const DcspInstance& inst = f.instance;

  GenerationObserver observer;
  int last_best = -1;
  if (opt.trace) {
    observer = [&](int gen, const Population& pop) {
      if (pop.front().cost == last_best) return;
      last_best = pop.front().cost;
      std::cout << "-- generation " << gen << " best cost " << pop.front().cost << '\n';
      TracebackDetail detail;
      RngDecisionSource scratch(0);
      evaluate(inst, pop.front().chrom, scratch, &detail);
      dump_trace(std::cout, detail);
    };
  }

  RunResult res = run(inst, opt.params, opt.config, observer);
  bool solved = res.outcome == RunResult::Outcome::solution;
  std::cout << "status: " << (solved ? "solution" : "timeout") << '\n';
  std::cout << "chi: " << format_word(res.best.chi) << '\n';
  std::cout << "zeta: " << format_word(res.best.zeta) << '\n';
  std::cout << "cost: " << res.best_cost << '\n';
  std::cout << "generations: " << res.generations << '\n';
  std::cout << "time_ms: " << static_cast<long long>(res.elapsed_seconds * 1000.0) << '\n';
  return solved ? 0 : 2;
}

int cmd_bench(const std::string& config_path, const std::string& out_path, int jobs) {
  BenchConfig cfg = load_bench_config(config_path);
  std::vector<RunRecord> records = run_bench(cfg, jobs);
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  write_csv(out, records);
  write_summary(std::cout, summarize(records, cfg.grouping));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double coset search in Vershik groups: rewriting engine, GA solver, benchmark harness"};
  app.require_subcommand(1);

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Print the normal form of a word");
  int rank = 0;
  bool pseudo = false;
  std::string word_arg;
  reduce->add_option("--rank", rank, "Group rank n")->required();
  reduce->add_flag("--pseudo", pseudo, "Pseudo-normal form (no reordering)");
  reduce->add_option("word", word_arg, "Word text or path to a word file")->required();

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random DCSP instance");
  GenOptions gopt;
  gen->add_option("--rank", gopt.spec.rank, "Group rank n")->required();
  gen->add_option("--la", gopt.spec.l_a, "Reduced length of a");
  gen->add_option("--lx", gopt.spec.l_x, "Reduced length of the hidden x");
  gen->add_option("--ly", gopt.spec.l_y, "Reduced length of the hidden y");
  gen->add_option("--seed", gopt.spec.seed, "Generation seed");
  auto* y_opt = gen->add_option("--Y", gopt.y_text, "Explicit Y indices, e.g. \"1 2 3\"");
  auto* z_opt = gen->add_option("--Z", gopt.z_text, "Explicit Z indices");
  bool problem_p = false;
  gen->add_flag("--problem-p", problem_p,
                "Commuting layout Y={1..m-1}, Z={m+2..n} (the default)")
      ->excludes(y_opt)
      ->excludes(z_opt);
  gen->add_option("-o,--out", gopt.out_path, "Output file (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "Run the GA on an instance file");
  SolveOptions sopt;
  solve->add_option("file", sopt.file, "Instance file")->required();
  solve->add_option("--pop", sopt.params.population, "Population size");
  solve->add_option("--params", sopt.params_text,
                    "Counts: crossovers,substitutions,deletions,insertions,selections,randoms");
  solve->add_option("--sigma", sopt.config.sigma, "Suicide control (generation budget)");
  solve->add_option("--seed", sopt.config.seed, "Run seed");
  solve->add_option("--init-len", sopt.config.initial_length, "Initial chromosome length");
  solve->add_flag("--trace", sopt.trace, "Dump reduced expression and block table on improvement");
  solve->add_option("--substitution", sopt.substitution, "random | recommended");

  // bench
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
  std::string bench_config, bench_out;
  int jobs = 1;
  bench->add_option("--config", bench_config, "Suite config file")->required();
  bench->add_option("--out", bench_out, "Output CSV path")->required();
  bench->add_option("--jobs", jobs, "Concurrent runs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*reduce) return cmd_reduce(rank, pseudo, word_arg);
    if (*gen) return cmd_gen(gopt);
    if (*solve) return cmd_solve(sopt);
    if (*bench) return cmd_bench(bench_config, bench_out, jobs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
