#include "dcsp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace dcsp {

namespace {

std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, p);
}

double parse_double(const std::string& tok) {
  double v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) {
    throw std::invalid_argument("bad number '" + tok + "'");
  }
  return v;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << "# dcsp bench records; stddev convention downstream: sample (n-1)\n";
  out << "instance_id,n,l_a,l_x,l_y,s,seed,success,generations,time_ms,final_cost\n";
  for (const RunRecord& r : records) {
    out << r.instance_id << ',' << r.n << ',' << r.l_a << ',' << r.l_x << ','
        << r.l_y << ',' << format_double(r.s) << ',' << r.seed << ','
        << (r.success ? 1 : 0) << ',' << r.generations << ',' << r.time_ms << ','
        << r.final_cost << '\n';
  }
}

std::vector<RunRecord> read_csv(std::istream& in) {
  std::vector<RunRecord> out;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;  // column order is fixed
      continue;
    }
    std::vector<std::string> cols;
    std::istringstream ls(line);
    std::string tok;
    while (std::getline(ls, tok, ',')) cols.push_back(tok);
    if (cols.size() != 11) throw std::invalid_argument("bad CSV row: " + line);
    RunRecord r;
    r.instance_id = cols[0];
    r.n = std::stoi(cols[1]);
    r.l_a = std::stoi(cols[2]);
    r.l_x = std::stoi(cols[3]);
    r.l_y = std::stoi(cols[4]);
    r.s = parse_double(cols[5]);
    r.seed = std::stoull(cols[6]);
    r.success = cols[7] == "1";
    r.generations = std::stoi(cols[8]);
    r.time_ms = std::stoll(cols[9]);
    r.final_cost = std::stoi(cols[10]);
    out.push_back(std::move(r));
  }
  if (!header_seen) throw std::invalid_argument("CSV header row missing");
  return out;
}

std::vector<SummaryStats> summarize(const std::vector<RunRecord>& records,
                                    Grouping grouping) {
  // Keyed groups in first-appearance order (by-instance) or interval order.
  std::vector<std::string> order;
  std::map<std::string, std::vector<const RunRecord*>> groups;
  std::map<std::string, double> interval_lo;

  for (const RunRecord& r : records) {
    std::string key;
    if (grouping == Grouping::by_instance) {
      key = r.instance_id;
    } else {
      double lo = std::floor(r.s / 15.0) * 15.0;
      key = format_double(lo) + "-" + format_double(lo + 15.0);
      interval_lo[key] = lo;
    }
    if (!groups.count(key)) order.push_back(key);
    groups[key].push_back(&r);
  }
  if (grouping == Grouping::by_s_interval) {
    std::sort(order.begin(), order.end(), [&](const std::string& a, const std::string& b) {
      return interval_lo[a] < interval_lo[b];
    });
  }

  std::vector<SummaryStats> out;
  for (const std::string& key : order) {
    SummaryStats st;
    st.key = key;
    double sum_g = 0, sum_t = 0;
    std::vector<double> gs;
    for (const RunRecord* r : groups[key]) {
      ++st.runs;
      if (!r->success) continue;
      ++st.successes;
      sum_g += r->generations;
      sum_t += r->time_ms / 1000.0;
      gs.push_back(r->generations);
    }
    if (st.successes > 0) {
      st.mean_g = sum_g / st.successes;
      st.mean_t = sum_t / st.successes;
      if (gs.size() > 1) {
        double acc = 0;
        for (double g : gs) acc += (g - st.mean_g) * (g - st.mean_g);
        st.stddev_g = std::sqrt(acc / (gs.size() - 1));
      }
      if (st.mean_g > 0) st.sec_per_gen = st.mean_t / st.mean_g;
    }
    out.push_back(std::move(st));
  }
  return out;
}

void write_summary(std::ostream& out, const std::vector<SummaryStats>& stats) {
  out << "group,runs,successes,mean_g,mean_t,stddev_g,sec_per_gen\n";
  for (const SummaryStats& st : stats) {
    out << st.key << ',' << st.runs << ',' << st.successes << ','
        << format_double(st.mean_g) << ',' << format_double(st.mean_t) << ','
        << format_double(st.stddev_g) << ',' << format_double(st.sec_per_gen) << '\n';
  }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 finalizer over the combined value
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

std::map<std::string, std::string> parse_kv(std::istringstream& in, int line_no) {
  std::map<std::string, std::string> kv;
  std::string tok;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected key=value, got '" + tok + "'");
    }
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return kv;
}

int to_int(const std::string& v, int line_no) {
  try {
    std::size_t pos = 0;
    int r = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": bad integer '" + v + "'");
  }
}

}  // namespace

BenchConfig parse_bench_config(std::istream& in) {
  BenchConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;

    if (key == "pop") {
      std::string v;
      ls >> v;
      cfg.params.population = to_int(v, line_no);
    } else if (key == "params") {
      std::string v;
      ls >> v;
      cfg.params.counts = ParameterSet::parse_counts(v);
    } else if (key == "sigma") {
      std::string v;
      ls >> v;
      cfg.ga.sigma = to_int(v, line_no);
    } else if (key == "init-len") {
      std::string v;
      ls >> v;
      cfg.ga.initial_length = to_int(v, line_no);
    } else if (key == "group") {
      std::string v;
      ls >> v;
      if (v == "instance") {
        cfg.grouping = Grouping::by_instance;
      } else if (v == "s") {
        cfg.grouping = Grouping::by_s_interval;
      } else {
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": group must be 'instance' or 's'");
      }
    } else if (key == "instance") {
      auto kv = parse_kv(ls, line_no);
      BenchLine bl;
      if (kv.count("file")) {
        bl.file = kv.at("file");
      } else {
        if (!kv.count("rank")) {
          throw std::invalid_argument("line " + std::to_string(line_no) +
                                      ": instance needs file= or rank=");
        }
        bl.gen.rank = to_int(kv.at("rank"), line_no);
        if (kv.count("la")) bl.gen.l_a = to_int(kv.at("la"), line_no);
        if (kv.count("lx")) bl.gen.l_x = to_int(kv.at("lx"), line_no);
        if (kv.count("ly")) bl.gen.l_y = to_int(kv.at("ly"), line_no);
      }
      if (kv.count("count")) bl.count = to_int(kv.at("count"), line_no);
      if (kv.count("repeat")) bl.repeat = to_int(kv.at("repeat"), line_no);
      if (kv.count("seed")) bl.seed = std::stoull(kv.at("seed"));
      if (bl.count < 1 || bl.repeat < 1) {
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": count and repeat must be >= 1");
      }
      cfg.lines.push_back(std::move(bl));
    } else {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown key '" +
                                  key + "'");
    }
  }
  cfg.params.validate();
  return cfg;
}

BenchConfig load_bench_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open bench config '" + path + "'");
  return parse_bench_config(in);
}

namespace {

struct BenchTask {
  std::string instance_id;
  DcspInstance instance;
  int l_a, l_x, l_y;
  double s;
  std::uint64_t run_seed;
};

}  // namespace

std::vector<RunRecord> run_bench(const BenchConfig& config, int jobs) {
  if (jobs < 1) jobs = 1;
  std::vector<BenchTask> tasks;

  int line_index = 0;
  for (const BenchLine& bl : config.lines) {
    ++line_index;
    for (int j = 0; j < bl.count; ++j) {
      std::string id;
      DcspInstance inst{GroupSpec{2}, {}, {}, {}, {}};
      int la = 0, lx = 0, ly = 0;
      double s = 0;
      if (bl.file) {
        id = *bl.file;
        InstanceFile f = load_instance(*bl.file);
        inst = f.instance;
        la = static_cast<int>(normal_form(inst.a, inst.spec).size());
        if (f.witness_x) lx = static_cast<int>(normal_form(*f.witness_x, inst.spec).size());
        if (f.witness_y) ly = static_cast<int>(normal_form(*f.witness_y, inst.spec).size());
        if (f.witness_x && f.witness_y) s = (lx + ly) / 2.0;
      } else {
        InstanceSpec gs = bl.gen;
        gs.seed = mix_seed(bl.seed, j);
        GeneratedInstance g = generate(gs);
        id = "gen" + std::to_string(line_index) + "-" + std::to_string(j);
        inst = g.instance;
        la = gs.l_a;
        lx = gs.l_x;
        ly = gs.l_y;
        s = g.mean_witness_length;
      }
      for (int rep = 0; rep < bl.repeat; ++rep) {
        tasks.push_back(BenchTask{id, inst, la, lx, ly, s,
                                  mix_seed(mix_seed(bl.seed, j), rep + 1)});
      }
    }
  }

  std::vector<RunRecord> records(tasks.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      std::size_t k = cursor.fetch_add(1);
      if (k >= tasks.size()) return;
      const BenchTask& t = tasks[k];
      GaConfig ga = config.ga;
      ga.seed = t.run_seed;
      RunResult res = run(t.instance, config.params, ga);
      RunRecord r;
      r.instance_id = t.instance_id;
      r.n = t.instance.spec.rank;
      r.l_a = t.l_a;
      r.l_x = t.l_x;
      r.l_y = t.l_y;
      r.s = t.s;
      r.seed = t.run_seed;
      r.success = res.outcome == RunResult::Outcome::solution;
      r.generations = res.generations;
      r.time_ms = static_cast<std::int64_t>(res.elapsed_seconds * 1000.0);
      r.final_cost = res.best_cost;
      records[k] = std::move(r);
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  std::stable_sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) {
    if (a.instance_id != b.instance_id) return a.instance_id < b.instance_id;
    return a.seed < b.seed;
  });
  return records;
}

}  // namespace dcsp
