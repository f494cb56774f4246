#include "dcsp/instance.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dcsp {

GeneratorSubset GeneratorSubset::of(std::vector<int> idx, const GroupSpec& spec) {
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  if (idx.empty()) throw std::invalid_argument("generator subset must be non-empty");
  if (idx.front() < 1 || idx.back() > spec.rank) {
    throw std::invalid_argument("generator subset index out of range");
  }
  return GeneratorSubset{std::move(idx)};
}

bool GeneratorSubset::contains(int i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

DcspInstance DcspInstance::make(const GroupSpec& spec, GeneratorSubset y,
                                GeneratorSubset z, Word a, Word b) {
  if (!spec.valid()) throw std::invalid_argument("group rank must be >= 2");
  check_word(a, spec);
  check_word(b, spec);
  Word bn = normal_form(b, spec);
  return DcspInstance{spec, std::move(y), std::move(z), std::move(a), std::move(bn)};
}

bool in_subgroup(const Word& w, const GeneratorSubset& s) {
  for (Letter v : w) {
    if (!s.contains(v < 0 ? -v : v)) return false;
  }
  return true;
}

int cost(const DcspInstance& inst, const Chromosome& c) {
  check_word(c.chi, inst.spec);
  check_word(c.zeta, inst.spec);
  Word e;
  e.reserve(c.chi.size() + inst.a.size() + c.zeta.size() + inst.b.size());
  e.insert(e.end(), c.chi.begin(), c.chi.end());
  e.insert(e.end(), inst.a.begin(), inst.a.end());
  e.insert(e.end(), c.zeta.begin(), c.zeta.end());
  Word binv = invert(inst.b);
  e.insert(e.end(), binv.begin(), binv.end());
  return static_cast<int>(cancel_geodesic(e, inst.spec).size());
}

bool is_solution(const DcspInstance& inst, const Chromosome& c) {
  if (!is_valid_word(c.chi, inst.spec) || !is_valid_word(c.zeta, inst.spec)) return false;
  if (!in_subgroup(c.chi, inst.y_set) || !in_subgroup(c.zeta, inst.z_set)) return false;
  return cost(inst, c) == 0;
}

namespace {

std::vector<int> parse_index_list(const std::string& text, int line_no) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size() || v < 1) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": bad generator index '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

InstanceFile parse_instance(std::istream& in) {
  std::map<std::string, std::pair<std::string, int>> fields;  // key -> (value, line)
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'key: value'");
    }
    std::string key = line.substr(first, colon - first);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    static const char* known[] = {"n", "Y", "Z", "a", "b", "x", "y"};
    if (std::find_if(std::begin(known), std::end(known),
                     [&](const char* k) { return key == k; }) == std::end(known)) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    if (fields.count(key)) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    fields[key] = {line.substr(colon + 1), line_no};
  }

  for (const char* req : {"n", "Y", "Z", "a", "b"}) {
    if (!fields.count(req)) {
      throw std::invalid_argument(std::string("missing required key '") + req + "'");
    }
  }

  GroupSpec spec;
  {
    const auto& [value, ln] = fields.at("n");
    std::istringstream v(value);
    if (!(v >> spec.rank) || spec.rank < 2) {
      throw std::invalid_argument("line " + std::to_string(ln) + ": bad rank");
    }
    std::string rest;
    if (v >> rest) throw std::invalid_argument("line " + std::to_string(ln) + ": bad rank");
  }

  auto subset = [&](const char* key) {
    const auto& [value, ln] = fields.at(key);
    try {
      return GeneratorSubset::of(parse_index_list(value, ln), spec);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(ln) + ": " + e.what());
    }
  };
  auto word = [&](const char* key) {
    const auto& [value, ln] = fields.at(key);
    try {
      return parse_word(value, spec);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(ln) + ": " + e.what());
    }
  };

  InstanceFile out{
      DcspInstance::make(spec, subset("Y"), subset("Z"), word("a"), word("b")), {}, {}};
  if (fields.count("x")) out.witness_x = word("x");
  if (fields.count("y")) out.witness_y = word("y");
  return out;
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file '" + path + "'");
  return parse_instance(in);
}

void write_instance(std::ostream& out, const InstanceFile& file) {
  const DcspInstance& inst = file.instance;
  out << "n: " << inst.spec.rank << '\n';
  out << "Y:";
  for (int i : inst.y_set.indices) out << ' ' << i;
  out << '\n';
  out << "Z:";
  for (int i : inst.z_set.indices) out << ' ' << i;
  out << '\n';
  out << "a: " << format_word(inst.a) << '\n';
  out << "b: " << format_word(inst.b) << '\n';
  if (file.witness_x) out << "x: " << format_word(*file.witness_x) << '\n';
  if (file.witness_y) out << "y: " << format_word(*file.witness_y) << '\n';
}

}  // namespace dcsp
