#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dcsp/word.hpp"

namespace dcsp {

/// A subset of the generator indices [1, rank], kept sorted and unique.
struct GeneratorSubset {
  std::vector<int> indices;

  static GeneratorSubset of(std::vector<int> idx, const GroupSpec& spec);
  bool contains(int i) const;
  bool empty() const { return indices.empty(); }
  std::size_t size() const { return indices.size(); }
};

/// A DCSP instance: find x over y_set and y over z_set with x a y = b.
/// b is normalized at construction; a is stored as given.
struct DcspInstance {
  GroupSpec spec;
  GeneratorSubset y_set;
  GeneratorSubset z_set;
  Word a;
  Word b;

  static DcspInstance make(const GroupSpec& spec, GeneratorSubset y,
                           GeneratorSubset z, Word a, Word b);
};

/// A candidate pair: chi over y_set, zeta over z_set.
struct Chromosome {
  Word chi;
  Word zeta;

  bool operator==(const Chromosome&) const = default;
};

bool in_subgroup(const Word& w, const GeneratorSubset& s);

/// l(normal_form(chi a zeta b^-1)); zero exactly at solutions.
int cost(const DcspInstance& inst, const Chromosome& c);

/// Membership in both subgroups plus zero cost.
bool is_solution(const DcspInstance& inst, const Chromosome& c);

/// Parsed instance file, with the optional hidden witness.
struct InstanceFile {
  DcspInstance instance;
  std::optional<Word> witness_x;
  std::optional<Word> witness_y;
};

/// Line-oriented plain text, '#' comments allowed, keys case-sensitive,
/// order free, unknown or duplicate keys rejected:
///   n: 10
///   Y: 1 2 3 4
///   Z: 7 8 9 10
///   a: 2 2 3 4 5 -4 7 -6 9 10
///   b: ...
///   x: <optional witness>
///   y: <optional witness>
InstanceFile parse_instance(std::istream& in);
InstanceFile load_instance(const std::string& path);
void write_instance(std::ostream& out, const InstanceFile& file);

}  // namespace dcsp
