#pragma once

#include <cstdint>
#include <optional>

#include "dcsp/instance.hpp"

namespace dcsp {

/// Recipe for a random instance. With problem_p set, the subgroups are the
/// commuting pair Y = {1..m-1}, Z = {m+2..n} for n = 2m; otherwise the
/// explicit subsets are used.
struct InstanceSpec {
  int rank = 10;
  int l_a = 0;
  int l_x = 0;
  int l_y = 0;
  bool problem_p = true;
  GeneratorSubset y_set;  // used when !problem_p
  GeneratorSubset z_set;
  std::uint64_t seed = 0;
};

/// Y = {1..m-1}, Z = {m+2..n} for even n = 2m, m > 1.
std::pair<GeneratorSubset, GeneratorSubset> problem_p_subgroups(int n);

struct GeneratedInstance {
  DcspInstance instance;
  Word witness_x;
  Word witness_y;
  double mean_witness_length = 0.0;  // the statistic s

  InstanceFile to_file() const {
    return InstanceFile{instance, witness_x, witness_y};
  }
};

/// a, x, y by seeded random walk to exact reduced lengths; b = normal form
/// of x a y. The witness solves the instance by construction.
GeneratedInstance generate(const InstanceSpec& spec);

}  // namespace dcsp
