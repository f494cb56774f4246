#include "dcsp/generate.hpp"

#include <numeric>
#include <stdexcept>
#include <tuple>

namespace dcsp {

std::pair<GeneratorSubset, GeneratorSubset> problem_p_subgroups(int n) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("problem (P) requires an even rank n = 2m with m > 1");
  }
  GroupSpec spec{n};
  int m = n / 2;
  std::vector<int> y(m - 1), z(n - (m + 2) + 1);
  std::iota(y.begin(), y.end(), 1);
  std::iota(z.begin(), z.end(), m + 2);
  return {GeneratorSubset::of(std::move(y), spec), GeneratorSubset::of(std::move(z), spec)};
}

GeneratedInstance generate(const InstanceSpec& spec) {
  GroupSpec group{spec.rank};
  if (!group.valid()) throw std::invalid_argument("rank must be >= 2");
  if (spec.l_a < 0 || spec.l_x < 0 || spec.l_y < 0) {
    throw std::invalid_argument("target lengths must be non-negative");
  }

  GeneratorSubset y_set, z_set;
  if (spec.problem_p) {
    std::tie(y_set, z_set) = problem_p_subgroups(spec.rank);
  } else {
    y_set = spec.y_set;
    z_set = spec.z_set;
    if (y_set.empty() || z_set.empty()) {
      throw std::invalid_argument("explicit layout requires non-empty Y and Z");
    }
  }

  std::vector<int> full(spec.rank);
  std::iota(full.begin(), full.end(), 1);

  std::mt19937_64 rng(spec.seed);
  Word a = random_word(spec.l_a, full, group, rng);
  Word x = random_word(spec.l_x, y_set.indices, group, rng);
  Word y = random_word(spec.l_y, z_set.indices, group, rng);

  Word b;
  b.reserve(x.size() + a.size() + y.size());
  b.insert(b.end(), x.begin(), x.end());
  b.insert(b.end(), a.begin(), a.end());
  b.insert(b.end(), y.begin(), y.end());

  GeneratedInstance out{
      DcspInstance::make(group, std::move(y_set), std::move(z_set), a, std::move(b)),
      std::move(x), std::move(y), (spec.l_x + spec.l_y) / 2.0};
  return out;
}

}  // namespace dcsp
