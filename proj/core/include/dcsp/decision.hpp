#pragma once

#include <cstdint>
#include <deque>
#include <random>
#include <stdexcept>

#include "dcsp/word.hpp"

namespace dcsp {

/// Source of the random choices made by the solver. Production uses the
/// seeded PRNG; tests script the decisions to pin a particular path.
class DecisionSource {
 public:
  virtual ~DecisionSource() = default;

  /// Uniform value in [0, bound); bound must be positive.
  virtual std::size_t index(std::size_t bound) = 0;

  /// Uniform real in [0, 1].
  virtual double real01() = 0;

  bool coin() { return index(2) == 1; }
};

class RngDecisionSource final : public DecisionSource {
 public:
  explicit RngDecisionSource(std::uint64_t seed) : rng_(seed) {}

  std::size_t index(std::size_t bound) override {
    return static_cast<std::size_t>(uniform_below(rng_, bound));
  }

  double real01() override { return (rng_() >> 11) * 0x1.0p-53; }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Replays a fixed list of choices; throws when the script runs dry so a
/// test that under-specifies its path fails loudly.
class ScriptedDecisionSource final : public DecisionSource {
 public:
  ScriptedDecisionSource& push_index(std::size_t v) {
    indices_.push_back(v);
    return *this;
  }
  ScriptedDecisionSource& push_real(double v) {
    reals_.push_back(v);
    return *this;
  }

  std::size_t index(std::size_t bound) override {
    if (indices_.empty()) throw std::logic_error("scripted decisions exhausted");
    std::size_t v = indices_.front();
    indices_.pop_front();
    if (v >= bound) throw std::logic_error("scripted index out of bound");
    return v;
  }

  double real01() override {
    if (reals_.empty()) throw std::logic_error("scripted reals exhausted");
    double v = reals_.front();
    reals_.pop_front();
    return v;
  }

 private:
  std::deque<std::size_t> indices_;
  std::deque<double> reals_;
};

}  // namespace dcsp
