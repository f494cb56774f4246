#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dcsp/traceback.hpp"

namespace dcsp {

/// Which generator substitution places: a fresh random one, or the one
/// recommended by traceback.
enum class SubstitutionMode { random_generator, recommended };

/// Population size and per-generation child counts, in the fixed order
/// crossovers, substitutions, deletions, insertions, selections, randoms.
struct ParameterSet {
  int population = 200;
  std::array<int, 6> counts{5, 33, 4, 128, 30, 0};

  int crossovers() const { return counts[0]; }
  int substitutions() const { return counts[1]; }
  int deletions() const { return counts[2]; }
  int insertions() const { return counts[3]; }
  int selections() const { return counts[4]; }
  int randoms() const { return counts[5]; }

  void validate() const;

  /// Comma-separated six integers, e.g. "5,33,4,128,30,0".
  static std::array<int, 6> parse_counts(const std::string& text);
  std::string counts_string() const;
};

struct GaConfig {
  int sigma = 20000;       // generation budget before suicide
  int initial_length = 1;  // unreduced length of initial chromosomes
  std::uint64_t seed = 0;
  SubstitutionMode substitution = SubstitutionMode::random_generator;

  void validate() const;
};

struct Member {
  Chromosome chrom;  // stored pseudo-reduced
  int cost = 0;
  Recommendation rec;
};

/// Kept sorted ascending by cost, stable on ties.
using Population = std::vector<Member>;

/// Algorithm: total mass W = sum of costs; each member's selection mass is
/// the cost of its mirror under sequence reversal, so the best member gets
/// the worst member's share. The first output is always the best member.
/// W = 0 degenerates to uniform selection.
std::vector<Chromosome> roulette_select(const Population& pop, int count,
                                        DecisionSource& ds);

/// Three distinct members drawn uniformly; the two of least cost win, with
/// draw order breaking ties. Requires population size >= 3.
std::pair<Chromosome, Chromosome> tournament_select(const Population& pop,
                                                    DecisionSource& ds);

/// One side picked uniformly; that side becomes a random segment of c1's
/// side followed by a random segment of c2's; the other side is copied
/// from c1.
Chromosome crossover(const Chromosome& c1, const Chromosome& c2, DecisionSource& ds);

Chromosome mutate_insert(const DcspInstance& inst, const Chromosome& c,
                         const Recommendation& rec, DecisionSource& ds);
Chromosome mutate_substitute(const DcspInstance& inst, const Chromosome& c,
                             const Recommendation& rec, DecisionSource& ds,
                             SubstitutionMode mode = SubstitutionMode::random_generator);
Chromosome mutate_delete(const Chromosome& c, const Recommendation& rec);

/// Both components unreduced uniform random words of exactly the given length.
Chromosome random_chromosome(const DcspInstance& inst, int length, DecisionSource& ds);

/// Produces exactly p children by the fixed slot schedule, pseudo-reduces
/// and evaluates them, and returns them sorted.
Population next_generation(const Population& pop, const DcspInstance& inst,
                           const ParameterSet& params, const GaConfig& config,
                           DecisionSource& ds);

struct RunResult {
  enum class Outcome { solution, timeout };
  Outcome outcome = Outcome::timeout;
  Chromosome best;  // pseudo-reduced; the solution when outcome == solution
  int best_cost = 0;
  int generations = 0;
  double elapsed_seconds = 0.0;
  std::vector<int> best_cost_trace;
};

/// Called once per generation with the sorted population, before breeding.
using GenerationObserver = std::function<void(int generation, const Population&)>;

RunResult run(const DcspInstance& inst, const ParameterSet& params,
              const GaConfig& config, const GenerationObserver& observer = {});

}  // namespace dcsp
