#include "dcsp/ga.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dcsp {

void ParameterSet::validate() const {
  if (population < 2) throw std::invalid_argument("population size must be >= 2");
  long long sum = 0;
  for (int c : counts) {
    if (c < 0) throw std::invalid_argument("reproduction counts must be non-negative");
    sum += c;
  }
  if (sum != population) {
    throw std::invalid_argument("reproduction counts must sum to the population size");
  }
  if (counts[4] < 1) {
    throw std::invalid_argument("at least one selection slot is required (elitism)");
  }
  if (counts[0] > 0 && population < 3) {
    throw std::invalid_argument("crossover requires population size >= 3");
  }
}

std::array<int, 6> ParameterSet::parse_counts(const std::string& text) {
  std::array<int, 6> out{};
  std::istringstream in(text);
  for (int k = 0; k < 6; ++k) {
    std::string tok;
    if (!std::getline(in, tok, ',')) {
      throw std::invalid_argument("parameter set needs six comma-separated counts");
    }
    try {
      std::size_t pos = 0;
      out[k] = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad parameter count '" + tok + "'");
    }
  }
  std::string rest;
  if (std::getline(in, rest, ',')) {
    throw std::invalid_argument("parameter set needs exactly six counts");
  }
  return out;
}

std::string ParameterSet::counts_string() const {
  std::string out;
  for (int k = 0; k < 6; ++k) {
    if (k) out += ',';
    out += std::to_string(counts[k]);
  }
  return out;
}

void GaConfig::validate() const {
  if (sigma < 1) throw std::invalid_argument("suicide control must be >= 1");
  if (initial_length < 1) throw std::invalid_argument("initial length must be >= 1");
}

std::vector<Chromosome> roulette_select(const Population& pop, int count,
                                        DecisionSource& ds) {
  if (pop.empty() || count < 1) throw std::invalid_argument("roulette_select: bad input");
  const std::size_t p = pop.size();
  long long total = 0;
  for (const Member& m : pop) total += m.cost;

  std::vector<Chromosome> out;
  out.reserve(count);
  out.push_back(pop.front().chrom);  // the elite slot

  // Reversed mass: member i carries the cost of member p-1-i.
  std::vector<double> cumulative(p);
  if (total > 0) {
    double acc = 0;
    for (std::size_t i = 0; i < p; ++i) {
      acc += static_cast<double>(pop[p - 1 - i].cost) / static_cast<double>(total);
      cumulative[i] = acc;
    }
    cumulative.back() = 1.0;
  }

  for (int t = 1; t < count; ++t) {
    if (total == 0) {
      out.push_back(pop[ds.index(p)].chrom);
      continue;
    }
    double r = ds.real01();
    double prev = 0.0;
    std::size_t k = p - 1;
    for (std::size_t i = 0; i < p; ++i) {
      if (r <= cumulative[i] && cumulative[i] > prev) {
        k = i;
        break;
      }
      prev = cumulative[i];
    }
    out.push_back(pop[k].chrom);
  }
  return out;
}

std::pair<Chromosome, Chromosome> tournament_select(const Population& pop,
                                                    DecisionSource& ds) {
  if (pop.size() < 3) throw std::invalid_argument("tournament_select: population < 3");
  std::size_t i1 = ds.index(pop.size());
  std::size_t i2 = i1;
  while (i2 == i1) i2 = ds.index(pop.size());
  std::size_t i3 = i1;
  while (i3 == i1 || i3 == i2) i3 = ds.index(pop.size());

  std::array<std::size_t, 3> picks{i1, i2, i3};
  std::stable_sort(picks.begin(), picks.end(),
                   [&](std::size_t a, std::size_t b) { return pop[a].cost < pop[b].cost; });
  return {pop[picks[0]].chrom, pop[picks[1]].chrom};
}

namespace {

Word random_segment(const Word& w, DecisionSource& ds) {
  std::size_t i = ds.index(w.size() + 1);
  std::size_t j = i + ds.index(w.size() - i + 1);
  return Word(w.begin() + i, w.begin() + j);
}

Letter draw_signed(const GeneratorSubset& set, DecisionSource& ds) {
  std::size_t pick = ds.index(2 * set.size());
  int idx = set.indices[pick / 2];
  return pick % 2 ? -idx : idx;
}

constexpr int kCancelRetries = 16;

bool cancels_with(Letter g, const Word& w, int left_neighbor, int right_neighbor) {
  if (left_neighbor >= 0 && w[left_neighbor] == -g) return true;
  if (right_neighbor < static_cast<int>(w.size()) && w[right_neighbor] == -g) return true;
  return false;
}

struct SidePos {
  Word* word;
  const GeneratorSubset* set;
  int pos;  // clamped local position; -1 when the side word is empty
};

SidePos locate(const DcspInstance& inst, Chromosome& c, const Recommendation& rec) {
  Word* w = rec.side == Side::chi ? &c.chi : &c.zeta;
  const GeneratorSubset* set = rec.side == Side::chi ? &inst.y_set : &inst.z_set;
  int local = rec.label - (rec.side == Side::zeta ? static_cast<int>(c.chi.size()) : 0);
  if (w->empty()) return {w, set, -1};
  local = std::clamp(local, 0, static_cast<int>(w->size()) - 1);
  return {w, set, local};
}

}  // namespace

Chromosome crossover(const Chromosome& c1, const Chromosome& c2, DecisionSource& ds) {
  Chromosome child = c1;
  if (ds.index(2) == 0) {
    child.chi = random_segment(c1.chi, ds);
    Word tail = random_segment(c2.chi, ds);
    child.chi.insert(child.chi.end(), tail.begin(), tail.end());
  } else {
    child.zeta = random_segment(c1.zeta, ds);
    Word tail = random_segment(c2.zeta, ds);
    child.zeta.insert(child.zeta.end(), tail.begin(), tail.end());
  }
  return child;
}

Chromosome mutate_insert(const DcspInstance& inst, const Chromosome& c,
                         const Recommendation& rec, DecisionSource& ds) {
  Chromosome out = c;
  SidePos at = locate(inst, out, rec);
  Word& w = *at.word;

  int slot = at.pos < 0 ? 0 : (rec.direction == Direction::right ? at.pos + 1 : at.pos);
  Letter g = rec.generator;
  int left = slot - 1;
  int right = slot;  // neighbor positions in the pre-insertion word
  for (int tries = 0; tries < kCancelRetries && cancels_with(g, w, left, right); ++tries) {
    g = draw_signed(*at.set, ds);
  }
  w.insert(w.begin() + slot, g);
  return out;
}

Chromosome mutate_substitute(const DcspInstance& inst, const Chromosome& c,
                             const Recommendation& rec, DecisionSource& ds,
                             SubstitutionMode mode) {
  Chromosome out = c;
  SidePos at = locate(inst, out, rec);
  if (at.pos < 0) return out;  // nothing to substitute
  Word& w = *at.word;

  Letter g = mode == SubstitutionMode::recommended ? rec.generator
                                                   : draw_signed(*at.set, ds);
  for (int tries = 0; tries < kCancelRetries && cancels_with(g, w, at.pos - 1, at.pos + 1);
       ++tries) {
    g = draw_signed(*at.set, ds);
  }
  w[at.pos] = g;
  return out;
}

Chromosome mutate_delete(const Chromosome& c, const Recommendation& rec) {
  Chromosome out = c;
  Word& w = rec.side == Side::chi ? out.chi : out.zeta;
  if (w.empty()) return out;
  int local = rec.label - (rec.side == Side::zeta ? static_cast<int>(c.chi.size()) : 0);
  local = std::clamp(local, 0, static_cast<int>(w.size()) - 1);
  w.erase(w.begin() + local);
  return out;
}

Chromosome random_chromosome(const DcspInstance& inst, int length, DecisionSource& ds) {
  Chromosome out;
  out.chi.reserve(length);
  out.zeta.reserve(length);
  for (int k = 0; k < length; ++k) out.chi.push_back(draw_signed(inst.y_set, ds));
  for (int k = 0; k < length; ++k) out.zeta.push_back(draw_signed(inst.z_set, ds));
  return out;
}

namespace {

Member make_member(Chromosome child, const DcspInstance& inst, DecisionSource& ds) {
  Member m;
  m.chrom.chi = pseudo_normal_form(child.chi, inst.spec);
  m.chrom.zeta = pseudo_normal_form(child.zeta, inst.spec);
  Evaluation ev = evaluate(inst, m.chrom, ds);
  m.cost = ev.cost;
  m.rec = ev.rec;
  return m;
}

const Member& uniform_parent(const Population& pop, DecisionSource& ds) {
  return pop[ds.index(pop.size())];
}

}  // namespace

Population next_generation(const Population& pop, const DcspInstance& inst,
                           const ParameterSet& params, const GaConfig& config,
                           DecisionSource& ds) {
  Population next;
  next.reserve(params.population);

  for (int k = 0; k < params.crossovers(); ++k) {
    auto [p1, p2] = tournament_select(pop, ds);
    next.push_back(make_member(crossover(p1, p2, ds), inst, ds));
  }
  for (int k = 0; k < params.substitutions(); ++k) {
    const Member& parent = uniform_parent(pop, ds);
    next.push_back(make_member(
        mutate_substitute(inst, parent.chrom, parent.rec, ds, config.substitution), inst, ds));
  }
  for (int k = 0; k < params.deletions(); ++k) {
    const Member& parent = uniform_parent(pop, ds);
    next.push_back(make_member(mutate_delete(parent.chrom, parent.rec), inst, ds));
  }
  for (int k = 0; k < params.insertions(); ++k) {
    const Member& parent = uniform_parent(pop, ds);
    next.push_back(make_member(mutate_insert(inst, parent.chrom, parent.rec, ds), inst, ds));
  }
  if (params.selections() > 0) {
    for (Chromosome& ch : roulette_select(pop, params.selections(), ds)) {
      next.push_back(make_member(std::move(ch), inst, ds));
    }
  }
  for (int k = 0; k < params.randoms(); ++k) {
    next.push_back(make_member(random_chromosome(inst, config.initial_length, ds), inst, ds));
  }

  std::stable_sort(next.begin(), next.end(),
                   [](const Member& a, const Member& b) { return a.cost < b.cost; });
  return next;
}

RunResult run(const DcspInstance& inst, const ParameterSet& params,
              const GaConfig& config, const GenerationObserver& observer) {
  params.validate();
  config.validate();

  auto start = std::chrono::steady_clock::now();
  auto finish = [&](RunResult& r) {
    r.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  };

  RngDecisionSource ds(config.seed);
  Population pop;
  pop.reserve(params.population);
  for (int k = 0; k < params.population; ++k) {
    pop.push_back(make_member(random_chromosome(inst, config.initial_length, ds), inst, ds));
  }
  std::stable_sort(pop.begin(), pop.end(),
                   [](const Member& a, const Member& b) { return a.cost < b.cost; });

  RunResult result;
  for (int i = 0; i < config.sigma; ++i) {
    result.best_cost_trace.push_back(pop.front().cost);
    if (observer) observer(i, pop);
    if (pop.front().cost == 0) {
      result.outcome = RunResult::Outcome::solution;
      result.best = pop.front().chrom;
      result.best_cost = 0;
      result.generations = i;
      return finish(result);
    }
    pop = next_generation(pop, inst, params, config, ds);
  }

  result.outcome = RunResult::Outcome::timeout;
  result.best = pop.front().chrom;
  result.best_cost = pop.front().cost;
  result.generations = config.sigma;
  return finish(result);
}

}  // namespace dcsp
