#include "dcsp/traceback.hpp"

namespace dcsp {

std::vector<Block> compute_blocks(const LabeledWord& ebar, int chi_len) {
  std::vector<Block> blocks;
  for (int p = 0; p < static_cast<int>(ebar.size()); ++p) {
    int label = ebar[p].label;
    if (label < 0) continue;
    Side side = label < chi_len ? Side::chi : Side::zeta;
    if (!blocks.empty() && blocks.back().end == p - 1 && blocks.back().side == side) {
      blocks.back().labels.push_back(label);
      blocks.back().end = p;
    } else {
      blocks.push_back(Block{{label}, side, p, p});
    }
  }
  return blocks;
}

namespace {

Letter draw_signed(const GeneratorSubset& set, DecisionSource& ds) {
  std::size_t pick = ds.index(2 * set.size());
  int idx = set.indices[pick / 2];
  return pick % 2 ? -idx : idx;
}

}  // namespace

Evaluation evaluate(const DcspInstance& inst, const Chromosome& c,
                    DecisionSource& ds, TracebackDetail* detail) {
  const GroupSpec& spec = inst.spec;
  Word chi = pseudo_normal_form(c.chi, spec);
  Word zeta = pseudo_normal_form(c.zeta, spec);
  const int chi_len = static_cast<int>(chi.size());

  LabeledWord e = attach_labels(chi, 0);
  {
    LabeledWord tail = attach_unlabeled(inst.a);
    e.insert(e.end(), tail.begin(), tail.end());
    tail = attach_labels(zeta, chi_len);
    e.insert(e.end(), tail.begin(), tail.end());
    tail = attach_unlabeled(invert(inst.b));
    e.insert(e.end(), tail.begin(), tail.end());
  }

  LabeledWord ebar = labeled_normal_form(e, spec);
  const int cost_value = static_cast<int>(ebar.size());
  std::vector<Block> blocks = compute_blocks(ebar, chi_len);

  if (detail) {
    detail->ebar = ebar;
    detail->chi_len = chi_len;
    detail->blocks = blocks;
    detail->delta.clear();
    detail->candidates.clear();
  }

  auto fallback = [&]() -> Recommendation {
    Side side = ds.index(2) == 0 ? Side::chi : Side::zeta;
    const GeneratorSubset& set = side == Side::chi ? inst.y_set : inst.z_set;
    Letter g = draw_signed(set, ds);
    const Word& w = side == Side::chi ? chi : zeta;
    int base = side == Side::chi ? 0 : chi_len;
    int label = base + (w.empty() ? 0 : static_cast<int>(ds.index(w.size())));
    Direction dir = ds.index(2) == 0 ? Direction::left : Direction::right;
    return Recommendation{g, label, side, dir, true};
  };

  if (blocks.empty()) return Evaluation{cost_value, fallback()};

  const std::size_t attempts = 2 * blocks.size();
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    std::size_t bi = ds.index(blocks.size());
    const Block& block = blocks[bi];
    Direction dir = ds.index(2) == 0 ? Direction::left : Direction::right;
    int q = dir == Direction::right ? block.labels.back() : block.labels.front();

    // The gap between the chosen block and its neighbour (or the extremity).
    std::size_t lo, hi;
    if (dir == Direction::right) {
      lo = static_cast<std::size_t>(block.end) + 1;
      hi = bi + 1 < blocks.size() ? static_cast<std::size_t>(blocks[bi + 1].begin)
                                  : ebar.size();
    } else {
      hi = static_cast<std::size_t>(block.begin);
      lo = bi > 0 ? static_cast<std::size_t>(blocks[bi - 1].end) + 1 : 0;
    }
    Word delta;
    delta.reserve(hi - lo);
    for (std::size_t p = lo; p < hi; ++p) delta.push_back(ebar[p].letter);

    const GeneratorSubset& side_set = block.side == Side::chi ? inst.y_set : inst.z_set;
    std::vector<Letter> boundary =
        dir == Direction::right ? floor_of(delta, spec) : roof_of(delta, spec);
    std::vector<Letter> candidates;
    for (Letter h : boundary) {
      if (side_set.contains(h < 0 ? -h : h)) candidates.push_back(h);
    }

    if (detail) {
      detail->delta = delta;
      detail->candidates = candidates;
    }
    if (!candidates.empty()) {
      Letter h = candidates[ds.index(candidates.size())];
      return Evaluation{cost_value, Recommendation{-h, q, block.side, dir, false}};
    }
  }
  return Evaluation{cost_value, fallback()};
}

}  // namespace dcsp
