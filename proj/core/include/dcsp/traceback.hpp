#pragma once

#include <vector>

#include "dcsp/decision.hpp"
#include "dcsp/instance.hpp"

namespace dcsp {

enum class Side { chi, zeta };
enum class Direction { left, right };

/// Maximal run of contiguous labeled letters of one side in the reduced
/// expression. Labels are the original positions in the product chi zeta.
struct Block {
  std::vector<int> labels;
  Side side = Side::chi;
  int begin = 0;  // span in the reduced expression, inclusive
  int end = 0;
};

/// Mutation hint: insert/substitute generator at the letter holding label
/// `label` on the given side, on the given side of that letter.
struct Recommendation {
  Letter generator = 0;
  int label = 0;
  Side side = Side::chi;
  Direction direction = Direction::right;
  bool fallback = false;
};

/// Partitions the labeled letters of ebar into maximal same-side runs of
/// consecutive positions, in left-to-right order. chi_len is the length of
/// the reduced chi; labels below it belong to chi.
std::vector<Block> compute_blocks(const LabeledWord& ebar, int chi_len);

/// Debug/trace payload filled by evaluate on request.
struct TracebackDetail {
  LabeledWord ebar;
  int chi_len = 0;
  std::vector<Block> blocks;
  Word delta;
  std::vector<Letter> candidates;  // boundary set already filtered by side
};

struct Evaluation {
  int cost = 0;
  Recommendation rec;
};

/// The traceback heuristic. Labels the pseudo-reduced chromosome inside
/// E = chi a zeta b^-1, reduces E, and derives a recommended generator and
/// position from the boundary of the gap next to a randomly chosen block.
///
/// Decision consumption order (for scripted sources):
///   per attempt: block = index(|B|), direction = index(2) (0 left, 1 right),
///   then candidate = index(#candidates) when the candidate set is non-empty.
///   After 2|B| failed attempts, or when B is empty, the fallback draws:
///   side = index(2), generator = index(2 * |side set|), position =
///   index(side length) when the side is non-empty, direction = index(2).
Evaluation evaluate(const DcspInstance& inst, const Chromosome& c,
                    DecisionSource& ds, TracebackDetail* detail = nullptr);

}  // namespace dcsp
