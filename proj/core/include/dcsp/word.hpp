#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace dcsp {

/// The ambient group: generators x_1..x_rank, where x_i and x_j commute
/// exactly when their indices differ by at least two.
struct GroupSpec {
  int rank = 2;

  bool commutes(int i, int j) const {
    int d = i - j;
    return d >= 2 || d <= -2;
  }

  bool valid() const { return rank >= 2; }
};

/// A letter is a nonzero integer: magnitude = generator index, sign = exponent.
using Letter = int;

/// A word is a finite (possibly empty) sequence of letters.
using Word = std::vector<Letter>;

/// A letter carrying an optional label; label < 0 means unlabeled.
struct LabeledLetter {
  Letter letter = 0;
  int label = -1;

  bool operator==(const LabeledLetter&) const = default;
};

using LabeledWord = std::vector<LabeledLetter>;

/// Ordering key under x_1 < x_1^-1 < x_2 < x_2^-1 < ... (index first,
/// positive exponent before negative).
inline int letter_order_key(Letter v) {
  int i = v < 0 ? -v : v;
  return 2 * i + (v < 0 ? 1 : 0);
}

bool is_valid_word(const Word& u, const GroupSpec& spec);
void check_word(const Word& u, const GroupSpec& spec);

/// Group inverse: reverse the word and flip every exponent.
Word invert(const Word& u);

/// Deletes every cancelling pair x_i^a ... x_i^-a whose in-between letters all
/// commute with x_i, without reordering the survivors. The result is geodesic.
Word cancel_geodesic(const Word& u, const GroupSpec& spec);
LabeledWord cancel_geodesic(const LabeledWord& u, const GroupSpec& spec);

/// Pseudo-normal form: cancellation only, original letter order kept.
Word pseudo_normal_form(const Word& u, const GroupSpec& spec);

/// The unique canonical geodesic: cancellation followed by the greedy-minimal
/// linearization of the surviving letters under letter_order_key.
Word normal_form(const Word& u, const GroupSpec& spec);

/// normal_form with labels travelling along; cancelled letters drop theirs.
LabeledWord labeled_normal_form(const LabeledWord& e, const GroupSpec& spec);

LabeledWord attach_labels(const Word& u, int first_label);
LabeledWord attach_unlabeled(const Word& u);
Word strip_labels(const LabeledWord& e);

/// Roof RF(u): signed generators whose inverse, appended on the right,
/// shortens the normal form by one. Floor FL(u) is the left-hand analogue.
/// Results are sorted by letter_order_key.
std::vector<Letter> roof_of(const Word& u, const GroupSpec& spec);
std::vector<Letter> floor_of(const Word& u, const GroupSpec& spec);

/// Uniform value in [0, bound); bound must be positive.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Simple random walk over the alphabet, topped up with fresh random segments
/// until the reduced length equals target_length exactly. The returned word
/// may be unreduced.
Word random_word(int target_length, const std::vector<int>& alphabet,
                 const GroupSpec& spec, std::mt19937_64& rng);

/// Word text format: space-separated nonzero decimal integers, "" = empty word.
Word parse_word(const std::string& text, const GroupSpec& spec);
std::string format_word(const Word& u);

}  // namespace dcsp
