#include "dcsp/word.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace dcsp {

namespace {

int index_of(Letter v) { return v < 0 ? -v : v; }

// Cancellation core. Letters are appended one at a time; each new letter
// scans backwards for its inverse, stopping at the first non-commuting
// letter. The buffer never holds a cancellable pair, so the result is
// geodesic. Produces the same surviving word as the leftmost-first pair
// scan (cross-checked against the naive reducer in the test suite).
LabeledWord cancel_core(const LabeledWord& u, const GroupSpec& spec) {
  LabeledWord buf;
  buf.reserve(u.size());
  for (const LabeledLetter& x : u) {
    int i = index_of(x.letter);
    bool cancelled = false;
    for (int k = static_cast<int>(buf.size()) - 1; k >= 0; --k) {
      if (buf[k].letter == -x.letter) {
        buf.erase(buf.begin() + k);
        cancelled = true;
        break;
      }
      if (!spec.commutes(index_of(buf[k].letter), i)) break;
    }
    if (!cancelled) buf.push_back(x);
  }
  return buf;
}

// Greedy-minimal linearization of a cancelled word: repeatedly emit, among
// letters whose non-commuting predecessors are all emitted, the least one
// under letter_order_key. Two letters of equal index never compete (they
// constrain each other), so the key alone is a total tie-free priority.
LabeledWord linearize_min(const LabeledWord& w, const GroupSpec& spec) {
  const int n = static_cast<int>(w.size());
  if (n <= 1) return w;

  // Each letter depends on the latest earlier letter of index i-1, i, i+1;
  // transitivity through equal-index chains covers all older conflicts.
  std::vector<std::vector<int>> succ(n);
  std::vector<int> indeg(n, 0);
  std::vector<int> last(spec.rank + 2, -1);
  for (int t = 0; t < n; ++t) {
    int i = index_of(w[t].letter);
    for (int j = i - 1; j <= i + 1; ++j) {
      if (j >= 1 && j <= spec.rank && last[j] >= 0) {
        succ[last[j]].push_back(t);
        ++indeg[t];
      }
    }
    last[i] = t;
  }

  using Entry = std::pair<int, int>;  // (order key, position)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (int t = 0; t < n; ++t) {
    if (indeg[t] == 0) ready.emplace(letter_order_key(w[t].letter), t);
  }

  LabeledWord out;
  out.reserve(n);
  while (!ready.empty()) {
    int t = ready.top().second;
    ready.pop();
    out.push_back(w[t]);
    for (int s : succ[t]) {
      if (--indeg[s] == 0) ready.emplace(letter_order_key(w[s].letter), s);
    }
  }
  return out;
}

}  // namespace

bool is_valid_word(const Word& u, const GroupSpec& spec) {
  for (Letter v : u) {
    if (v == 0 || index_of(v) > spec.rank) return false;
  }
  return true;
}

void check_word(const Word& u, const GroupSpec& spec) {
  if (!spec.valid()) throw std::invalid_argument("group rank must be >= 2");
  for (Letter v : u) {
    if (v == 0) throw std::invalid_argument("word letter must be nonzero");
    if (index_of(v) > spec.rank) {
      throw std::invalid_argument("letter index " + std::to_string(index_of(v)) +
                                  " exceeds rank " + std::to_string(spec.rank));
    }
  }
}

Word invert(const Word& u) {
  Word r(u.rbegin(), u.rend());
  for (Letter& v : r) v = -v;
  return r;
}

LabeledWord cancel_geodesic(const LabeledWord& u, const GroupSpec& spec) {
  return cancel_core(u, spec);
}

Word cancel_geodesic(const Word& u, const GroupSpec& spec) {
  return strip_labels(cancel_core(attach_unlabeled(u), spec));
}

Word pseudo_normal_form(const Word& u, const GroupSpec& spec) {
  return cancel_geodesic(u, spec);
}

Word normal_form(const Word& u, const GroupSpec& spec) {
  return strip_labels(labeled_normal_form(attach_unlabeled(u), spec));
}

LabeledWord labeled_normal_form(const LabeledWord& e, const GroupSpec& spec) {
  return linearize_min(cancel_core(e, spec), spec);
}

LabeledWord attach_labels(const Word& u, int first_label) {
  LabeledWord out;
  out.reserve(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) {
    out.push_back({u[k], first_label + static_cast<int>(k)});
  }
  return out;
}

LabeledWord attach_unlabeled(const Word& u) {
  LabeledWord out;
  out.reserve(u.size());
  for (Letter v : u) out.push_back({v, -1});
  return out;
}

Word strip_labels(const LabeledWord& e) {
  Word out;
  out.reserve(e.size());
  for (const LabeledLetter& x : e) out.push_back(x.letter);
  return out;
}

namespace {

std::vector<Letter> boundary_set(const Word& u, const GroupSpec& spec, bool right) {
  Word nu = normal_form(u, spec);
  const auto base = nu.size();
  std::vector<Letter> out;
  if (base == 0) return out;
  for (int i = 1; i <= spec.rank; ++i) {
    for (Letter g : {i, -i}) {
      Word trial = nu;
      if (right) {
        trial.push_back(-g);
      } else {
        trial.insert(trial.begin(), -g);
      }
      if (cancel_geodesic(trial, spec).size() == base - 1) out.push_back(g);
    }
  }
  std::sort(out.begin(), out.end(),
            [](Letter a, Letter b) { return letter_order_key(a) < letter_order_key(b); });
  return out;
}

}  // namespace

std::vector<Letter> roof_of(const Word& u, const GroupSpec& spec) {
  return boundary_set(u, spec, /*right=*/true);
}

std::vector<Letter> floor_of(const Word& u, const GroupSpec& spec) {
  return boundary_set(u, spec, /*right=*/false);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
  // Rejection sampling on the top of the range keeps the draw exactly uniform.
  std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

Word random_word(int target_length, const std::vector<int>& alphabet,
                 const GroupSpec& spec, std::mt19937_64& rng) {
  if (target_length < 0) throw std::invalid_argument("random_word: negative length");
  if (target_length > 0 && alphabet.empty()) {
    throw std::invalid_argument("random_word: empty alphabet");
  }
  Word u;
  Word reduced;
  while (static_cast<int>(reduced.size()) < target_length) {
    int deficit = target_length - static_cast<int>(reduced.size());
    for (int k = 0; k < deficit; ++k) {
      auto pick = uniform_below(rng, 2 * alphabet.size());
      int idx = alphabet[pick / 2];
      u.push_back(pick % 2 ? -idx : idx);
    }
    reduced = cancel_geodesic(u, spec);
  }
  return reduced;
}

Word parse_word(const std::string& text, const GroupSpec& spec) {
  Word out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    int v;
    try {
      std::size_t pos = 0;
      v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad word letter '" + tok + "'");
    }
    if (v == 0) throw std::invalid_argument("word letter must be nonzero");
    if (index_of(v) > spec.rank) {
      throw std::invalid_argument("letter index " + std::to_string(index_of(v)) +
                                  " exceeds rank " + std::to_string(spec.rank));
    }
    out.push_back(v);
  }
  return out;
}

std::string format_word(const Word& u) {
  std::string out;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(u[k]);
  }
  return out;
}

}  // namespace dcsp
