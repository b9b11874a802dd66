#pragma once

// Seeded random draws of Farey pairs and words for property sweeps.

#include <cstddef>
#include <optional>
#include <random>
#include <string>

#include "lorenz/farey.hpp"
#include "lorenz/words.hpp"

namespace lorenz {

/// A Farey pair reached by a random walk of 1..max_depth steps down the
/// L-maximal tree; X and S_parent are the new word and one of its parents.
template <typename Rng>
FareyPair random_farey_pair(Rng& rng, std::size_t max_depth) {
  std::uniform_int_distribution<std::size_t> depth_dist(1, max_depth);
  std::bernoulli_distribution coin;
  for (;;) {
    FiniteWord lo("L");
    std::optional<FiniteWord> hi;
    const std::size_t depth = depth_dist(rng);
    FiniteWord child = lo;
    for (std::size_t level = 1; level <= depth; ++level) {
      child = hi ? concat(*hi, lo) : FiniteWord(lo.letters() + kRight);
      if (level == depth) break;
      if (coin(rng))
        hi = child;
      else
        lo = child;
    }
    // child sits between lo and hi; either adjacency is a neighbour pair.
    const bool upper = hi.has_value() && coin(rng);
    const FiniteWord& x = upper ? *hi : child;
    const FiniteWord& s = upper ? child : lo;
    if (counts(s).right == 0) continue;
    return make_farey_pair(x, s);
  }
}

/// Uniform word over {L, R} with length in [min_len, max_len].
template <typename Rng>
FiniteWord random_word(Rng& rng, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
  std::bernoulli_distribution coin;
  std::string letters(len_dist(rng), kLeft);
  for (char& c : letters) c = coin(rng) ? kRight : kLeft;
  return FiniteWord(std::move(letters));
}

}  // namespace lorenz
