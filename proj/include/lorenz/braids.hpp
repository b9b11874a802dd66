#pragma once

// Lorenz braids read off symbolic orbits, and the invariants used to match
// them against torus knots.
//
// All shifts of the orbit words are sorted lexicographically; the i-th
// smallest shift is start/end point i. The strand at the point of s^k(W)
// ends at the point of s^{k+1}(W). Points of L-words come first.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lorenz/error.hpp"
#include "lorenz/words.hpp"

namespace lorenz {

class LorenzBraid {
 public:
  /// One-line notation, 1-based: strand starting at i ends at perm()[i-1].
  const std::vector<int>& perm() const noexcept { return perm_; }
  std::size_t strands() const noexcept { return perm_.size(); }
  /// Number of start points carrying words that begin with L.
  std::size_t left_strands() const noexcept { return left_strands_; }
  const std::vector<PeriodicWord>& source_words() const noexcept { return source_; }

  friend LorenzBraid lorenz_braid(std::vector<PeriodicWord> words);

 private:
  std::vector<int> perm_;
  std::size_t left_strands_ = 0;
  std::vector<PeriodicWord> source_;
};

inline LorenzBraid lorenz_braid(std::vector<PeriodicWord> words) {
  if (words.empty()) throw DomainError("a Lorenz braid needs at least one orbit");
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      if (same_cyclic_class(words[i].block(), words[j].block()))
        throw DomainError("orbit " + words[i].to_string() + " listed twice");

  struct Point {
    std::size_t word;
    std::size_t shift;
  };
  std::vector<Point> points;
  for (std::size_t w = 0; w < words.size(); ++w)
    for (std::size_t k = 0; k < words[w].period(); ++k) points.push_back({w, k});

  const auto stream = [&](const Point& pt) {
    return detail::SymbolStream{words[pt.word].block(), pt.shift, true};
  };
  std::sort(points.begin(), points.end(), [&](const Point& a, const Point& b) {
    return detail::compare_streams(stream(a), stream(b)) < 0;
  });
  for (std::size_t i = 1; i < points.size(); ++i)
    if (detail::compare_streams(stream(points[i - 1]), stream(points[i])) == 0)
      throw std::logic_error("two orbit points share an itinerary");

  // position_of[w][k] = 1-based point of s^k(word w)
  std::vector<std::vector<int>> position_of(words.size());
  for (std::size_t w = 0; w < words.size(); ++w) position_of[w].resize(words[w].period());
  for (std::size_t i = 0; i < points.size(); ++i)
    position_of[points[i].word][points[i].shift] = static_cast<int>(i + 1);

  LorenzBraid b;
  b.perm_.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point& pt = points[i];
    const std::size_t next = (pt.shift + 1) % words[pt.word].period();
    b.perm_[i] = position_of[pt.word][next];
    if (words[pt.word].symbol(pt.shift) == kLeft) ++b.left_strands_;
  }
  std::sort(words.begin(), words.end());
  b.source_ = std::move(words);
  return b;
}

inline LorenzBraid lorenz_braid(const PeriodicWord& w) { return lorenz_braid(std::vector{w}); }

/// Finite words are read as their cyclic class.
inline LorenzBraid lorenz_braid(const Word& w) { return lorenz_braid(PeriodicWord(letters_of(w))); }

/// Inversions of the permutation; each pair of strands of a simple positive
/// braid crosses at most once.
inline std::size_t crossing_count(const LorenzBraid& b) {
  const auto& p = b.perm();
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions;
}

inline std::size_t cycle_count(const LorenzBraid& b) {
  const auto& p = b.perm();
  std::vector<bool> seen(p.size(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j] - 1)) seen[j] = true;
  }
  return cycles;
}

/// Braid index of a Lorenz knot, equal to its trip number.
inline std::size_t braid_index(const PeriodicWord& w) { return trip_number(w); }

/// Genus of the closure of a one-component positive braid: (c - n + 1) / 2.
inline std::size_t positive_braid_genus(const LorenzBraid& b) {
  if (cycle_count(b) != 1)
    throw DomainError("genus is only computed for one-component closures");
  const std::size_t twice = crossing_count(b) + 1 - b.strands();
  if (twice % 2 != 0) throw std::logic_error("positive braid genus is not integral");
  return twice / 2;
}

/// Torus knots T(p,q') with p < q' <= q_bound, gcd 1, braid index p and
/// genus (p-1)(q'-1)/2 equal to the given values.
inline std::vector<TorusType> torus_matches(int braid_index, long long genus, int q_bound) {
  std::vector<TorusType> out;
  if (braid_index < 1 || genus < 0) return out;
  for (int q = braid_index + 1; q <= q_bound; ++q) {
    if (std::gcd(braid_index, q) != 1) continue;
    if (static_cast<long long>(braid_index - 1) * (q - 1) == 2 * genus)
      out.push_back({braid_index, q});
  }
  return out;
}

/// A positive word in Artin generators sigma_1..sigma_{n-1} realising the
/// permutation with each strand pair crossing at most once. Destinations are
/// filled left to right: the strand bound for point d is carried leftwards
/// from its current position to d, one crossing at a time.
inline std::vector<int> emit_braid_word(const LorenzBraid& b) {
  const auto& p = b.perm();
  // arrangement[pos] = destination of the strand currently at pos
  std::vector<int> arrangement(p.begin(), p.end());
  std::vector<int> word;
  for (std::size_t d = 0; d < arrangement.size(); ++d) {
    auto at = static_cast<std::size_t>(
        std::find(arrangement.begin() + static_cast<std::ptrdiff_t>(d), arrangement.end(),
                  static_cast<int>(d + 1)) -
        arrangement.begin());
    for (; at > d; --at) {
      std::swap(arrangement[at - 1], arrangement[at]);
      word.push_back(static_cast<int>(at));  // sigma_at swaps positions at, at+1 (1-based)
    }
  }
  return word;
}

/// `[4,5,1,2,3]`
inline std::string format_permutation(const std::vector<int>& perm) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < perm.size(); ++i) os << (i ? "," : "") << perm[i];
  os << ']';
  return os.str();
}

/// Space-separated positive generator indices.
inline std::string format_artin_word(const std::vector<int>& word) {
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) os << (i ? " " : "") << word[i];
  return os.str();
}

}  // namespace lorenz
