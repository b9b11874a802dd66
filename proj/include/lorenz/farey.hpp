#pragma once

// Symbolic Farey trees, Farey neighbours, Farey pairs and kneading
// admissibility.
//
// The L-maximal tree starts from {L0}; level n+1 adds LR^{n+1}0 on the right
// and, between consecutive words X < Y of level n, the word Y.X0. The
// R-minimal tree mirrors this from {R0}, adding RL^{n+1}0 on the left and
// X.Y0 between consecutive words.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lorenz/error.hpp"
#include "lorenz/words.hpp"

namespace lorenz {

enum class TreeSide { LMaximal, RMinimal };

inline constexpr std::size_t kMaxTreeDepth = 20;

struct TreeLevel {
  TreeSide side = TreeSide::LMaximal;
  std::size_t depth = 0;
  /// Strictly increasing in the lexicographic order; 2^depth entries.
  std::vector<FiniteWord> words;
};

inline TreeLevel tree_level(TreeSide side, std::size_t depth,
                            std::size_t max_depth = kMaxTreeDepth) {
  if (depth > max_depth)
    throw DomainError("tree depth " + std::to_string(depth) + " exceeds bound " +
                      std::to_string(max_depth));
  const bool minus = side == TreeSide::LMaximal;
  std::vector<FiniteWord> level{FiniteWord(minus ? "L" : "R")};
  for (std::size_t n = 0; n < depth; ++n) {
    std::vector<FiniteWord> next;
    next.reserve(level.size() * 2);
    std::string extreme(1, minus ? kLeft : kRight);
    extreme.append(n + 1, minus ? kRight : kLeft);
    if (!minus) next.emplace_back(extreme);
    for (std::size_t i = 0; i < level.size(); ++i) {
      next.push_back(level[i]);
      if (i + 1 == level.size()) break;
      const FiniteWord& lo = level[i];
      const FiniteWord& hi = level[i + 1];
      next.push_back(minus ? concat(hi, lo) : concat(lo, hi));
    }
    if (minus) next.emplace_back(extreme);
    level = std::move(next);
  }
  return {side, depth, std::move(level)};
}

/// Where a word enters the L-maximal tree: its level and the two words it
/// sits between at that level. `lower` is empty only for the root L0 and
/// `upper` is empty for the right-edge words LR^n0.
struct TreeLocation {
  std::size_t level = 0;
  std::optional<FiniteWord> lower;
  std::optional<FiniteWord> upper;
};

/// Binary descent through the L-maximal tree. Every child is longer than
/// both of its parents, so the descent stops once children outgrow w.
inline std::optional<TreeLocation> locate_in_l_maximal_tree(const FiniteWord& w) {
  const FiniteWord root("L");
  if (w == root) return TreeLocation{0, std::nullopt, std::nullopt};
  FiniteWord lo = root;
  std::optional<FiniteWord> hi;
  for (std::size_t level = 1;; ++level) {
    FiniteWord child = hi ? concat(*hi, lo) : FiniteWord(lo.letters() + kRight);
    if (child.size() > w.size()) return std::nullopt;
    const auto order = w <=> child;
    if (order == 0) return TreeLocation{level, lo, hi};
    if (order < 0)
      hi = std::move(child);
    else
      lo = std::move(child);
  }
}

inline bool in_l_maximal_tree(const FiniteWord& w) {
  return locate_in_l_maximal_tree(w).has_value();
}

/// n_L(a) n_R(b) - n_R(a) n_L(b).
inline long long neighbor_determinant(const FiniteWord& a, const FiniteWord& b) {
  const Counts ca = counts(a);
  const Counts cb = counts(b);
  return static_cast<long long>(ca.left * cb.right) - static_cast<long long>(ca.right * cb.left);
}

/// True iff a and b are consecutive at some level of the L-maximal tree.
/// A word is adjacent only to its two parents at the level where it
/// appears, and to younger words afterwards.
inline bool are_farey_neighbors(const FiniteWord& a, const FiniteWord& b) {
  if (!is_l_maximal(a) || !is_l_maximal(b))
    throw DomainError("Farey neighbours are defined for L-maximal words");
  if (a == b) throw DomainError("a word is not its own Farey neighbour");
  if (std::llabs(neighbor_determinant(a, b)) != 1) return false;
  const auto la = locate_in_l_maximal_tree(a);
  const auto lb = locate_in_l_maximal_tree(b);
  if (!la || !lb || la->level == lb->level) return false;
  const TreeLocation& young = la->level > lb->level ? *la : *lb;
  const FiniteWord& old = la->level > lb->level ? b : a;
  return young.lower == old || young.upper == old;
}

// ---------------------------------------------------------------------------
// Admissibility

namespace detail {

inline bool positions_admissible(const Word& z, bool z_is_x, const Word& x, const Word& y) {
  const std::string& letters = letters_of(z);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const bool left = letters[i] == kLeft;
    if (i == 0 && left == z_is_x) continue;  // self comparison
    const Word& bound = left ? x : y;
    const bool strict = !is_periodic(z) || !is_periodic(bound);
    const auto order = compare_streams(stream_of(z, i), stream_of(bound));
    if (left && !(strict ? order < 0 : order <= 0)) return false;
    if (!left && !(strict ? order > 0 : order >= 0)) return false;
  }
  return true;
}

}  // namespace detail

/// Kneading admissibility of (X, Y): every shift of X or Y at an L is at most
/// X, every shift at an R is at least Y, strictly when a finite word takes
/// part. A word is not compared strictly against itself at position 0.
/// Pairs with X not starting in L or Y not starting in R are inadmissible.
inline bool is_admissible(const Word& x, const Word& y) {
  const std::string& xs = letters_of(x);
  const std::string& ys = letters_of(y);
  if (xs.empty() || ys.empty() || xs.front() != kLeft || ys.front() != kRight) return false;
  return detail::positions_admissible(x, true, x, y) && detail::positions_admissible(y, false, x, y);
}

// ---------------------------------------------------------------------------
// Farey pairs

class FareyPair {
 public:
  const FiniteWord& x() const noexcept { return x_; }
  const FiniteWord& y() const noexcept { return y_; }
  /// The L-maximal neighbour below X whose R-minimal version is Y.
  const FiniteWord& s_parent() const noexcept { return s_parent_; }

  friend bool operator==(const FareyPair&, const FareyPair&) = default;
  friend FareyPair make_farey_pair(const FiniteWord& x, const FiniteWord& s_parent);

 private:
  FareyPair(FiniteWord x, FiniteWord y, FiniteWord s)
      : x_(std::move(x)), y_(std::move(y)), s_parent_(std::move(s)) {}

  FiniteWord x_;
  FiniteWord y_;
  FiniteWord s_parent_;
};

/// Builds (X, m(S)) from Farey neighbours S < X of the L-maximal tree.
inline FareyPair make_farey_pair(const FiniteWord& x, const FiniteWord& s_parent) {
  if (!is_l_maximal(x)) throw DomainError(x.to_string() + " is not L-maximal");
  if (!is_l_maximal(s_parent)) throw DomainError(s_parent.to_string() + " is not L-maximal");
  if (counts(s_parent).right == 0)
    throw DomainError("R-minimal version undefined: " + s_parent.to_string() + " contains no R");
  if (!(s_parent < x))
    throw DomainError("Farey pair needs " + s_parent.to_string() + " < " + x.to_string());
  if (!in_l_maximal_tree(x)) throw DomainError(x.to_string() + " is not in the L-maximal tree");
  if (!in_l_maximal_tree(s_parent))
    throw DomainError(s_parent.to_string() + " is not in the L-maximal tree");
  if (!are_farey_neighbors(x, s_parent))
    throw DomainError(x.to_string() + " and " + s_parent.to_string() + " are not Farey neighbours");
  FiniteWord y = r_minimal_rotation(s_parent);
  if (!is_admissible(x, y))
    throw std::logic_error("Farey pair (" + x.to_string() + ", " + y.to_string() +
                           ") failed admissibility");
  return FareyPair(x, std::move(y), s_parent);
}

/// Recovers the pair from (X, Y) by taking S as the L-maximal form of Y's
/// cyclic class.
inline FareyPair farey_pair_from_words(const FiniteWord& x, const FiniteWord& y) {
  if (!is_r_minimal(y)) throw DomainError(y.to_string() + " is not R-minimal");
  if (counts(y).left == 0) throw DomainError(y.to_string() + " has no L-maximal form");
  FareyPair pair = make_farey_pair(x, canonical_l_maximal(Word(y)));
  if (pair.y() != y)
    throw DomainError(y.to_string() + " is not the R-minimal version of a neighbour of " +
                      x.to_string());
  return pair;
}

// ---------------------------------------------------------------------------
// Comparisons against reference tables

enum class EntryStatus { Match, SameClassDifferentRepresentative, Mismatch };

inline std::string_view to_string(EntryStatus s) {
  switch (s) {
    case EntryStatus::Match: return "match";
    case EntryStatus::SameClassDifferentRepresentative: return "same-class-different-representative";
    case EntryStatus::Mismatch: return "mismatch";
  }
  return "mismatch";
}

struct EntryComparison {
  std::size_t index = 0;
  std::string generated;
  std::string reference;
  EntryStatus status = EntryStatus::Mismatch;
};

struct LevelComparison {
  std::vector<EntryComparison> entries;

  bool all_match() const {
    for (const auto& e : entries)
      if (e.status != EntryStatus::Match) return false;
    return true;
  }
  std::vector<EntryComparison> flagged() const {
    std::vector<EntryComparison> out;
    for (const auto& e : entries)
      if (e.status != EntryStatus::Match) out.push_back(e);
    return out;
  }
};

namespace detail {

inline EntryStatus classify_entry(const std::string& generated, const std::string& reference) {
  if (generated == reference) return EntryStatus::Match;
  const auto strip = [](const std::string& s) {
    return !s.empty() && s.back() == kTerminal ? s.substr(0, s.size() - 1) : s;
  };
  const std::string a = strip(generated);
  const std::string b = strip(reference);
  if (!a.empty() && !b.empty() && same_cyclic_class(a, b))
    return EntryStatus::SameClassDifferentRepresentative;
  return EntryStatus::Mismatch;
}

}  // namespace detail

/// Position-by-position comparison of a level against words written in the
/// `[LR]+0` grammar. Missing or extra entries count as mismatches.
inline LevelComparison compare_level(const TreeLevel& level, const std::vector<std::string>& reference) {
  LevelComparison out;
  const std::size_t n = std::max(level.words.size(), reference.size());
  for (std::size_t i = 0; i < n; ++i) {
    EntryComparison e;
    e.index = i;
    if (i < level.words.size()) e.generated = level.words[i].to_string();
    if (i < reference.size()) e.reference = reference[i];
    e.status = (i < level.words.size() && i < reference.size())
                   ? detail::classify_entry(e.generated, e.reference)
                   : EntryStatus::Mismatch;
    out.entries.push_back(std::move(e));
  }
  return out;
}

/// Compares the R-minimal tree at `depth`, root excluded, against the
/// R-minimal versions of the L-maximal tree at the same positions.
inline LevelComparison cross_check_r_minimal_tree(std::size_t depth,
                                                  std::size_t max_depth = kMaxTreeDepth) {
  const TreeLevel minus = tree_level(TreeSide::LMaximal, depth, max_depth);
  const TreeLevel plus = tree_level(TreeSide::RMinimal, depth, max_depth);
  // L0 is the first L-maximal word, R0 the last R-minimal one.
  TreeLevel plus_tail{TreeSide::RMinimal, depth, {plus.words.begin(), plus.words.end() - 1}};
  std::vector<std::string> expected;
  for (std::size_t i = 1; i < minus.words.size(); ++i)
    expected.push_back(r_minimal_rotation(minus.words[i]).to_string());
  return compare_level(plus_tail, expected);
}

}  // namespace lorenz
