#pragma once

// Words over the itinerary alphabet {L, 0, R} of a Lorenz map.
//
// A FiniteWord holds its L/R letters; the terminal 0 is implicit and is never
// stored. A PeriodicWord holds a primitive block B standing for B^infinity.
// Both kinds live together in `Word` and share one total order induced by
// L < 0 < R.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lorenz/error.hpp"

namespace lorenz {

inline constexpr char kLeft = 'L';
inline constexpr char kRight = 'R';
inline constexpr char kTerminal = '0';

/// Rank of a symbol in the order L < 0 < R.
constexpr int symbol_rank(char c) noexcept {
  return c == kLeft ? 0 : (c == kTerminal ? 1 : 2);
}

constexpr char exchange_letter(char c) noexcept {
  return c == kLeft ? kRight : kLeft;
}

namespace detail {

inline void require_letters(std::string_view letters, std::string_view what) {
  for (char c : letters) {
    if (c != kLeft && c != kRight) {
      throw ParseError(std::string(what) + ": unexpected symbol '" +
                       std::string(1, c) + "' (only L and R allowed)");
    }
  }
}

/// Shortest block whose repetition is `s`.
inline std::string_view primitive_root(std::string_view s) {
  const std::size_t n = s.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = s[i] == s[i - d];
    if (periodic) return s.substr(0, d);
  }
  return s;
}

/// Compares rotations starting at i and j of the cyclic string s, letter by
/// letter over one period. 'L' < 'R' in both ASCII and the itinerary order.
inline std::strong_ordering compare_rotations(std::string_view s, std::size_t i,
                                              std::size_t j) {
  const std::size_t n = s.size();
  for (std::size_t t = 0; t < n; ++t) {
    const char a = s[(i + t) % n];
    const char b = s[(j + t) % n];
    if (a != b) return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

inline std::string rotate(std::string_view s, std::size_t k) {
  if (s.empty()) return {};
  k %= s.size();
  std::string out;
  out.reserve(s.size());
  out.append(s.substr(k));
  out.append(s.substr(0, k));
  return out;
}

}  // namespace detail

class FiniteWord {
 public:
  /// Letters without the terminal 0. Throws ParseError on an empty or
  /// non-L/R sequence.
  explicit FiniteWord(std::string letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw ParseError("finite word needs at least one letter");
    detail::require_letters(letters_, "finite word");
  }

  /// The bare terminal word "0", reached by shifting a finite word |X| times.
  static FiniteWord terminal_only() { return FiniteWord(); }

  const std::string& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  /// Symbol at position i, with the terminal 0 at i == size().
  char symbol(std::size_t i) const { return i < letters_.size() ? letters_[i] : kTerminal; }

  std::string to_string() const { return letters_ + kTerminal; }

  friend bool operator==(const FiniteWord&, const FiniteWord&) = default;
  friend std::strong_ordering operator<=>(const FiniteWord& a, const FiniteWord& b);

 private:
  FiniteWord() = default;
  std::string letters_;
};

class PeriodicWord {
 public:
  /// Block of B^infinity; a non-primitive block is reduced to its root.
  explicit PeriodicWord(std::string_view block) {
    if (block.empty()) throw ParseError("periodic word needs a non-empty block");
    detail::require_letters(block, "periodic word");
    block_ = std::string(detail::primitive_root(block));
  }

  const std::string& block() const noexcept { return block_; }
  std::size_t period() const noexcept { return block_.size(); }
  char symbol(std::size_t i) const { return block_[i % block_.size()]; }

  std::string to_string() const { return "(" + block_ + ")"; }

  friend bool operator==(const PeriodicWord&, const PeriodicWord&) = default;
  friend std::strong_ordering operator<=>(const PeriodicWord& a, const PeriodicWord& b);

 private:
  std::string block_;
};

using Word = std::variant<FiniteWord, PeriodicWord>;

inline bool is_periodic(const Word& w) noexcept {
  return std::holds_alternative<PeriodicWord>(w);
}

/// Letters of a finite word, or the block of a periodic one.
inline const std::string& letters_of(const Word& w) {
  return std::visit(
      [](const auto& v) -> const std::string& {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, FiniteWord>)
          return v.letters();
        else
          return v.block();
      },
      w);
}

inline std::string to_string(const Word& w) {
  return std::visit([](const auto& v) { return v.to_string(); }, w);
}

inline std::ostream& operator<<(std::ostream& os, const FiniteWord& w) {
  return os << w.to_string();
}
inline std::ostream& operator<<(std::ostream& os, const PeriodicWord& w) {
  return os << w.to_string();
}

// ---------------------------------------------------------------------------
// Parsing

struct ParsedWord {
  Word word;
  /// Set when a periodic block was given as a proper power and got reduced.
  bool reduced = false;
};

/// Grammar: `[LR]+0` for finite words, `([LR]+)` for periodic words.
inline ParsedWord parse_word(std::string_view text) {
  if (text.empty()) throw ParseError("empty word");
  if (text.front() == '(') {
    if (text.size() < 3 || text.back() != ')')
      throw ParseError("periodic word must look like (LR...)");
    const std::string_view body = text.substr(1, text.size() - 2);
    detail::require_letters(body, "periodic word");
    const bool reduced = detail::primitive_root(body).size() != body.size();
    return {PeriodicWord(body), reduced};
  }
  const auto zero = text.find(kTerminal);
  if (zero == std::string_view::npos)
    throw ParseError("finite word must end with the terminal symbol 0");
  if (zero + 1 != text.size())
    throw ParseError("symbols after the terminal 0 in '" + std::string(text) + "'");
  if (zero == 0) throw ParseError("finite word needs at least one letter before 0");
  const std::string_view body = text.substr(0, zero);
  detail::require_letters(body, "finite word");
  return {FiniteWord(std::string(body)), false};
}

// ---------------------------------------------------------------------------
// Order

namespace detail {

/// A word viewed from a shift offset, as a stream of symbols.
struct SymbolStream {
  std::string_view letters;
  std::size_t offset = 0;
  bool periodic = false;

  char at(std::size_t i) const {
    if (periodic) return letters[(offset + i) % letters.size()];
    const std::size_t idx = offset + i;
    return idx < letters.size() ? letters[idx] : kTerminal;
  }
  /// Number of symbols that can decide a comparison.
  std::size_t horizon() const {
    return periodic ? letters.size() : letters.size() - offset + 1;
  }
};

inline SymbolStream stream_of(const Word& w, std::size_t offset = 0) {
  return {letters_of(w), offset, is_periodic(w)};
}
inline SymbolStream stream_of(const FiniteWord& w, std::size_t offset = 0) {
  return {w.letters(), offset, false};
}

inline std::strong_ordering compare_streams(const SymbolStream& a, const SymbolStream& b) {
  // Two periodic streams agreeing on p_a + p_b symbols are identical.
  std::size_t limit;
  if (a.periodic && b.periodic)
    limit = a.horizon() + b.horizon();
  else if (a.periodic)
    limit = b.horizon();
  else if (b.periodic)
    limit = a.horizon();
  else
    limit = std::min(a.horizon(), b.horizon());
  for (std::size_t i = 0; i < limit; ++i) {
    const char x = a.at(i);
    const char y = b.at(i);
    if (x != y) return symbol_rank(x) <=> symbol_rank(y);
    if (x == kTerminal) return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

}  // namespace detail

inline std::strong_ordering lex_compare(const Word& a, const Word& b) {
  return detail::compare_streams(detail::stream_of(a), detail::stream_of(b));
}

inline std::strong_ordering operator<=>(const FiniteWord& a, const FiniteWord& b) {
  return detail::compare_streams(detail::stream_of(a), detail::stream_of(b));
}

inline std::strong_ordering operator<=>(const PeriodicWord& a, const PeriodicWord& b) {
  return detail::compare_streams({a.block(), 0, true}, {b.block(), 0, true});
}

// ---------------------------------------------------------------------------
// Shift, counts, mirror

inline FiniteWord shift(const FiniteWord& w, std::size_t k) {
  if (k > w.size())
    throw DomainError("cannot shift " + w.to_string() + " by " + std::to_string(k));
  if (k == w.size()) return FiniteWord::terminal_only();
  return FiniteWord(w.letters().substr(k));
}

inline PeriodicWord shift(const PeriodicWord& w, std::size_t k) {
  return PeriodicWord(detail::rotate(w.block(), k));
}

inline Word shift(const Word& w, std::size_t k) {
  return std::visit([k](const auto& v) -> Word { return shift(v, k); }, w);
}

struct Counts {
  std::size_t left = 0;
  std::size_t right = 0;

  std::size_t total() const noexcept { return left + right; }
  friend bool operator==(const Counts&, const Counts&) = default;
};

inline Counts count_letters(std::string_view letters) {
  const auto left = static_cast<std::size_t>(std::count(letters.begin(), letters.end(), kLeft));
  return {left, letters.size() - left};
}

inline Counts counts(const Word& w) { return count_letters(letters_of(w)); }
inline Counts counts(const FiniteWord& w) { return count_letters(w.letters()); }

inline std::string exchange_letters(std::string_view letters) {
  std::string out(letters);
  for (char& c : out) c = exchange_letter(c);
  return out;
}

/// Letterwise L <-> R exchange.
inline FiniteWord mirror(const FiniteWord& w) {
  if (w.size() == 0) return w;
  return FiniteWord(exchange_letters(w.letters()));
}
inline PeriodicWord mirror(const PeriodicWord& w) { return PeriodicWord(exchange_letters(w.block())); }
inline Word mirror(const Word& w) {
  return std::visit([](const auto& v) -> Word { return mirror(v); }, w);
}

inline FiniteWord concat(const FiniteWord& a, const FiniteWord& b) {
  return FiniteWord(a.letters() + b.letters());
}

/// True if a and b are rotations of one another after primitive reduction.
inline bool same_cyclic_class(std::string_view a, std::string_view b) {
  a = detail::primitive_root(a);
  b = detail::primitive_root(b);
  if (a.size() != b.size()) return false;
  const std::string doubled = std::string(a) + std::string(a);
  return doubled.find(b) != std::string::npos;
}

inline bool same_cyclic_class(const Word& a, const Word& b) {
  return same_cyclic_class(letters_of(a), letters_of(b));
}

// ---------------------------------------------------------------------------
// L-maximal / R-minimal

namespace detail {

/// For every k > 0 with letter `c` at k, s^k(w) must be `ok` against w.
template <typename Accept>
bool extremal_against_shifts(const Word& w, char c, Accept ok) {
  const std::string& letters = letters_of(w);
  if (letters.empty() || letters.front() != c) return false;
  const SymbolStream whole = stream_of(w);
  for (std::size_t k = 1; k < letters.size(); ++k) {
    if (letters[k] != c) continue;
    if (!ok(compare_streams(stream_of(w, k), whole))) return false;
  }
  return true;
}

/// Index of the greatest (want_max) or least rotation that starts with c.
inline std::optional<std::size_t> extreme_rotation(std::string_view s, char c, bool want_max) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != c) continue;
    if (!best) {
      best = i;
      continue;
    }
    const auto order = compare_rotations(s, i, *best);
    if (want_max ? order > 0 : order < 0) best = i;
  }
  return best;
}

}  // namespace detail

inline bool is_l_maximal(const Word& w) {
  return detail::extremal_against_shifts(w, kLeft, [](auto o) { return o <= 0; });
}

inline bool is_r_minimal(const Word& w) {
  return detail::extremal_against_shifts(w, kRight, [](auto o) { return o >= 0; });
}

/// Periodic orbit of an L-maximal or R-minimal finite word.
inline PeriodicWord to_periodic(const FiniteWord& w) {
  if (!is_l_maximal(w) && !is_r_minimal(w))
    throw DomainError(w.to_string() + " is neither L-maximal nor R-minimal");
  return PeriodicWord(w.letters());
}

/// Greatest rotation starting with L, as a finite word.
inline FiniteWord canonical_l_maximal(const PeriodicWord& w) {
  const auto at = detail::extreme_rotation(w.block(), kLeft, true);
  if (!at) throw DomainError(w.to_string() + " has no L; no L-maximal form");
  return FiniteWord(detail::rotate(w.block(), *at));
}

/// Least rotation starting with R, as a finite word.
inline FiniteWord canonical_r_minimal(const PeriodicWord& w) {
  const auto at = detail::extreme_rotation(w.block(), kRight, false);
  if (!at) throw DomainError(w.to_string() + " has no R; no R-minimal form");
  return FiniteWord(detail::rotate(w.block(), *at));
}

/// L-maximal representative of the cyclic class of any word.
inline FiniteWord canonical_l_maximal(const Word& w) {
  return canonical_l_maximal(PeriodicWord(letters_of(w)));
}

/// The R-minimal version of a finite word: minimum over its rotations that
/// start with R, terminated by 0.
inline FiniteWord r_minimal_rotation(const FiniteWord& w) {
  const auto at = detail::extreme_rotation(w.letters(), kRight, false);
  if (!at) throw DomainError(w.to_string() + " contains no R");
  return FiniteWord(detail::rotate(w.letters(), *at));
}

// ---------------------------------------------------------------------------
// Syllables and trip number

/// A maximal subword L^left R^right.
struct Syllable {
  std::size_t left = 0;
  std::size_t right = 0;

  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

struct SyllableDecomposition {
  std::vector<Syllable> syllables;
  /// Index of the letter where the cyclic decomposition starts.
  std::size_t rotation_offset = 0;
};

/// Cyclic decomposition, anchored at the first L that follows an R.
inline SyllableDecomposition syllable_decomposition(const Word& w) {
  const std::string& s = letters_of(w);
  const Counts c = count_letters(s);
  if (c.left == 0 || c.right == 0)
    throw DomainError(to_string(w) + " has a single letter; no cyclic syllables");
  const std::size_t n = s.size();
  std::size_t start = 0;
  while (!(s[start] == kLeft && s[(start + n - 1) % n] == kRight)) ++start;

  SyllableDecomposition out;
  out.rotation_offset = start;
  std::size_t i = 0;
  while (i < n) {
    Syllable syl;
    while (i < n && s[(start + i) % n] == kLeft) ++syl.left, ++i;
    while (i < n && s[(start + i) % n] == kRight) ++syl.right, ++i;
    out.syllables.push_back(syl);
  }
  return out;
}

inline std::vector<Syllable> syllable_multiset(const Word& w) {
  auto syl = syllable_decomposition(w).syllables;
  std::sort(syl.begin(), syl.end());
  return syl;
}

/// Fewest syllables over the period-length windows of the orbit. Every window
/// cuts one cyclic adjacency, so this is the number of cyclic RL boundaries.
inline std::size_t trip_number(const Word& w) {
  return syllable_decomposition(w).syllables.size();
}

// ---------------------------------------------------------------------------
// Balance and torus words

/// Balance-1: any two cyclic windows of equal length hold R-counts that
/// differ by at most one.
inline bool is_evenly_distributed(const Word& w) {
  const std::string& s = letters_of(w);
  const std::size_t n = s.size();
  std::vector<std::size_t> prefix(2 * n + 1, 0);
  for (std::size_t i = 0; i < 2 * n; ++i) prefix[i + 1] = prefix[i] + (s[i % n] == kRight);
  for (std::size_t len = 1; len < n; ++len) {
    std::size_t lo = prefix[len];
    std::size_t hi = lo;
    for (std::size_t i = 1; i < n; ++i) {
      const std::size_t r = prefix[i + len] - prefix[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    if (hi - lo > 1) return false;
  }
  return true;
}

struct TorusType {
  int p = 0;
  int q = 0;

  friend bool operator==(const TorusType&, const TorusType&) = default;
  friend auto operator<=>(const TorusType&, const TorusType&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const TorusType& t) {
  return os << "T(" << t.p << "," << t.q << ")";
}

/// The standard word W(p,q): the L-maximal evenly distributed word with p
/// L's and q R's, for coprime p < q.
inline FiniteWord standard_torus_word(int p, int q) {
  if (p < 1 || q <= p)
    throw DomainError("standard torus word needs 0 < p < q, got (" + std::to_string(p) + "," +
                      std::to_string(q) + ")");
  if (std::gcd(p, q) != 1)
    throw DomainError("standard torus word needs gcd(p,q) = 1, got (" + std::to_string(p) + "," +
                      std::to_string(q) + ")");
  const long long n = p + q;
  std::string mechanical;
  mechanical.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) {
    const bool right = ((i + 1) * q) / n - (i * q) / n == 1;
    mechanical.push_back(right ? kRight : kLeft);
  }
  return canonical_l_maximal(PeriodicWord(mechanical));
}

/// Torus type (p,q) = (min, max) of the letter counts when the cyclic
/// syllables of w are a permutation of those of W(p,q). Words with more L's
/// than R's are compared through their mirror image, whose knot is the same.
/// W(p,q) itself is included; check against it to tell the trivial case.
inline std::optional<TorusType> syllable_permutation_class(const Word& w) {
  const Counts c = counts(w);
  if (c.left == 0 || c.right == 0) return std::nullopt;
  const int p = static_cast<int>(std::min(c.left, c.right));
  const int q = static_cast<int>(std::max(c.left, c.right));
  if (p == q || std::gcd(p, q) != 1) return std::nullopt;
  const Word oriented = c.left <= c.right ? w : mirror(w);
  const Word standard = standard_torus_word(p, q);
  if (syllable_multiset(oriented) != syllable_multiset(standard)) return std::nullopt;
  return TorusType{p, q};
}

/// True when the cyclic class of w (or of its mirror, when n_L > n_R) is the
/// class of W(p,q) itself.
inline bool is_standard_torus_class(const Word& w) {
  const Counts c = counts(w);
  if (c.left == 0 || c.right == 0) return false;
  const int p = static_cast<int>(std::min(c.left, c.right));
  const int q = static_cast<int>(std::max(c.left, c.right));
  if (p == q || std::gcd(p, q) != 1) return false;
  const Word oriented = c.left <= c.right ? w : mirror(w);
  return same_cyclic_class(letters_of(oriented), standard_torus_word(p, q).letters());
}

}  // namespace lorenz
