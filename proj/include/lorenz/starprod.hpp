#pragma once

// The *-product (X,Y)*S, factorization of reducible words, and the
// classifier that recognises products over Farey pairs as syllable
// permutations of standard torus words.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "lorenz/error.hpp"
#include "lorenz/farey.hpp"
#include "lorenz/words.hpp"

namespace lorenz {

/// Replaces each L of S by X and each R by Y, closing with a single 0.
inline FiniteWord star_product(const FiniteWord& x, const FiniteWord& y, const FiniteWord& s) {
  if (s.size() == 0) throw DomainError("*-product needs a non-empty S");
  if (!is_admissible(x, y))
    throw DomainError("(" + x.to_string() + ", " + y.to_string() + ") is not admissible");
  std::string out;
  const Counts c = counts(s);
  out.reserve(c.left * x.size() + c.right * y.size());
  for (char letter : s.letters()) out += letter == kLeft ? x.letters() : y.letters();
  return FiniteWord(std::move(out));
}

inline FiniteWord star_product(const FareyPair& pair, const FiniteWord& s) {
  return star_product(pair.x(), pair.y(), s);
}

struct Factorization {
  FiniteWord x;
  FiniteWord y;
  FiniteWord s;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

namespace detail {

/// Reads w as a sequence of blocks of length a (starting with L) and b
/// (starting with R). Fills x, y, s on success.
inline bool split_blocks(std::string_view w, std::size_t a, std::size_t b, std::string& x,
                         std::string& y, std::string& s) {
  x.clear();
  y.clear();
  s.clear();
  std::size_t i = 0;
  while (i < w.size()) {
    const bool left = w[i] == kLeft;
    const std::size_t len = left ? a : b;
    if (i + len > w.size()) return false;
    const std::string_view block = w.substr(i, len);
    std::string& slot = left ? x : y;
    if (slot.empty())
      slot = std::string(block);
    else if (block != slot)
      return false;
    s.push_back(left ? kLeft : kRight);
    i += len;
  }
  return !x.empty() && !y.empty();
}

}  // namespace detail

/// Every way of writing w as (X,Y)*S with (X,Y) admissible, (X,Y) != (L,R)
/// and |S| >= 2 with S using both letters. Periodic input is first replaced
/// by the L-maximal form of its class. Sorted by |S| descending, then |X|.
inline std::vector<Factorization> factorize(const Word& w) {
  std::string target;
  if (is_periodic(w)) {
    if (counts(w).left == 0) return {};
    target = canonical_l_maximal(w).letters();
  } else {
    target = letters_of(w);
  }
  const std::size_t n = target.size();
  std::vector<Factorization> out;
  std::string x, y, s;
  for (std::size_t a = 1; a < n; ++a) {
    for (std::size_t b = 1; a + b <= n; ++b) {
      if (a == 1 && b == 1) continue;
      if (!detail::split_blocks(target, a, b, x, y, s) || s.size() < 2) continue;
      FiniteWord fx(x), fy(y);
      if (!is_admissible(fx, fy)) continue;
      out.push_back({std::move(fx), std::move(fy), FiniteWord(s)});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Factorization& l, const Factorization& r) {
    if (l.s.size() != r.s.size()) return l.s.size() > r.s.size();
    return l.x.size() < r.x.size();
  });
  return out;
}

inline bool is_reducible(const Word& w) { return !factorize(w).empty(); }

// ---------------------------------------------------------------------------
// Classification of products over Farey pairs

enum class Verdict { NontrivialPermutation, StandardWord, NotApplicable };

enum class CertificateKind { KpPlus2, KPlus1pMinus2, KpPlus3, KPlus1pMinus3, None };

enum class ReasonCode {
  None,
  SingleLetterWord,
  TripNumberX,
  TripNumberY,
  PeriodicS,
  SingleLetterS,
  MixedCounts,
  ZeroRemainder,
  QuotientMismatch,
  NotSyllablePermutation,
};

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::NontrivialPermutation: return "nontrivial-permutation";
    case Verdict::StandardWord: return "standard-word";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "not-applicable";
}

inline std::string_view to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::KpPlus2: return "odd-p-kp+2";
    case CertificateKind::KPlus1pMinus2: return "odd-p-(k+1)p-2";
    case CertificateKind::KpPlus3: return "even-p-kp+3";
    case CertificateKind::KPlus1pMinus3: return "even-p-(k+1)p-3";
    case CertificateKind::None: return "none";
  }
  return "none";
}

inline std::string_view to_string(ReasonCode r) {
  switch (r) {
    case ReasonCode::None: return "none";
    case ReasonCode::SingleLetterWord: return "single-letter-word";
    case ReasonCode::TripNumberX: return "trip-number-x";
    case ReasonCode::TripNumberY: return "trip-number-y";
    case ReasonCode::PeriodicS: return "periodic-s";
    case ReasonCode::SingleLetterS: return "single-letter-s";
    case ReasonCode::MixedCounts: return "mixed-counts";
    case ReasonCode::ZeroRemainder: return "zero-remainder";
    case ReasonCode::QuotientMismatch: return "quotient-mismatch";
    case ReasonCode::NotSyllablePermutation: return "not-syllable-permutation";
  }
  return "none";
}

struct TorusPermutationReport {
  int p1 = 0, q1 = 0, p2 = 0, q2 = 0;
  int k = 0;
  int r1 = 0, r2 = 0;
  int p = 0, q = 0, r = 0;
  Verdict verdict = Verdict::NotApplicable;
  CertificateKind certificate = CertificateKind::None;
  ReasonCode reason = ReasonCode::None;
  bool p_odd = false;
  bool p_greater_than_4 = false;
  bool p_multiple_of_3 = false;

  bool applicable() const noexcept { return verdict != Verdict::NotApplicable; }
};

/// Which of the four certificate shapes r takes relative to p; p <= 4 is
/// left to the caller since the shapes overlap there.
inline CertificateKind certificate_kind(int p, int r) {
  if (r == 2) return CertificateKind::KpPlus2;
  if (r == p - 2) return CertificateKind::KPlus1pMinus2;
  if (r == 3) return CertificateKind::KpPlus3;
  if (r == p - 3) return CertificateKind::KPlus1pMinus3;
  return CertificateKind::None;
}

/// Classifies Z = (X,Y)*S. The arithmetic follows the letter counts; the
/// verdict comes from comparing Z's cyclic syllables with W(p,q), so the
/// numbers never stand in for the check.
inline TorusPermutationReport classify_star(const FareyPair& pair, const FiniteWord& s) {
  TorusPermutationReport rep;
  const Counts cx = counts(pair.x());
  const Counts cy = counts(pair.y());
  const Counts cs = counts(s);
  const auto as_int = [](std::size_t v) { return static_cast<int>(v); };

  rep.p1 = as_int(std::min(cx.left, cx.right));
  rep.q1 = as_int(std::max(cx.left, cx.right));
  rep.p2 = as_int(std::min(cy.left, cy.right));
  rep.q2 = as_int(std::max(cy.left, cy.right));
  if (rep.p1 > 0) rep.r1 = rep.q1 % rep.p1;
  if (rep.p2 > 0) rep.r2 = rep.q2 % rep.p2;
  const int ls = as_int(cs.left);
  const int rs = as_int(cs.right);
  rep.p = ls * rep.p1 + rs * rep.p2;
  rep.q = ls * rep.q1 + rs * rep.q2;
  rep.r = ls * rep.r1 + rs * rep.r2;
  rep.p_odd = rep.p % 2 == 1;
  rep.p_greater_than_4 = rep.p > 4;
  rep.p_multiple_of_3 = rep.p % 3 == 0;

  const auto not_applicable = [&rep](ReasonCode why) {
    rep.verdict = Verdict::NotApplicable;
    rep.reason = why;
    return rep;
  };

  if (rep.p1 == 0 || rep.p2 == 0) return not_applicable(ReasonCode::SingleLetterWord);
  if (trip_number(pair.x()) <= 1) return not_applicable(ReasonCode::TripNumberX);
  if (trip_number(pair.y()) <= 1) return not_applicable(ReasonCode::TripNumberY);
  if (detail::primitive_root(s.letters()).size() != s.size())
    return not_applicable(ReasonCode::PeriodicS);
  // With one letter Z is X or Y itself: not reducible, and r = r1 may be 1.
  if (ls == 0 || rs == 0) return not_applicable(ReasonCode::SingleLetterS);
  const bool x_right_heavy = cx.left < cx.right;
  const bool y_right_heavy = cy.left < cy.right;
  if (x_right_heavy != y_right_heavy || cx.left == cx.right || cy.left == cy.right)
    return not_applicable(ReasonCode::MixedCounts);
  if (rep.r1 == 0 || rep.r2 == 0) return not_applicable(ReasonCode::ZeroRemainder);
  const int k1 = rep.q1 / rep.p1;
  const int k2 = rep.q2 / rep.p2;
  if (k1 != k2) return not_applicable(ReasonCode::QuotientMismatch);
  rep.k = k1;

  const FiniteWord z = star_product(pair, s);
  const auto cls = syllable_permutation_class(z);
  if (!cls || *cls != TorusType{rep.p, rep.q})
    return not_applicable(ReasonCode::NotSyllablePermutation);

  rep.verdict = is_standard_torus_class(z) ? Verdict::StandardWord : Verdict::NontrivialPermutation;
  rep.certificate = certificate_kind(rep.p, rep.r);
  return rep;
}

}  // namespace lorenz
