#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>
#include <tuple>

#include "lorenz/sampling.hpp"
#include "lorenz/starprod.hpp"
#include "oracles.hpp"

namespace lorenz {
namespace {

FiniteWord fw(const std::string& text) { return std::get<FiniteWord>(parse_word(text).word); }

TEST(StarProduct, Examples) {
  EXPECT_EQ(star_product(fw("L0"), fw("R0"), fw("LR0")), fw("LR0"));
  EXPECT_EQ(star_product(fw("LRLRLRL0"), fw("RLLRL0"), fw("LR0")), fw("LRLRLRLRLLRL0"));
  EXPECT_EQ(star_product(fw("LRR0"), fw("RL0"), fw("LLR0")), fw("LRRLRRRL0"));
  EXPECT_THROW(star_product(fw("LRL0"), fw("RLR0"), fw("LR0")), DomainError);
}

TEST(StarProduct, CountHomomorphismOnRandomPairs) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 300; ++t) {
    const FareyPair pair = random_farey_pair(rng, 6);
    const FiniteWord s = random_word(rng, 1, 6);
    const Counts cx = counts(pair.x()), cy = counts(pair.y()), cs = counts(s);
    const Counts cz = counts(star_product(pair, s));
    EXPECT_EQ(cz.left, cs.left * cx.left + cs.right * cy.left);
    EXPECT_EQ(cz.right, cs.left * cx.right + cs.right * cy.right);
  }
}

TEST(Factorize, Examples) {
  EXPECT_TRUE(factorize(fw("LRRLR0")).empty());
  EXPECT_TRUE(factorize(fw("LR0")).empty());
  const auto family = factorize(fw("LRLRLRLRLLRL0"));
  const Factorization expected{fw("LRLRLRL0"), fw("RLLRL0"), fw("LR0")};
  EXPECT_NE(std::find(family.begin(), family.end(), expected), family.end());
}

TEST(Factorize, SortedBySLengthThenX) {
  const auto list = factorize(fw("LRLRLRLRLLRL0"));
  for (std::size_t i = 0; i + 1 < list.size(); ++i) {
    const auto& a = list[i];
    const auto& b = list[i + 1];
    EXPECT_TRUE(a.s.size() > b.s.size() || (a.s.size() == b.s.size() && a.x.size() <= b.x.size()));
  }
}

TEST(Factorize, MatchesExhaustiveSearch) {
  for (std::size_t n = 2; n <= 11; ++n)
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
      std::string w(n, 'L');
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1ul) w[i] = 'R';
      std::set<std::tuple<std::string, std::string, std::string>> got;
      for (const auto& f : factorize(FiniteWord(w)))
        got.insert({f.x.letters(), f.y.letters(), f.s.letters()});
      EXPECT_EQ(got, oracle::factorizations(w)) << w;
    }
}

TEST(Factorize, ProductsAreReducible) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 200; ++t) {
    const FareyPair pair = random_farey_pair(rng, 5);
    if (pair.x().size() == 1 && pair.y().size() == 1) continue;
    FiniteWord s = random_word(rng, 2, 5);
    if (counts(s).left == 0 || counts(s).right == 0) continue;
    const FiniteWord z = star_product(pair, s);
    bool found = false;
    for (const auto& f : factorize(z))
      found = found || (f.x == pair.x() && f.y == pair.y() && f.s == s);
    EXPECT_TRUE(found) << z;
  }
}

TEST(Factorize, BalancedClassesAreIrreducible) {
  for (const auto& cls : oracle::primitive_classes(12)) {
    if (cls.find('L') == std::string::npos) continue;
    const PeriodicWord w(cls);
    EXPECT_EQ(factorize(w).empty(), oracle::balanced(cls)) << cls;
  }
}

TEST(ClassifyStar, FamilyOne) {
  const FareyPair pair = make_farey_pair(fw("LRLRLRL0"), fw("LRLRL0"));
  const auto rep = classify_star(pair, fw("LR0"));
  EXPECT_EQ(std::tie(rep.p1, rep.q1, rep.p2, rep.q2), std::make_tuple(3, 4, 2, 3));
  EXPECT_EQ(rep.k, 1);
  EXPECT_EQ(std::tie(rep.r1, rep.r2), std::make_tuple(1, 1));
  EXPECT_EQ(std::tie(rep.p, rep.q, rep.r), std::make_tuple(5, 7, 2));
  EXPECT_EQ(rep.verdict, Verdict::NontrivialPermutation);
  EXPECT_EQ(rep.certificate, CertificateKind::KpPlus2);
  EXPECT_TRUE(rep.p_odd);
}

TEST(ClassifyStar, FamilyTwo) {
  const FareyPair pair = farey_pair_from_words(fw("LRLRL0"), fw("RLLRLLRL0"));
  const auto rep = classify_star(pair, fw("LR0"));
  EXPECT_EQ(std::tie(rep.p, rep.q, rep.r), std::make_tuple(5, 8, 3));
  EXPECT_EQ(rep.verdict, Verdict::NontrivialPermutation);
  EXPECT_EQ(rep.certificate, CertificateKind::KPlus1pMinus2);
}

TEST(ClassifyStar, TripNumberOneIsNotApplicable) {
  const FareyPair pair = farey_pair_from_words(fw("LRRLR0"), fw("RL0"));
  const auto rep = classify_star(pair, fw("LR0"));
  EXPECT_EQ(rep.verdict, Verdict::NotApplicable);
  EXPECT_EQ(rep.reason, ReasonCode::TripNumberY);
}

TEST(ClassifyStar, SingleLetterSIsNotApplicable) {
  const FareyPair pair = make_farey_pair(fw("LRLRLRL0"), fw("LRLRL0"));
  const auto rep = classify_star(pair, fw("R0"));
  EXPECT_EQ(rep.verdict, Verdict::NotApplicable);
  EXPECT_EQ(rep.reason, ReasonCode::SingleLetterS);
  EXPECT_EQ(classify_star(pair, fw("LRLR0")).reason, ReasonCode::PeriodicS);
}

TEST(ClassifyStar, RemainderRangeOnRandomPairs) {
  std::mt19937_64 rng(5);
  int applicable = 0;
  for (int t = 0; t < 1000; ++t) {
    const FareyPair pair = random_farey_pair(rng, 8);
    const FiniteWord s = random_word(rng, 1, 6);
    const auto rep = classify_star(pair, s);
    if (!rep.applicable()) {
      EXPECT_NE(rep.reason, ReasonCode::None);
      continue;
    }
    ++applicable;
    EXPECT_LT(1, rep.r);
    EXPECT_LT(rep.r, rep.p - 1);
    EXPECT_EQ(rep.q, rep.k * rep.p + rep.r);
    // Independent check of the verdict against the syllable multiset of W(p,q).
    const FiniteWord z = star_product(pair, s);
    const std::string letters = counts(z).left <= counts(z).right ? z.letters() : exchange_letters(z.letters());
    const auto ms = syllable_multiset(PeriodicWord(letters));
    EXPECT_EQ(ms, syllable_multiset(standard_torus_word(rep.p, rep.q)));
  }
  EXPECT_GT(applicable, 20);
}

TEST(CertificateKind, Shapes) {
  EXPECT_EQ(certificate_kind(7, 2), CertificateKind::KpPlus2);
  EXPECT_EQ(certificate_kind(7, 5), CertificateKind::KPlus1pMinus2);
  EXPECT_EQ(certificate_kind(8, 3), CertificateKind::KpPlus3);
  EXPECT_EQ(certificate_kind(8, 5), CertificateKind::KPlus1pMinus3);
  EXPECT_EQ(certificate_kind(11, 4), CertificateKind::None);
}

}  // namespace
}  // namespace lorenz
