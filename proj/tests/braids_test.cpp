#include <gtest/gtest.h>

#include <numeric>
#include <string>
#include <vector>

#include "lorenz/braids.hpp"
#include "oracles.hpp"

namespace lorenz {
namespace {

TEST(LorenzBraid, Trefoil) {
  const LorenzBraid b = lorenz_braid(PeriodicWord("LRRLR"));
  EXPECT_EQ(b.strands(), 5u);
  EXPECT_EQ(b.perm(), (std::vector<int>{4, 5, 1, 2, 3}));
  EXPECT_EQ(b.left_strands(), 2u);
  EXPECT_EQ(crossing_count(b), 6u);
  EXPECT_EQ(cycle_count(b), 1u);
  EXPECT_EQ(positive_braid_genus(b), 1u);
  EXPECT_EQ(braid_index(PeriodicWord("LRRLR")), 2u);
}

TEST(LorenzBraid, SmallCases) {
  const LorenzBraid lr = lorenz_braid(PeriodicWord("LR"));
  EXPECT_EQ(lr.perm(), (std::vector<int>{2, 1}));
  EXPECT_EQ(crossing_count(lr), 1u);
  EXPECT_EQ(positive_braid_genus(lr), 0u);
  EXPECT_EQ(emit_braid_word(lr), (std::vector<int>{1}));
}

TEST(LorenzBraid, TwoComponentLink) {
  const LorenzBraid b = lorenz_braid({PeriodicWord("LR"), PeriodicWord("LRR")});
  EXPECT_EQ(b.strands(), 5u);
  EXPECT_EQ(b.perm(), oracle::lorenz_perm({"LR", "LRR"}));
  EXPECT_EQ(b.perm()[0], 3);
  EXPECT_EQ(cycle_count(b), 2u);
  EXPECT_THROW(positive_braid_genus(b), DomainError);
}

TEST(LorenzBraid, FiniteInputReadAsClass) {
  EXPECT_EQ(lorenz_braid(Word(FiniteWord("LRRLR"))).perm(), lorenz_braid(PeriodicWord("LRRLR")).perm());
}

TEST(LorenzBraid, DuplicateOrbitRejected) {
  EXPECT_THROW(lorenz_braid({PeriodicWord("LRR"), PeriodicWord("RLR")}), DomainError);
}

TEST(LorenzBraid, MatchesSortingOracle) {
  for (const auto& cls : oracle::primitive_classes(11)) {
    if (cls.find('L') == std::string::npos || cls.find('R') == std::string::npos) continue;
    const LorenzBraid b = lorenz_braid(PeriodicWord(cls));
    EXPECT_EQ(b.perm(), oracle::lorenz_perm({cls})) << cls;
    EXPECT_EQ(cycle_count(b), 1u);
    // L points come first and map in increasing order, likewise R points.
    for (std::size_t i = 0; i + 1 < b.left_strands(); ++i) EXPECT_LT(b.perm()[i], b.perm()[i + 1]);
    for (std::size_t i = b.left_strands(); i + 1 < b.strands(); ++i)
      EXPECT_LT(b.perm()[i], b.perm()[i + 1]);
  }
}

TEST(LorenzBraid, BraidWordReplaysPermutation) {
  for (const auto& cls : oracle::primitive_classes(10)) {
    if (cls.find('L') == std::string::npos || cls.find('R') == std::string::npos) continue;
    const LorenzBraid b = lorenz_braid(PeriodicWord(cls));
    const auto word = emit_braid_word(b);
    EXPECT_EQ(word.size(), crossing_count(b));
    EXPECT_EQ(oracle::replay(b.strands(), word), b.perm()) << cls;
  }
  std::vector<int> identity(4);
  std::iota(identity.begin(), identity.end(), 1);
  EXPECT_EQ(oracle::replay(4, {}), identity);
}

TEST(TorusBraids, InvariantsOfStandardWords) {
  for (int q = 2; q <= 12; ++q)
    for (int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const FiniteWord w = standard_torus_word(p, q);
      const LorenzBraid b = lorenz_braid(Word(w));
      EXPECT_EQ(crossing_count(b), static_cast<std::size_t>(p * q));
      EXPECT_EQ(positive_braid_genus(b), static_cast<std::size_t>((p - 1) * (q - 1) / 2));
      EXPECT_EQ(braid_index(PeriodicWord(w.letters())), static_cast<std::size_t>(p));
    }
}

TEST(TorusBraids, WThreeFour) {
  const LorenzBraid b = lorenz_braid(Word(standard_torus_word(3, 4)));
  EXPECT_EQ(crossing_count(b), 12u);
  EXPECT_EQ(positive_braid_genus(b), 3u);
}

TEST(TorusMatches, Examples) {
  EXPECT_EQ(torus_matches(2, 1, 100), (std::vector<TorusType>{{2, 3}}));
  EXPECT_EQ(torus_matches(3, 3, 100), (std::vector<TorusType>{{3, 4}}));
  EXPECT_EQ(torus_matches(5, 12, 100), (std::vector<TorusType>{{5, 7}}));
  EXPECT_TRUE(torus_matches(5, 12, 6).empty());
  EXPECT_TRUE(torus_matches(4, 4, 100).empty());
}

TEST(Format, Rendering) {
  EXPECT_EQ(format_permutation({4, 5, 1, 2, 3}), "[4,5,1,2,3]");
  EXPECT_EQ(format_artin_word({1, 2, 1}), "1 2 1");
}

}  // namespace
}  // namespace lorenz
