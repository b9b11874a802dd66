#pragma once

// Ten families of products (X,Y)*S over Farey pairs whose knots are
// hyperbolic provided every Lorenz satellite is a cabling on a Lorenz knot
// (Morton's conjecture). Each instance is built from its closed-form words
// and rebuilt independently as a Farey pair; certificates record every
// clause the hyperbolicity claim rests on.

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "lorenz/braids.hpp"
#include "lorenz/error.hpp"
#include "lorenz/farey.hpp"
#include "lorenz/starprod.hpp"
#include "lorenz/words.hpp"

namespace lorenz {

inline constexpr int kFamilyCount = 10;

enum class Parity { Any, Odd, Even };

struct FamilyTraits {
  int id;
  Parity n_parity;
  const char* s_letters;
  CertificateKind certificate;
};

inline constexpr std::array<FamilyTraits, kFamilyCount> kFamilies{{
    {1, Parity::Any, "LR", CertificateKind::KpPlus2},
    {2, Parity::Any, "LR", CertificateKind::KPlus1pMinus2},
    {3, Parity::Odd, "LR", CertificateKind::KpPlus3},
    {4, Parity::Odd, "LR", CertificateKind::KpPlus3},
    {5, Parity::Even, "LRL", CertificateKind::KpPlus3},
    {6, Parity::Odd, "LRR", CertificateKind::KpPlus3},
    {7, Parity::Odd, "LR", CertificateKind::KPlus1pMinus3},
    {8, Parity::Odd, "LR", CertificateKind::KPlus1pMinus3},
    {9, Parity::Odd, "LRL", CertificateKind::KPlus1pMinus3},
    {10, Parity::Even, "LRR", CertificateKind::KPlus1pMinus3},
}};

inline const FamilyTraits& family_traits(int family_id) {
  if (family_id < 1 || family_id > kFamilyCount)
    throw DomainError("family id must be in 1..10, got " + std::to_string(family_id));
  return kFamilies[static_cast<std::size_t>(family_id - 1)];
}

/// Empty when (k, n) is admissible for the family, else the violated clause.
inline std::string family_parameter_violation(int family_id, int k, int n) {
  const FamilyTraits& t = family_traits(family_id);
  if (k <= 0) return "k>0 required";
  if (n <= 1) return "n>1 required";
  if (t.n_parity == Parity::Odd && n % 2 == 0) return "n odd required";
  if (t.n_parity == Parity::Even && n % 2 != 0) return "n even required";
  return {};
}

struct FamilyInstance {
  int family_id = 0;
  int k = 0;
  int n = 0;
  FareyPair pair;
  FiniteWord s;
  FiniteWord product;
  TorusPermutationReport report;
  bool mirrored = false;
};

namespace detail {

inline std::string repeat(std::string_view block, int times) {
  std::string out;
  for (int i = 0; i < times; ++i) out += block;
  return out;
}

inline std::string l_power(int e) { return std::string(static_cast<std::size_t>(e), kLeft); }

struct FamilyWords {
  std::string x;
  std::string y;
  std::string s_parent;
};

/// X and Y as displayed, and the smaller Farey neighbour S_parent of X with
/// Y = m(S_parent) as derived in each family's construction.
inline FamilyWords family_words(int id, int k, int n) {
  const std::string rl_k = "R" + l_power(k);
  const std::string rl_k1 = "R" + l_power(k + 1);
  const std::string lrl_k = "LR" + l_power(k);
  // (L(RL^k)^{n+1}, RL^{k+1}(RL^k)^{n-1}) with S_parent = L(RL^k)^n
  const FamilyWords first{"L" + repeat(rl_k, n + 1), rl_k1 + repeat(rl_k, n - 1),
                          "L" + repeat(rl_k, n)};
  // (LRL^k (RL^{k+1})^{n-2} RL^k, (RL^{k+1})^n RL^k)
  // with S_parent = LRL^k (RL^{k+1})^{n-1} RL^k
  const FamilyWords second{lrl_k + repeat(rl_k1, n - 2) + rl_k, repeat(rl_k1, n) + rl_k,
                           lrl_k + repeat(rl_k1, n - 1) + rl_k};
  switch (id) {
    case 1:
    case 5:
    case 6:
      return first;
    case 2:
    case 9:
    case 10:
      return second;
    case 3:
      return {"L" + repeat(rl_k, n),
              rl_k1 + repeat(rl_k, n - 2) + rl_k1 + repeat(rl_k, n - 1),
              "L" + repeat(rl_k, n) + "L" + repeat(rl_k, n - 1)};
    case 4:
      return {"L" + repeat(rl_k, n) + rl_k1 + repeat(rl_k, n), rl_k1 + repeat(rl_k, n - 1),
              "L" + repeat(rl_k, n)};
    case 7: {
      const std::string x = lrl_k + repeat(rl_k1, n - 2) + rl_k;
      const std::string u = lrl_k + repeat(rl_k1, n - 1) + rl_k;
      return {x, repeat(rl_k1, n) + rl_k + repeat(rl_k1, n - 1) + rl_k, x + u};
    }
    case 8:
      return {lrl_k + repeat(rl_k1, n - 2) + rl_k + repeat(rl_k1, n - 2) + rl_k,
              repeat(rl_k1, n - 1) + rl_k, lrl_k + repeat(rl_k1, n - 2) + rl_k};
    default:
      throw DomainError("family id must be in 1..10, got " + std::to_string(id));
  }
}

inline void require_identity(const std::string& lhs, const std::string& rhs, const char* what) {
  if (lhs != rhs)
    throw std::logic_error(std::string("family word identity failed: ") + what + ": " + lhs +
                           " != " + rhs);
}

/// Concatenation identities used to place the family words in the tree.
inline void check_construction_identities(int id, int k, int n) {
  const std::string rl_k = "R" + l_power(k);
  const std::string rl_k1 = "R" + l_power(k + 1);
  const std::string lrl_k = "LR" + l_power(k);
  const std::string lrl_km1 = "LR" + l_power(k - 1);
  // L(RL^k)^{m+1} = (LRL^{k-1})^m LRL^k
  const auto chain = [&](int m) {
    require_identity("L" + repeat(rl_k, m + 1), repeat(lrl_km1, m) + lrl_k,
                     "L(RL^k)^{m+1} = (LRL^{k-1})^m LRL^k");
  };
  switch (id) {
    case 1:
    case 5:
    case 6:
      chain(n);
      break;
    case 3:
      chain(n - 1);
      break;
    case 4:
      require_identity("L" + repeat(rl_k, n) + rl_k1 + repeat(rl_k, n),
                       "L" + repeat(rl_k, n + 1) + "L" + repeat(rl_k, n),
                       "X = L(RL^k)^{n+1} L(RL^k)^n");
      break;
    case 2:
    case 9:
    case 10:
      require_identity(lrl_k + rl_k, lrl_km1 + lrl_k, "LRL^kRL^k = LRL^{k-1} LRL^k");
      require_identity(lrl_k + rl_k1 + rl_k, lrl_k + rl_k + lrl_k,
                       "LRL^kRL^{k+1}RL^k = LRL^kRL^k LRL^k");
      break;
    case 7:
      require_identity(lrl_k + repeat(rl_k1, n - 1) + rl_k, lrl_km1 + repeat(lrl_k, n),
                       "U = LRL^{k-1}(LRL^k)^n");
      break;
    case 8: {
      const std::string v = lrl_k + repeat(rl_k1, n - 3) + rl_k;
      require_identity(v, lrl_km1 + repeat(lrl_k, n - 2), "V = LRL^{k-1}(LRL^k)^{n-2}");
      require_identity(lrl_k + repeat(rl_k1, n - 2) + rl_k, v + lrl_k,
                       "LRL^k(RL^{k+1})^{n-2}RL^k = V LRL^k");
      break;
    }
    default:
      break;
  }
}

}  // namespace detail

/// Builds family `family_id` at (k, n). The displayed X, Y are checked
/// against the Farey pair built from X and its neighbour S_parent.
inline FamilyInstance family_instance(int family_id, int k, int n) {
  const FamilyTraits& traits = family_traits(family_id);
  if (const std::string bad = family_parameter_violation(family_id, k, n); !bad.empty())
    throw DomainError("family " + std::to_string(family_id) + ": " + bad);

  detail::check_construction_identities(family_id, k, n);
  const detail::FamilyWords words = detail::family_words(family_id, k, n);
  FareyPair pair = make_farey_pair(FiniteWord(words.x), FiniteWord(words.s_parent));
  if (pair.y().letters() != words.y)
    throw std::logic_error("family " + std::to_string(family_id) + ": displayed Y " + words.y +
                           "0 differs from m(S_parent) = " + pair.y().to_string());
  FiniteWord s(traits.s_letters);
  FiniteWord product = star_product(pair, s);
  TorusPermutationReport report = classify_star(pair, s);
  return {family_id, k, n, std::move(pair), std::move(s), std::move(product), report, false};
}

/// L <-> R exchange: (X,Y)*S becomes (Y^,X^)*S^, again a Farey pair.
inline FamilyInstance mirror(const FamilyInstance& inst) {
  const FiniteWord x = mirror(inst.pair.y());
  const FiniteWord y = mirror(inst.pair.x());
  FareyPair pair = farey_pair_from_words(x, y);
  FiniteWord s = mirror(inst.s);
  FiniteWord product = star_product(pair, s);
  TorusPermutationReport report = classify_star(pair, s);
  return {inst.family_id, inst.k, inst.n, std::move(pair), std::move(s), std::move(product), report,
          !inst.mirrored};
}

struct Clause {
  std::string name;
  bool passed = false;
};

struct Certificate {
  CertificateKind kind = CertificateKind::None;
  int p = 0;
  int q = 0;
  int k = 0;
  std::vector<Clause> clauses;
  /// Satellites are excluded only under Morton's conjecture.
  bool conditional_on_morton = true;

  bool issued() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.passed; });
  }
  std::vector<std::string> failed_clauses() const {
    std::vector<std::string> out;
    for (const auto& c : clauses)
      if (!c.passed) out.push_back(c.name);
    return out;
  }
};

/// Runs the whole chain for one instance and records each clause.
inline Certificate verify_instance(const FamilyInstance& inst) {
  const FamilyTraits& traits = family_traits(inst.family_id);
  const TorusPermutationReport& rep = inst.report;
  const FareyPair& pair = inst.pair;
  Certificate cert;
  cert.kind = rep.certificate;
  cert.p = rep.p;
  cert.q = rep.q;
  cert.k = rep.k;
  const auto clause = [&cert](std::string name, bool ok) {
    cert.clauses.push_back({std::move(name), ok});
  };

  const bool neighbours = in_l_maximal_tree(pair.x()) && in_l_maximal_tree(pair.s_parent()) &&
                          pair.s_parent() < pair.x() &&
                          are_farey_neighbors(pair.x(), pair.s_parent()) &&
                          r_minimal_rotation(pair.s_parent()) == pair.y();
  clause("farey-pair", neighbours);
  clause("admissible", is_admissible(pair.x(), pair.y()));
  clause("product", star_product(pair, inst.s) == inst.product);
  clause("nontrivial-permutation", rep.verdict == Verdict::NontrivialPermutation);
  clause("declared-kind", rep.certificate == traits.certificate);
  clause("q=kp+r", rep.q == rep.k * rep.p + rep.r && 1 < rep.r && rep.r < rep.p - 1);
  clause("p>4", rep.p > 4);
  const bool wants_odd = traits.certificate == CertificateKind::KpPlus2 ||
                         traits.certificate == CertificateKind::KPlus1pMinus2;
  clause(wants_odd ? "p-odd" : "p-even", rep.p_odd == wants_odd);
  if (!wants_odd) clause("p-not-multiple-of-3", !rep.p_multiple_of_3);
  clause("non-standard", !is_standard_torus_class(inst.product));

  bool unique_torus = false;
  try {
    const LorenzBraid braid = lorenz_braid(Word(inst.product));
    const auto index = static_cast<int>(braid_index(PeriodicWord(inst.product.letters())));
    const auto genus = static_cast<long long>(positive_braid_genus(braid));
    unique_torus = index == rep.p && torus_matches(index, genus, rep.q - 1).size() <= 1;
  } catch (const DomainError&) {
    unique_torus = false;
  }
  clause("torus-uniqueness", unique_torus);
  return cert;
}

}  // namespace lorenz
