#pragma once

// Command-line front end. `run_cli` is kept separate from main() so the
// test suite can drive it in-process.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lorenz/lorenz.hpp"
#include "lorenz/serialize.hpp"

namespace lorenz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct IntRange {
  int lo = 0;
  int hi = 0;
};

/// "a..b" or "a".
inline IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw ParseError("bad range '" + text + "'");
      return {v, v};
    }
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw ParseError("bad range '" + text + "'");
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw ParseError("bad range '" + text + "'");
    if (hi < lo) throw ParseError("empty range '" + text + "'");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ParseError("bad range '" + text + "'");
  }
}

/// "all", "a..b", or a comma-separated list of ids and ranges.
inline std::vector<int> parse_families(const std::string& text) {
  std::vector<int> ids;
  if (text == "all") {
    for (int i = 1; i <= kFamilyCount; ++i) ids.push_back(i);
    return ids;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const IntRange r = parse_range(item);
    for (int i = r.lo; i <= r.hi; ++i) {
      if (i < 1 || i > kFamilyCount) throw ParseError("family id out of 1..10: " + std::to_string(i));
      ids.push_back(i);
    }
  }
  if (ids.empty()) throw ParseError("no families selected");
  return ids;
}

inline FiniteWord parse_finite(const std::string& text) {
  const ParsedWord parsed = parse_word(text);
  if (is_periodic(parsed.word)) throw ParseError("expected a finite word ending in 0: " + text);
  return std::get<FiniteWord>(parsed.word);
}

inline std::string_view ordering_name(std::strong_ordering o) {
  return o < 0 ? "less" : (o > 0 ? "greater" : "equal");
}

class App {
 public:
  App(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(std::vector<std::string> args) {
    CLI::App app{"Symbolic dynamics of Lorenz maps: words, Farey trees, *-products, braids"};
    app.name("lorenz");
    app.require_subcommand(1);
    app.add_option("--format", format_, "Output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();

    int status = kExitOk;
    add_tree(app, status);
    add_word(app, status);
    add_pair(app, status);
    add_star(app, status);
    add_braid(app, status);
    add_family(app, status);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const ParseError& e) {
      err_ << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const DomainError& e) {
      err_ << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const std::exception& e) {
      err_ << "internal error: " << e.what() << "\n";
      return kExitVerificationFailed;
    }
    return status;
  }

 private:
  bool structured() const { return format_ == "structured"; }

  Json document(const std::string& command) const {
    return Json{{"schema_version", kSchemaVersion}, {"command", command}};
  }

  void emit(const Json& doc) { out_ << doc.dump(2) << "\n"; }

  // -------------------------------------------------------------------------
  void add_tree(CLI::App& app, int& status) {
    auto* cmd = app.add_subcommand("tree", "Print a level of a symbolic Farey tree");
    cmd->fallthrough();
    auto side = std::make_shared<std::string>("minus");
    auto depth = std::make_shared<std::size_t>(0);
    cmd->add_option("--side", *side, "minus (L-maximal) or plus (R-minimal)")
        ->check(CLI::IsMember({"minus", "plus"}))
        ->capture_default_str();
    cmd->add_option("--depth", *depth, "Tree level")->required();
    cmd->callback([this, side, depth, &status] {
      const TreeSide s = *side == "minus" ? TreeSide::LMaximal : TreeSide::RMinimal;
      const TreeLevel level = tree_level(s, *depth);
      if (structured()) {
        Json doc = document("tree");
        doc["level"] = to_json(level);
        emit(doc);
      } else {
        for (std::size_t i = 0; i < level.words.size(); ++i)
          out_ << level.depth << ' ' << i << ' ' << level.words[i] << '\n';
      }
      status = kExitOk;
    });
  }

  // -------------------------------------------------------------------------
  void add_word(CLI::App& app, int& status) {
    auto* cmd = app.add_subcommand("word", "Word canonical forms, order, trip number, balance");
    cmd->fallthrough();
    cmd->require_subcommand(1);

    auto one = std::make_shared<std::string>();
    auto two = std::make_shared<std::string>();

    auto* canon = cmd->add_subcommand("canonicalize", "Canonical representatives of a word");
    canon->fallthrough();
    canon->add_option("word", *one)->required();
    canon->callback([this, one, &status] {
      const ParsedWord parsed = parse_word(*one);
      if (parsed.reduced) err_ << "note: block reduced to " << to_string(parsed.word) << "\n";
      const Word& w = parsed.word;
      const Counts c = counts(w);
      Json doc = document("word canonicalize");
      doc["input"] = to_string(w);
      doc["counts"] = to_json(c);
      doc["l_maximal"] = is_l_maximal(w);
      doc["r_minimal"] = is_r_minimal(w);
      doc["periodic"] = PeriodicWord(letters_of(w)).to_string();
      doc["canonical_l_maximal"] = c.left ? Json(canonical_l_maximal(w).to_string()) : Json();
      doc["canonical_r_minimal"] =
          c.right ? Json(canonical_r_minimal(PeriodicWord(letters_of(w))).to_string()) : Json();
      if (c.left && c.right) {
        Json syl = Json::array();
        for (const auto& s : syllable_decomposition(w).syllables) syl.push_back({s.left, s.right});
        doc["syllables"] = std::move(syl);
      }
      print_flat(doc);
      status = kExitOk;
    });

    auto* cmp = cmd->add_subcommand("compare", "Lexicographic order with L < 0 < R");
    cmp->fallthrough();
    cmp->add_option("a", *one)->required();
    cmp->add_option("b", *two)->required();
    cmp->callback([this, one, two, &status] {
      const Word a = parse_word(*one).word;
      const Word b = parse_word(*two).word;
      Json doc = document("word compare");
      doc["a"] = to_string(a);
      doc["b"] = to_string(b);
      doc["order"] = ordering_name(lex_compare(a, b));
      print_flat(doc);
      status = kExitOk;
    });

    auto* trip = cmd->add_subcommand("trip", "Trip number (braid index) of a periodic orbit");
    trip->fallthrough();
    trip->add_option("word", *one)->required();
    trip->callback([this, one, &status] {
      const Word w = parse_word(*one).word;
      Json doc = document("word trip");
      doc["word"] = to_string(w);
      doc["trip_number"] = trip_number(w);
      print_flat(doc);
      status = kExitOk;
    });

    auto* balance = cmd->add_subcommand("balance", "Evenly distributed test and torus type");
    balance->fallthrough();
    balance->add_option("word", *one)->required();
    balance->callback([this, one, &status] {
      const Word w = parse_word(*one).word;
      Json doc = document("word balance");
      doc["word"] = to_string(w);
      doc["evenly_distributed"] = is_evenly_distributed(w);
      const auto cls = syllable_permutation_class(w);
      doc["syllable_permutation_of"] = cls ? Json::array({cls->p, cls->q}) : Json();
      doc["standard_torus_class"] = is_standard_torus_class(w);
      print_flat(doc);
      status = kExitOk;
    });

    auto p = std::make_shared<int>(0);
    auto q = std::make_shared<int>(0);
    auto standard = cmd->add_subcommand("standard", "Standard torus word W(p,q)");
    standard->fallthrough();
    standard->add_option("p", *p)->required();
    standard->add_option("q", *q)->required();
    standard->callback([this, p, q, &status] {
      Json doc = document("word standard");
      doc["p"] = *p;
      doc["q"] = *q;
      doc["word"] = standard_torus_word(*p, *q).to_string();
      print_flat(doc);
      status = kExitOk;
    });
  }

  // -------------------------------------------------------------------------
  void add_pair(CLI::App& app, int& status) {
    auto* cmd = app.add_subcommand("pair", "Farey neighbours, Farey pairs, admissibility");
    cmd->fallthrough();
    cmd->require_subcommand(1);
    auto one = std::make_shared<std::string>();
    auto two = std::make_shared<std::string>();

    auto* nb = cmd->add_subcommand("neighbors", "Are two L-maximal words Farey neighbours?");
    nb->fallthrough();
    nb->add_option("a", *one)->required();
    nb->add_option("b", *two)->required();
    nb->callback([this, one, two, &status] {
      const FiniteWord a = parse_finite(*one);
      const FiniteWord b = parse_finite(*two);
      Json doc = document("pair neighbors");
      doc["a"] = a.to_string();
      doc["b"] = b.to_string();
      doc["neighbors"] = are_farey_neighbors(a, b);
      doc["determinant"] = neighbor_determinant(a, b);
      print_flat(doc);
      status = kExitOk;
    });

    auto* make = cmd->add_subcommand("make", "Farey pair (X, m(S)) from neighbours S < X");
    make->fallthrough();
    make->add_option("x", *one)->required();
    make->add_option("s", *two)->required();
    make->callback([this, one, two, &status] {
      const FareyPair pair = make_farey_pair(parse_finite(*one), parse_finite(*two));
      Json doc = document("pair make");
      doc["pair"] = to_json(pair);
      doc["admissible"] = is_admissible(pair.x(), pair.y());
      print_doc(doc);
      status = kExitOk;
    });

    auto* adm = cmd->add_subcommand("admissible", "Kneading admissibility of (X, Y)");
    adm->fallthrough();
    adm->add_option("x", *one)->required();
    adm->add_option("y", *two)->required();
    adm->callback([this, one, two, &status] {
      const Word x = parse_word(*one).word;
      const Word y = parse_word(*two).word;
      Json doc = document("pair admissible");
      doc["X"] = to_string(x);
      doc["Y"] = to_string(y);
      doc["admissible"] = is_admissible(x, y);
      print_flat(doc);
      status = kExitOk;
    });
  }

  // -------------------------------------------------------------------------
  void add_star(CLI::App& app, int& status) {
    auto* cmd = app.add_subcommand("star", "*-products, factorization, classification");
    cmd->fallthrough();
    cmd->require_subcommand(1);
    auto x = std::make_shared<std::string>();
    auto y = std::make_shared<std::string>();
    auto s = std::make_shared<std::string>();

    auto* prod = cmd->add_subcommand("product", "(X,Y)*S");
    prod->fallthrough();
    prod->add_option("x", *x)->required();
    prod->add_option("y", *y)->required();
    prod->add_option("s", *s)->required();
    prod->callback([this, x, y, s, &status] {
      const FiniteWord z = star_product(parse_finite(*x), parse_finite(*y), parse_finite(*s));
      Json doc = document("star product");
      doc["product"] = z.to_string();
      doc["counts"] = to_json(counts(z));
      print_doc(doc);
      status = kExitOk;
    });

    auto* fac = cmd->add_subcommand("factorize", "All (X,Y)*S factorizations of a word");
    fac->fallthrough();
    fac->add_option("word", *x)->required();
    fac->callback([this, x, &status] {
      const Word w = parse_word(*x).word;
      Json doc = document("star factorize");
      doc["word"] = to_string(w);
      Json list = Json::array();
      for (const auto& f : factorize(w))
        list.push_back(Json{{"X", f.x.to_string()}, {"Y", f.y.to_string()}, {"S", f.s.to_string()}});
      doc["factorizations"] = std::move(list);
      if (structured()) {
        emit(doc);
      } else {
        out_ << "word " << doc["word"].get<std::string>() << "\n";
        if (doc["factorizations"].empty()) out_ << "irreducible\n";
        for (const auto& f : doc["factorizations"])
          out_ << "(" << f["X"].get<std::string>() << ", " << f["Y"].get<std::string>() << ") * "
               << f["S"].get<std::string>() << "\n";
      }
      status = kExitOk;
    });

    auto* cls = cmd->add_subcommand("classify", "Torus syllable-permutation report for (X,Y)*S");
    cls->fallthrough();
    cls->add_option("x", *x)->required();
    cls->add_option("y", *y)->required();
    cls->add_option("s", *s)->required();
    cls->callback([this, x, y, s, &status] {
      const FareyPair pair = farey_pair_from_words(parse_finite(*x), parse_finite(*y));
      const FiniteWord sw = parse_finite(*s);
      const TorusPermutationReport rep = classify_star(pair, sw);
      Json doc = document("star classify");
      doc["pair"] = to_json(pair);
      doc["S"] = sw.to_string();
      doc["product"] = star_product(pair, sw).to_string();
      doc["report"] = to_json(rep);
      print_doc(doc);
      status = kExitOk;
    });

    auto count = std::make_shared<int>(1000);
    auto seed = std::make_shared<std::uint64_t>(1);
    auto depth = std::make_shared<std::size_t>(8);
    auto* sweep = cmd->add_subcommand("sweep", "Seeded random products over Farey pairs");
    sweep->fallthrough();
    sweep->add_option("--count", *count)->capture_default_str();
    sweep->add_option("--seed", *seed)->capture_default_str();
    sweep->add_option("--depth", *depth, "Deepest tree level for the random pairs")
        ->capture_default_str();
    sweep->callback([this, count, seed, depth, &status] {
      if (*count < 0) throw DomainError("--count must be non-negative");
      if (*depth < 1 || *depth > kMaxTreeDepth) throw DomainError("--depth must be in 1..20");
      std::mt19937_64 rng(*seed);
      int passed = 0, failed = 0, applicable = 0;
      Json failures = Json::array();
      for (int i = 0; i < *count; ++i) {
        const FareyPair pair = random_farey_pair(rng, *depth);
        const FiniteWord sw = random_word(rng, 1, 6);
        const FiniteWord z = star_product(pair, sw);
        const Counts cz = counts(z), cx = counts(pair.x()), cy = counts(pair.y()), cs = counts(sw);
        bool ok = cz.left == cs.left * cx.left + cs.right * cy.left &&
                  cz.right == cs.left * cx.right + cs.right * cy.right;
        const TorusPermutationReport rep = classify_star(pair, sw);
        if (rep.applicable()) {
          ++applicable;
          ok = ok && 1 < rep.r && rep.r < rep.p - 1;
        }
        if (ok) {
          ++passed;
        } else {
          ++failed;
          failures.push_back(Json{{"pair", to_json(pair)}, {"S", sw.to_string()}});
        }
      }
      Json doc = document("star sweep");
      doc["seed"] = *seed;
      doc["results"] = std::move(failures);
      doc["summary"] = Json{{"passed", passed}, {"failed", failed}, {"skipped", 0},
                            {"applicable", applicable}};
      if (structured())
        emit(doc);
      else
        out_ << "passed " << passed << " failed " << failed << " applicable " << applicable << "\n";
      status = failed == 0 ? kExitOk : kExitVerificationFailed;
    });
  }

  // -------------------------------------------------------------------------
  void add_braid(CLI::App& app, int& status) {
    auto* cmd = app.add_subcommand("braid", "Lorenz braid of one or more periodic orbits");
    cmd->fallthrough();
    auto words = std::make_shared<std::vector<std::string>>();
    auto q_bound = std::make_shared<int>(100);
    cmd->add_option("words", *words, "Orbit words; finite words stand for their cyclic class")
        ->required();
    cmd->add_option("--q-bound", *q_bound, "Largest q' for torus-knot matches")
        ->capture_default_str();
    cmd->callback([this, words, q_bound, &status] {
      std::vector<PeriodicWord> orbits;
      for (const auto& text : *words) orbits.emplace_back(letters_of(parse_word(text).word));
      const LorenzBraid b = lorenz_braid(orbits);
      Json doc = document("braid");
      doc["braid"] = to_json(b);
      if (cycle_count(b) == 1) {
        Json matches = Json::array();
        for (const auto& t : torus_matches(static_cast<int>(braid_index(orbits.front())),
                                           static_cast<long long>(positive_braid_genus(b)), *q_bound))
          matches.push_back(Json::array({t.p, t.q}));
        doc["torus_matches"] = std::move(matches);
      }
      if (structured()) {
        emit(doc);
      } else {
        const Json& bj = doc["braid"];
        out_ << "perm " << format_permutation(b.perm()) << "\n";
        out_ << "artin " << format_artin_word(emit_braid_word(b)) << "\n";
        out_ << "strands " << b.strands() << "\n";
        out_ << "crossings " << crossing_count(b) << "\n";
        out_ << "components " << cycle_count(b) << "\n";
        if (bj.contains("genus")) {
          out_ << "genus " << bj["genus"].get<std::size_t>() << "\n";
          out_ << "braid_index " << bj["braid_index"].get<std::size_t>() << "\n";
          out_ << "torus_matches";
          for (const auto& m : doc["torus_matches"])
            out_ << " T(" << m[0].get<int>() << "," << m[1].get<int>() << ")";
          out_ << "\n";
        }
      }
      status = kExitOk;
    });
  }

  // -------------------------------------------------------------------------
  struct SweepOptions {
    std::string families = "all";
    std::string k = "1..3";
    std::string n = "2..9";
  };

  struct SweepItem {
    int family;
    int k;
    int n;
    std::string skip_reason;
  };

  static std::vector<SweepItem> expand(const SweepOptions& opt) {
    const std::vector<int> ids = parse_families(opt.families);
    const IntRange ks = parse_range(opt.k);
    const IntRange ns = parse_range(opt.n);
    if (ks.lo <= 0) throw DomainError("k>0 required");
    if (ns.lo <= 1) throw DomainError("n>1 required");
    std::vector<SweepItem> items;
    for (int id : ids)
      for (int k = ks.lo; k <= ks.hi; ++k)
        for (int n = ns.lo; n <= ns.hi; ++n)
          items.push_back({id, k, n, family_parameter_violation(id, k, n)});
    return items;
  }

  static void add_sweep_options(CLI::App* cmd, const std::shared_ptr<SweepOptions>& opt) {
    cmd->add_option("--families", opt->families, "all, an id, a range a..b, or a list")
        ->capture_default_str();
    cmd->add_option("--k", opt->k, "k range a..b")->capture_default_str();
    cmd->add_option("--n", opt->n, "n range a..b")->capture_default_str();
  }

  void add_family(CLI::App& app, int& status) {
    auto* cmd = app.add_subcommand("family", "Hyperbolic families of Farey-pair products");
    cmd->fallthrough();
    cmd->require_subcommand(1);

    auto gen_opt = std::make_shared<SweepOptions>();
    auto* gen = cmd->add_subcommand("generate", "Build family instances");
    gen->fallthrough();
    add_sweep_options(gen, gen_opt);
    gen->callback([this, gen_opt, &status] { status = run_sweep("family generate", *gen_opt, Mode::Generate); });

    auto ver_opt = std::make_shared<SweepOptions>();
    auto* ver = cmd->add_subcommand("verify", "Verify certificates for family instances");
    ver->fallthrough();
    add_sweep_options(ver, ver_opt);
    ver->callback([this, ver_opt, &status] { status = run_sweep("family verify", *ver_opt, Mode::Verify); });

    auto mir_opt = std::make_shared<SweepOptions>();
    auto* mir = cmd->add_subcommand("mirror", "Mirror instances under L <-> R exchange");
    mir->fallthrough();
    add_sweep_options(mir, mir_opt);
    mir->callback([this, mir_opt, &status] { status = run_sweep("family mirror", *mir_opt, Mode::Mirror); });
  }

  enum class Mode { Generate, Verify, Mirror };

  int run_sweep(const std::string& command, const SweepOptions& opt, Mode mode) {
    const std::vector<SweepItem> items = expand(opt);
    int passed = 0, failed = 0, skipped = 0;
    Json results = Json::array();
    for (const SweepItem& item : items) {
      Json entry{{"family", item.family}, {"k", item.k}, {"n", item.n}};
      if (!item.skip_reason.empty()) {
        ++skipped;
        entry["status"] = "skipped";
        entry["reason"] = item.skip_reason;
        results.push_back(std::move(entry));
        continue;
      }
      bool ok = true;
      std::string reason;
      try {
        const FamilyInstance inst = family_instance(item.family, item.k, item.n);
        switch (mode) {
          case Mode::Generate:
            entry["instance"] = to_json(inst);
            break;
          case Mode::Verify: {
            const Certificate cert = verify_instance(inst);
            ok = cert.issued();
            for (const auto& c : cert.failed_clauses()) reason += (reason.empty() ? "" : ",") + c;
            entry["certificate"] = to_json(cert);
            break;
          }
          case Mode::Mirror: {
            const FamilyInstance m = mirror(inst);
            const auto& a = inst.report;
            const auto& b = m.report;
            ok = a.p == b.p && a.q == b.q && a.r == b.r && b.verdict == a.verdict;
            if (!ok) reason = "mirror arithmetic differs";
            entry["instance"] = to_json(m);
            break;
          }
        }
      } catch (const std::exception& e) {
        ok = false;
        reason = e.what();
      }
      entry["status"] = ok ? "passed" : "failed";
      if (!ok) entry["reason"] = reason;
      ok ? ++passed : ++failed;
      results.push_back(std::move(entry));
    }

    Json doc = document(command);
    doc["results"] = std::move(results);
    doc["summary"] = Json{{"passed", passed}, {"failed", failed}, {"skipped", skipped}};
    if (structured()) {
      emit(doc);
    } else {
      for (const auto& e : doc["results"]) {
        out_ << "family " << e["family"].get<int>() << " k=" << e["k"].get<int>()
             << " n=" << e["n"].get<int>() << " " << e["status"].get<std::string>();
        if (e.contains("reason")) out_ << " (" << e["reason"].get<std::string>() << ")";
        if (e.contains("certificate")) {
          const auto& c = e["certificate"];
          out_ << " " << c["kind"].get<std::string>() << " T(" << c["p"].get<int>() << ","
               << c["q"].get<int>() << ")";
        }
        if (e.contains("instance")) {
          const auto& in = e["instance"];
          out_ << " (" << in["pair"]["X"].get<std::string>() << ", "
               << in["pair"]["Y"].get<std::string>() << ") * " << in["S"].get<std::string>();
        }
        out_ << "\n";
      }
      out_ << "passed " << passed << " failed " << failed << " skipped " << skipped << "\n";
    }
    return failed == 0 ? kExitOk : kExitVerificationFailed;
  }

  // -------------------------------------------------------------------------
  void print_flat(const Json& doc) {
    if (structured()) {
      emit(doc);
      return;
    }
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      if (it.key() == "schema_version" || it.key() == "command") continue;
      out_ << it.key() << ' ';
      if (it->is_string())
        out_ << it->get<std::string>();
      else
        out_ << it->dump();
      out_ << '\n';
    }
  }

  void print_doc(const Json& doc) {
    if (structured()) {
      emit(doc);
      return;
    }
    print_nested(doc, "");
  }

  void print_nested(const Json& node, const std::string& prefix) {
    for (auto it = node.begin(); it != node.end(); ++it) {
      if (prefix.empty() && (it.key() == "schema_version" || it.key() == "command")) continue;
      const std::string key = prefix + it.key();
      if (it->is_object()) {
        print_nested(*it, key + ".");
        continue;
      }
      out_ << key << ' ' << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
    }
  }

  std::ostream& out_;
  std::ostream& err_;
  std::string format_ = "text";
};

inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
  App app(out, err);
  return app.run(args);
}

}  // namespace lorenz::cli
