// fgybe command line: check, enumerate and classify pair solutions on
// F_2, compute their dual/inverse symmetries, apply braids through the
// induced representation, and derive closure presentations with abelian
// invariants.  Text mode is for people; --format records emits one JSON
// object per line with a fixed field order for machine consumption.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fgybe/braid.hpp"
#include "fgybe/endomorphism.hpp"
#include "fgybe/invariant.hpp"
#include "fgybe/nielsen.hpp"
#include "fgybe/solutions.hpp"
#include "fgybe/word.hpp"

namespace {

using namespace fgybe;
using nlohmann::ordered_json;

// Words longer than this print as a truncated prefix with a length note.
constexpr std::int64_t kMaxDisplayLetters = 200;

std::string display_word(const Word& u) {
  if (u.length() <= kMaxDisplayLetters) return format_word(u);
  std::vector<Letter> ls = u.letters();
  ls.resize(static_cast<std::size_t>(kMaxDisplayLetters));
  return format_word(Word::from_letters(u.rank(), ls)) + " ...(" +
         std::to_string(u.length()) + " letters)";
}

SolutionPair parse_pair_args(const std::string& w, const std::string& v) {
  return SolutionPair(parse_word(w, 2, 2), parse_word(v, 2, 2));
}

ordered_json family_array(const std::vector<FamilyId>& fams) {
  ordered_json a = ordered_json::array();
  for (const FamilyId& f : fams) a.push_back(format_family(f));
  return a;
}

int run_check(const std::string& wt, const std::string& vt, bool records) {
  SolutionPair p = parse_pair_args(wt, vt);
  CheckReport r = is_solution(p);
  if (records) {
    ordered_json j;
    j["cmd"] = "check";
    j["w"] = format_word(p.W);
    j["v"] = format_word(p.V);
    j["t"] = r.t_holds;
    j["m"] = r.m_holds;
    j["b"] = r.b_holds;
    j["solution"] = r.is_solution();
    auto witness = [&](const char* key,
                       const std::optional<EquationCheck>& wc) {
      if (!wc) return;
      j[std::string(key) + "_lhs"] = display_word(wc->lhs);
      j[std::string(key) + "_rhs"] = display_word(wc->rhs);
    };
    witness("t", r.t_witness);
    witness("m", r.m_witness);
    witness("b", r.b_witness);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "T " << (r.t_holds ? "ok" : "fails") << ", M "
              << (r.m_holds ? "ok" : "fails") << ", B "
              << (r.b_holds ? "ok" : "fails") << '\n';
    auto witness = [](const char* tag,
                      const std::optional<EquationCheck>& wc) {
      if (!wc) return;
      std::cout << '[' << tag << "] lhs: " << display_word(wc->lhs) << '\n'
                << "    rhs: " << display_word(wc->rhs) << '\n';
    };
    witness("T", r.t_witness);
    witness("M", r.m_witness);
    witness("B", r.b_witness);
  }
  return r.is_solution() ? 0 : 1;
}

int run_enumerate(std::int64_t max_len, int jobs, bool records) {
  auto progress = [](std::size_t done, std::size_t total) {
    std::cerr << "progress: " << done << '/' << total << " shards\n";
  };
  std::vector<SolutionRecord> census =
      enumerate_solutions(max_len, jobs, progress);
  std::vector<Orbit> orbits = group_orbits(census);
  std::map<SolutionPair, SolutionPair, PairLess> rep;
  for (const Orbit& o : orbits)
    for (const SolutionPair& m : o.members) rep[m] = o.representative;

  for (const SolutionRecord& rec : census) {
    if (records) {
      ordered_json j;
      j["cmd"] = "enumerate";
      j["w"] = format_word(rec.pair.W);
      j["v"] = format_word(rec.pair.V);
      j["families"] = family_array(rec.families);
      j["orbit"] = format_pair(rep.at(rec.pair));
      std::cout << j.dump() << '\n';
    } else {
      std::cout << format_pair(rec.pair) << "  "
                << (rec.families.empty() ? "unclassified"
                                         : format_family_set(rec.families))
                << "  orbit=" << format_pair(rep.at(rec.pair)) << '\n';
    }
  }
  if (records) {
    ordered_json j;
    j["cmd"] = "enumerate";
    j["solutions"] = census.size();
    j["orbits"] = orbits.size();
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "solutions: " << census.size() << ", orbits: "
              << orbits.size() << '\n';
  }
  return 0;
}

int run_classify(const std::string& wt, const std::string& vt, bool records) {
  SolutionPair p = parse_pair_args(wt, vt);
  bool ok = is_solution(p).is_solution();
  std::vector<FamilyId> fams;
  if (ok) fams = classify(p);
  if (records) {
    ordered_json j;
    j["cmd"] = "classify";
    j["w"] = format_word(p.W);
    j["v"] = format_word(p.V);
    j["solution"] = ok;
    j["families"] = family_array(fams);
    std::cout << j.dump() << '\n';
  } else if (!ok) {
    std::cout << "not a solution\n";
  } else {
    std::cout << (fams.empty() ? "unclassified" : format_family_set(fams))
              << '\n';
  }
  return ok ? 0 : 1;
}

int run_symmetry(bool want_inverse, const std::string& wt,
                 const std::string& vt, bool records) {
  SolutionPair p = parse_pair_args(wt, vt);
  SolutionPair result = want_inverse ? invert_pair(p) : dual(p);
  if (records) {
    ordered_json j;
    j["cmd"] = want_inverse ? "inverse" : "dual";
    j["w"] = format_word(p.W);
    j["v"] = format_word(p.V);
    j["result"] = format_pair(result);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << format_pair(result) << '\n';
  }
  return 0;
}

int run_braid_verify(const std::string& wt, const std::string& vt,
                     int strands, bool records) {
  SolutionPair p = parse_pair_args(wt, vt);
  bool ok = verify_braid_relations(p, strands);
  if (records) {
    ordered_json j;
    j["cmd"] = "braid-verify";
    j["strands"] = strands;
    j["w"] = format_word(p.W);
    j["v"] = format_word(p.V);
    j["holds"] = ok;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << (ok ? "relations hold" : "relations fail") << '\n';
  }
  return ok ? 0 : 1;
}

int run_braid_apply(const std::string& braid_text, const std::string& wt,
                    const std::string& vt, int strands, bool records) {
  SolutionPair p = parse_pair_args(wt, vt);
  BraidWord b = parse_braid(braid_text, strands);
  Endomorphism e = braid_to_endo(b, p);
  if (records) {
    ordered_json j;
    j["cmd"] = "braid-apply";
    j["braid"] = format_braid(b);
    j["strands"] = strands;
    j["w"] = format_word(p.W);
    j["v"] = format_word(p.V);
    ordered_json images = ordered_json::array();
    for (const Word& u : e.images()) images.push_back(format_word(u));
    j["images"] = images;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << format_endomorphism(e);
  }
  return 0;
}

int run_invariant(const std::string& braid_text, const std::string& wt,
                  const std::string& vt, int strands, bool records) {
  SolutionPair p = parse_pair_args(wt, vt);
  BraidWord b = parse_braid(braid_text, strands);
  Presentation pres = closure_presentation(b, p);
  Presentation simp = simplify(pres);
  AbelianInvariants ab = abelian_invariants(pres);
  if (records) {
    ordered_json j;
    j["cmd"] = "invariant";
    j["braid"] = format_braid(b);
    j["strands"] = strands;
    j["w"] = format_word(p.W);
    j["v"] = format_word(p.V);
    ordered_json rel = ordered_json::array();
    for (const Word& r : pres.relators) rel.push_back(format_word(r));
    j["relators"] = rel;
    j["simplified_gens"] = simp.n_generators;
    ordered_json srel = ordered_json::array();
    for (const Word& r : simp.relators) srel.push_back(format_word(r));
    j["simplified_relators"] = srel;
    j["free_rank"] = ab.free_rank;
    ordered_json tor = ordered_json::array();
    for (const Integer& d : ab.torsion) tor.push_back(d.str());
    j["torsion"] = tor;
    j["abelian"] = format_abelian(ab);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << format_presentation(pres) << "simplified:\n"
              << format_presentation(simp) << "abelian: " << format_abelian(ab)
              << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Pair solutions (W, V) of the Yang-Baxter conditions on the free "
      "group F_2: checking, enumeration, classification, symmetries, "
      "braid actions, and closure invariants"};
  app.require_subcommand(1);

  std::string fmt = "text";
  std::string w_text, v_text, braid_text;
  std::int64_t max_len = 0;
  int jobs = 1;
  int strands = 3;
  std::uint64_t seed = 20260823;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", fmt,
                    "output mode: text or records (one JSON object per line)")
        ->check(CLI::IsMember({"text", "records"}));
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", seed,
                    "RNG seed (reserved; every subcommand is deterministic)");
  };
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("W", w_text, "first word of the pair, e.g. \"y\"")
        ->required();
    sub->add_option("V", v_text, "second word of the pair, e.g. \"y^-1 x y\"")
        ->required();
  };

  CLI::App* c_check = app.add_subcommand(
      "check", "verify the three pair equations for (W, V)");
  add_pair(c_check);
  add_format(c_check);
  add_seed(c_check);

  CLI::App* c_enum = app.add_subcommand(
      "enumerate", "list every solution with |W| + |V| <= the bound");
  c_enum->add_option("--max-len", max_len, "bound on |W| + |V|")
      ->required()
      ->check(CLI::NonNegativeNumber);
  c_enum->add_option("--jobs", jobs, "worker threads for the scan")
      ->check(CLI::Range(1, 256));
  add_format(c_enum);
  add_seed(c_enum);

  CLI::App* c_classify = app.add_subcommand(
      "classify", "name the catalog families matching a solution");
  add_pair(c_classify);
  add_format(c_classify);
  add_seed(c_classify);

  CLI::App* c_dual =
      app.add_subcommand("dual", "the dual solution (V(y,x), W(y,x))");
  add_pair(c_dual);
  add_format(c_dual);
  add_seed(c_dual);

  CLI::App* c_inverse = app.add_subcommand(
      "inverse", "the pair inducing the inverse automorphism");
  add_pair(c_inverse);
  add_format(c_inverse);
  add_seed(c_inverse);

  CLI::App* c_verify = app.add_subcommand(
      "braid-verify", "check the braid relations for the pair's action");
  c_verify->add_option("--strands", strands, "strand count (>= 3)")
      ->required()
      ->check(CLI::Range(3, 64));
  add_pair(c_verify);
  add_format(c_verify);
  add_seed(c_verify);

  CLI::App* c_apply = app.add_subcommand(
      "braid-apply", "the endomorphism a braid induces for the pair");
  c_apply->add_option("BRAID", braid_text, "braid word, e.g. \"s1 s2^-1\"")
      ->required();
  c_apply->add_option("--strands", strands, "strand count")
      ->required()
      ->check(CLI::Range(1, 64));
  add_pair(c_apply);
  add_format(c_apply);
  add_seed(c_apply);

  CLI::App* c_inv = app.add_subcommand(
      "invariant", "closure presentation and abelian invariants");
  c_inv->add_option("BRAID", braid_text, "braid word, e.g. \"s1^3\"")
      ->required();
  c_inv->add_option("--strands", strands, "strand count")
      ->required()
      ->check(CLI::Range(1, 64));
  add_pair(c_inv);
  add_format(c_inv);
  add_seed(c_inv);

  int exit_code = 0;
  c_check->callback(
      [&] { exit_code = run_check(w_text, v_text, fmt == "records"); });
  c_enum->callback(
      [&] { exit_code = run_enumerate(max_len, jobs, fmt == "records"); });
  c_classify->callback(
      [&] { exit_code = run_classify(w_text, v_text, fmt == "records"); });
  c_dual->callback([&] {
    exit_code = run_symmetry(false, w_text, v_text, fmt == "records");
  });
  c_inverse->callback([&] {
    exit_code = run_symmetry(true, w_text, v_text, fmt == "records");
  });
  c_verify->callback([&] {
    exit_code = run_braid_verify(w_text, v_text, strands, fmt == "records");
  });
  c_apply->callback([&] {
    exit_code =
        run_braid_apply(braid_text, w_text, v_text, strands, fmt == "records");
  });
  c_inv->callback([&] {
    exit_code =
        run_invariant(braid_text, w_text, v_text, strands, fmt == "records");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const fgybe::ParseError& e) {
    std::cerr << "fgybe: " << e.what() << '\n';
    return 2;
  } catch (const fgybe::Error& e) {
    std::cerr << "fgybe: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
