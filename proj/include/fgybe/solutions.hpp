// The local-rule checker for the three defining equations [T], [M], [B],
// symmetry operations (dual, inverse via nielsen.hpp), the thirteen-family
// catalog with classifier, and the exhaustive census of solutions up to a
// total length bound, optionally sharded across threads.
#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "fgybe/endomorphism.hpp"
#include "fgybe/nielsen.hpp"
#include "fgybe/word.hpp"

namespace fgybe {

struct EquationCheck {
  bool holds;
  Word lhs;  // both sides evaluated in F_3
  Word rhs;
};

namespace detail {

// W(u, v) for F_3 arguments: evaluate the rank-2 template at (u, v).
inline Word eval2(const Word& tmpl, const Word& u, const Word& v) {
  std::vector<Word> im = {u, v};
  return substitute(tmpl, im);
}

}  // namespace detail

// [T]  W(W(x,y), W(V(x,y), z)) = W(x, W(y,z))
inline EquationCheck check_T(const SolutionPair& p) {
  using detail::eval2;
  Word x = Word::generator(3, 1), y = Word::generator(3, 2),
       z = Word::generator(3, 3);
  Word wxy = eval2(p.W, x, y), vxy = eval2(p.V, x, y);
  Word wyz = eval2(p.W, y, z);
  Word lhs = eval2(p.W, wxy, eval2(p.W, vxy, z));
  Word rhs = eval2(p.W, x, wyz);
  return EquationCheck{lhs == rhs, lhs, rhs};
}

// [M]  V(W(x,y), W(V(x,y), z)) = W(V(x, W(y,z)), V(y,z))
inline EquationCheck check_M(const SolutionPair& p) {
  using detail::eval2;
  Word x = Word::generator(3, 1), y = Word::generator(3, 2),
       z = Word::generator(3, 3);
  Word wxy = eval2(p.W, x, y), vxy = eval2(p.V, x, y);
  Word wyz = eval2(p.W, y, z), vyz = eval2(p.V, y, z);
  Word lhs = eval2(p.V, wxy, eval2(p.W, vxy, z));
  Word rhs = eval2(p.W, eval2(p.V, x, wyz), vyz);
  return EquationCheck{lhs == rhs, lhs, rhs};
}

// [B]  V(V(x,y), z) = V(V(x, W(y,z)), V(y,z))
inline EquationCheck check_B(const SolutionPair& p) {
  using detail::eval2;
  Word x = Word::generator(3, 1), y = Word::generator(3, 2),
       z = Word::generator(3, 3);
  Word vxy = eval2(p.V, x, y);
  Word wyz = eval2(p.W, y, z), vyz = eval2(p.V, y, z);
  Word lhs = eval2(p.V, vxy, z);
  Word rhs = eval2(p.V, eval2(p.V, x, wyz), vyz);
  return EquationCheck{lhs == rhs, lhs, rhs};
}

struct CheckReport {
  bool t_holds = false, m_holds = false, b_holds = false;
  std::optional<EquationCheck> t_witness, m_witness, b_witness;
  bool is_solution() const { return t_holds && m_holds && b_holds; }
};

inline CheckReport is_solution(const SolutionPair& p) {
  CheckReport r;
  EquationCheck t = check_T(p), m = check_M(p), b = check_B(p);
  r.t_holds = t.holds;
  r.m_holds = m.holds;
  r.b_holds = b.holds;
  if (!t.holds) r.t_witness = t;
  if (!m.holds) r.m_witness = m;
  if (!b.holds) r.b_witness = b;
  return r;
}

// (W, V) -> (V(y,x), W(y,x)); an involution that preserves solutions.
inline SolutionPair dual(const SolutionPair& p) {
  Word x = Word::generator(2, 1), y = Word::generator(2, 2);
  return SolutionPair(detail::eval2(p.V, y, x), detail::eval2(p.W, y, x));
}

// True iff the induced map fixes the boundary word: red(W * V) = x y.
inline bool is_boundary_fixing(const SolutionPair& p) {
  return p.W * p.V == Word::generator(2, 1) * Word::generator(2, 2);
}

// --- the thirteen-family catalog --------------------------------------

struct FamilyId {
  int id = 0;  // 1..13
  std::optional<std::int64_t> s;  // family 13 only
  std::optional<std::int64_t> m;  // families 1, 4, 7, 13
  bool dualized = false;

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

inline bool family_less(const FamilyId& a, const FamilyId& b) {
  if (a.id != b.id) return a.id < b.id;
  std::int64_t as = a.s.value_or(0), bs = b.s.value_or(0);
  if (as != bs) return as < bs;
  std::int64_t am = a.m.value_or(0), bm = b.m.value_or(0);
  if (am != bm) return am < bm;
  return a.dualized < b.dualized;
}

// "F7[m=0]", "F13[s=1,m=1]"; a trailing-star id marks a dualized match:
// "F7*[m=1]".
inline std::string format_family(const FamilyId& f) {
  std::string out = "F" + std::to_string(f.id);
  if (f.dualized) out += '*';
  if (f.s || f.m) {
    out += '[';
    if (f.s) out += "s=" + std::to_string(*f.s);
    if (f.s && f.m) out += ',';
    if (f.m) out += "m=" + std::to_string(*f.m);
    out += ']';
  }
  return out;
}

inline std::string format_family_set(const std::vector<FamilyId>& fs) {
  std::string out;
  for (const FamilyId& f : fs) {
    if (!out.empty()) out += ',';
    out += format_family(f);
  }
  return out;
}

inline bool family_takes_m(int id) {
  return id == 1 || id == 4 || id == 7 || id == 13;
}
inline bool family_takes_s(int id) { return id == 13; }

// The literal catalog pairs; parameters are exponents.
inline SolutionPair family_instantiate(const FamilyId& f) {
  if (f.id < 1 || f.id > 13)
    throw Error("family id " + std::to_string(f.id) + " out of range");
  if (family_takes_m(f.id) != f.m.has_value())
    throw Error("family " + std::to_string(f.id) +
                (f.m ? ": unexpected parameter m" : ": missing parameter m"));
  if (family_takes_s(f.id) != f.s.has_value())
    throw Error("family " + std::to_string(f.id) +
                (f.s ? ": unexpected parameter s" : ": missing parameter s"));
  Word one(2);
  Word x = Word::generator(2, 1), y = Word::generator(2, 2);
  std::int64_t m = f.m.value_or(0), s = f.s.value_or(0);
  SolutionPair p;
  switch (f.id) {
    case 1: p = SolutionPair(one, x.pow(m)); break;
    case 2: p = SolutionPair(one, y); break;
    case 3: p = SolutionPair(one, x * y); break;
    case 4: p = SolutionPair(x, x.pow(m)); break;
    case 5: p = SolutionPair(x, y); break;
    case 6: p = SolutionPair(y, x.inverse()); break;
    case 7: p = SolutionPair(y, y.pow(-m) * x * y.pow(m)); break;
    case 8: p = SolutionPair(y, y * x.inverse() * y); break;
    case 9: p = SolutionPair(y.inverse(), x.inverse()); break;
    case 10: p = SolutionPair(y.inverse(), y * x * y); break;
    case 11: p = SolutionPair(x * y.inverse() * x.inverse(), x * y.pow(2)); break;
    case 12: p = SolutionPair(x.inverse() * y.inverse() * x, y.pow(2) * x); break;
    case 13: p = SolutionPair(y.pow(s), x.pow(m)); break;
  }
  return f.dualized ? dual(p) : p;
}

// Every catalog match for the pair.  Parameters are exponents, so the
// sweep |s|, |m| <= total length is exhaustive.  Within each family,
// dualized matches are reported only when the family has no plain match;
// a pair equal to both a plain and a dualized instance of one family is
// listed once, as plain.  (Family 13 is closed under dual with swapped
// parameters, so it never reports dualized matches.)
inline std::vector<FamilyId> classify(const SolutionPair& p) {
  std::int64_t bound = p.W.length() + p.V.length();
  std::vector<FamilyId> out;
  auto match_family = [&](int id, auto&& for_each_params) {
    std::vector<FamilyId> plain, dualized;
    for_each_params([&](std::optional<std::int64_t> s,
                        std::optional<std::int64_t> m) {
      FamilyId f{id, s, m, false};
      if (family_instantiate(f) == p) plain.push_back(f);
      f.dualized = true;
      if (family_instantiate(f) == p) dualized.push_back(f);
    });
    auto& chosen = plain.empty() ? dualized : plain;
    out.insert(out.end(), chosen.begin(), chosen.end());
  };
  for (int id = 1; id <= 13; ++id) {
    if (family_takes_s(id)) {
      match_family(id, [&](auto&& visit) {
        for (std::int64_t s = -bound; s <= bound; ++s)
          for (std::int64_t m = -bound; m <= bound; ++m) visit(s, m);
      });
    } else if (family_takes_m(id)) {
      match_family(id, [&](auto&& visit) {
        for (std::int64_t m = -bound; m <= bound; ++m)
          visit(std::nullopt, m);
      });
    } else {
      match_family(id,
                   [&](auto&& visit) { visit(std::nullopt, std::nullopt); });
    }
  }
  std::sort(out.begin(), out.end(), family_less);
  return out;
}

// --- census ------------------------------------------------------------

struct SolutionRecord {
  SolutionPair pair;
  CheckReport report;
  std::vector<FamilyId> families;
};

namespace detail {

struct CensusShard {
  std::int64_t w_length;
  int first_letter;  // letter_order value; -1 for the empty W
};

// Shards partition the W axis by (|W|, first letter); merging in shard
// order reproduces the sequential W-major order exactly.
inline std::vector<CensusShard> census_shards(std::int64_t max_total_length,
                                              int rank) {
  std::vector<CensusShard> shards;
  shards.push_back(CensusShard{0, -1});
  for (std::int64_t l = 1; l <= max_total_length; ++l)
    for (int f = 0; f < 2 * rank; ++f) shards.push_back(CensusShard{l, f});
  return shards;
}

}  // namespace detail

// All solutions with |W| + |V| <= max_total_length, in W-major order:
// W ascending in the word order, then V ascending among lengths that
// still fit the budget.  `progress(done, total)` reports finished shards.
inline std::vector<SolutionRecord> enumerate_solutions(
    std::int64_t max_total_length, int jobs = 1,
    const std::function<void(std::size_t, std::size_t)>& progress = {}) {
  if (max_total_length < 0) throw Error("negative length bound");
  if (jobs < 1) throw Error("jobs must be >= 1");

  std::vector<std::vector<Word>> by_length(
      static_cast<std::size_t>(max_total_length) + 1);
  for (Word& w : all_reduced_words(2, max_total_length))
    by_length[static_cast<std::size_t>(w.length())].push_back(std::move(w));

  std::vector<detail::CensusShard> shards =
      detail::census_shards(max_total_length, 2);
  std::vector<std::vector<SolutionRecord>> results(shards.size());

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex progress_mu;

  auto run_shard = [&](const detail::CensusShard& shard,
                       std::vector<SolutionRecord>& out) {
    for (const Word& w : by_length[static_cast<std::size_t>(shard.w_length)]) {
      if (shard.first_letter >= 0) {
        const Syllable& s0 = w.syllables()[0];
        if (letter_order(s0.gen, s0.exp < 0 ? -1 : +1) != shard.first_letter)
          continue;
      }
      std::int64_t v_budget = max_total_length - shard.w_length;
      for (std::int64_t lv = 0; lv <= v_budget; ++lv)
        for (const Word& v : by_length[static_cast<std::size_t>(lv)]) {
          SolutionPair p(w, v);
          if (!check_T(p).holds) continue;  // cheapest rejection first
          CheckReport r = is_solution(p);
          if (!r.is_solution()) continue;
          out.push_back(SolutionRecord{p, r, classify(p)});
        }
    }
  };

  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= shards.size()) return;
      run_shard(shards[i], results[i]);
      std::size_t d = done.fetch_add(1) + 1;
      if (progress) {
        std::lock_guard<std::mutex> lock(progress_mu);
        progress(d, shards.size());
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::vector<SolutionRecord> merged;
  for (std::vector<SolutionRecord>& r : results)
    for (SolutionRecord& rec : r) merged.push_back(std::move(rec));
  return merged;
}

// --- dual/inverse orbits ------------------------------------------------

struct PairLess {
  bool operator()(const SolutionPair& a, const SolutionPair& b) const {
    return pair_less(a, b);
  }
};

// Closure of a solution under dual and (where defined) inverse.  Members
// are sorted; the representative is the least member.
struct Orbit {
  SolutionPair representative;
  std::vector<SolutionPair> members;
};

inline Orbit solution_orbit(const SolutionPair& start) {
  std::set<SolutionPair, PairLess> seen;
  std::vector<SolutionPair> queue = {start};
  seen.insert(start);
  while (!queue.empty()) {
    if (seen.size() > 64)
      throw Error("orbit of " + format_pair(start) + " failed to close");
    SolutionPair p = queue.back();
    queue.pop_back();
    std::vector<SolutionPair> nexts = {dual(p)};
    if (is_automorphism(p)) nexts.push_back(invert_pair(p));
    for (SolutionPair& q : nexts)
      if (seen.insert(q).second) queue.push_back(q);
  }
  Orbit o;
  o.members.assign(seen.begin(), seen.end());
  o.representative = o.members.front();
  return o;
}

// Groups census records into orbits, returned with representatives in
// census order of first appearance.
inline std::vector<Orbit> group_orbits(
    const std::vector<SolutionRecord>& records) {
  std::vector<Orbit> orbits;
  std::set<SolutionPair, PairLess> assigned;
  for (const SolutionRecord& rec : records) {
    if (assigned.count(rec.pair)) continue;
    Orbit o = solution_orbit(rec.pair);
    for (const SolutionPair& m : o.members) assigned.insert(m);
    orbits.push_back(std::move(o));
  }
  return orbits;
}

}  // namespace fgybe
