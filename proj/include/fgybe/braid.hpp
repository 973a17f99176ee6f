// Braid words on an explicit strand count, the induced representation of
// the braid group (or the positive braid monoid) on End(F_n) for a given
// pair (W, V), and the braid-relation check for such pairs.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fgybe/endomorphism.hpp"
#include "fgybe/nielsen.hpp"
#include "fgybe/solutions.hpp"
#include "fgybe/word.hpp"

namespace fgybe {

// One Artin generator sigma_index^sign, sign in {+1, -1}.
struct BraidLetter {
  int index;
  int sign;
  friend bool operator==(BraidLetter, BraidLetter) = default;
};

// A word in the braid group on `strands` strands.  The strand count is
// always explicit: sigma_1 names different endomorphisms on 2 and on 3
// strands, so it can never be inferred from the letters alone.
struct BraidWord {
  int strands = 1;
  std::vector<BraidLetter> letters;

  BraidWord() = default;
  explicit BraidWord(int n, std::vector<BraidLetter> ls = {})
      : strands(n), letters(std::move(ls)) {
    if (strands < 1) throw Error("braid word needs at least one strand");
    for (const BraidLetter& l : letters) {
      if (l.index < 1 || l.index > strands - 1)
        throw Error("braid generator s" + std::to_string(l.index) +
                    " is out of range on " + std::to_string(strands) +
                    " strands");
      if (l.sign != 1 && l.sign != -1)
        throw Error("braid letter sign must be +1 or -1");
    }
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

inline BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands)
    throw Error("cannot concatenate braids with different strand counts");
  std::vector<BraidLetter> ls = a.letters;
  ls.insert(ls.end(), b.letters.begin(), b.letters.end());
  return BraidWord(a.strands, std::move(ls));
}

inline BraidWord inverse(const BraidWord& b) {
  std::vector<BraidLetter> ls;
  ls.reserve(b.letters.size());
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
    ls.push_back({it->index, -it->sign});
  return BraidWord(b.strands, std::move(ls));
}

// Grammar: braid := "1" | term+ ; term := "s" digits ("^" integer)? .
// An exponent expands into |k| copies of the letter, so "s2^-3" is three
// sigma_2^-1 letters and "1" is the empty braid.
inline BraidWord parse_braid(std::string_view text, int strands) {
  if (strands < 1) throw Error("braid word needs at least one strand");
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto parse_int = [&]() -> std::int64_t {
    std::size_t start = i;
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
      neg = text[i] == '-';
      ++i;
    }
    if (i >= text.size() || text[i] < '0' || text[i] > '9')
      throw ParseError("expected integer", i);
    std::int64_t v = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      int d = text[i] - '0';
      if (v > (INT64_MAX - d) / 10) throw ParseError("integer overflow", start);
      v = v * 10 + d;
      ++i;
    }
    return neg ? -v : v;
  };

  skip_ws();
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip_ws();
    if (i != text.size()) throw ParseError("unexpected input after \"1\"", i);
    return BraidWord(strands);
  }

  std::vector<BraidLetter> letters;
  bool any = false;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != 's')
      throw ParseError(std::string("unexpected character '") + text[i] + "'",
                       i);
    std::size_t term_pos = i;
    ++i;
    if (i >= text.size() || text[i] < '0' || text[i] > '9')
      throw ParseError("expected generator index after 's'", i);
    std::int64_t v = parse_int();
    if (v < 1 || v > strands - 1)
      throw ParseError("generator s" + std::to_string(v) +
                           " is out of range on " + std::to_string(strands) +
                           " strands",
                       term_pos);
    std::int64_t exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t exp_pos = i;
      exp = parse_int();
      if (exp == 0) throw ParseError("zero exponent", exp_pos);
      if (exp > 100000 || exp < -100000)
        throw ParseError("braid exponent too large to expand", exp_pos);
    }
    BraidLetter l{static_cast<int>(v), exp < 0 ? -1 : 1};
    for (std::int64_t k = std::llabs(exp); k > 0; --k) letters.push_back(l);
    any = true;
  }
  if (!any) throw ParseError("empty braid expression (write \"1\")", 0);
  return BraidWord(strands, std::move(letters));
}

// Inverse of parse_braid up to run-length grouping: maximal runs of one
// letter print as s<i>^k.
inline std::string format_braid(const BraidWord& b) {
  if (b.letters.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < b.letters.size()) {
    std::size_t j = i;
    while (j < b.letters.size() && b.letters[j] == b.letters[i]) ++j;
    std::int64_t exp = static_cast<std::int64_t>(j - i);
    if (b.letters[i].sign < 0) exp = -exp;
    if (!out.empty()) out += ' ';
    out += 's';
    out += std::to_string(b.letters[i].index);
    if (exp != 1) {
      out += '^';
      out += std::to_string(exp);
    }
    i = j;
  }
  return out;
}

// The image of b under the representation determined by (W, V), with the
// left-action convention: for b = l1 l2 ... lk the result is
// tau_{l1} o tau_{l2} o ... o tau_{lk} (rightmost letter acts first on
// the argument).  The empty braid maps to the identity for any pair.
// Nonempty braids require the pair to solve all three equations, and
// negative letters additionally require it to be an automorphism (the
// inverse letters act by the inverted pair).
inline Endomorphism braid_to_endo(const BraidWord& b,
                                  const SolutionPair& pair) {
  Endomorphism acc = Endomorphism::identity(b.strands);
  if (b.letters.empty()) return acc;
  if (!is_solution(pair).is_solution())
    throw Error("braid_to_endo: (" + format_pair(pair) +
                ") does not satisfy the three pair equations");
  std::optional<SolutionPair> inv;
  for (const BraidLetter& l : b.letters) {
    if (l.sign < 0 && !inv) inv = invert_pair(pair);
    const SolutionPair& p = l.sign < 0 ? *inv : pair;
    acc = compose(acc, assemble_tau_i(p, l.index, b.strands));
  }
  return acc;
}

// True iff the assembled tau_i satisfy the braid relations on F_n:
// tau_i tau_{i+1} tau_i = tau_{i+1} tau_i tau_{i+1} for each i, and
// tau_i tau_j = tau_j tau_i for |i - j| > 1.  Comparing endomorphisms
// compares generator images, which determines them completely.
inline bool verify_braid_relations(const SolutionPair& pair, int n) {
  if (n < 3) throw Error("verify_braid_relations needs at least 3 strands");
  std::vector<Endomorphism> tau;
  tau.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n - 1; ++i) tau.push_back(assemble_tau_i(pair, i, n));
  for (int i = 0; i + 1 < n - 1; ++i) {
    Endomorphism lhs = compose(tau[i], compose(tau[i + 1], tau[i]));
    Endomorphism rhs = compose(tau[i + 1], compose(tau[i], tau[i + 1]));
    if (!(lhs == rhs)) return false;
  }
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 2; j < n - 1; ++j)
      if (!(compose(tau[i], tau[j]) == compose(tau[j], tau[i]))) return false;
  return true;
}

// The image of b in the symmetric group (sigma_i acts as the
// transposition of strands i and i+1, signs ignored), under the same
// left-action convention as braid_to_endo.  Entry k-1 is the image of
// strand k, 1-based.
inline std::vector<int> braid_permutation(const BraidWord& b) {
  std::vector<int> p(static_cast<std::size_t>(b.strands));
  std::iota(p.begin(), p.end(), 1);
  for (const BraidLetter& l : b.letters)
    std::swap(p[static_cast<std::size_t>(l.index - 1)],
              p[static_cast<std::size_t>(l.index)]);
  return p;
}

inline int cycle_count(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (seen[k]) continue;
    ++cycles;
    std::size_t j = k;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(perm[j] - 1);
    }
  }
  return cycles;
}

}  // namespace fgybe
