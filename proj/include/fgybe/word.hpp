// Reduced words in finitely generated free groups, stored in syllable
// (run-length) normal form.  All public constructors reduce eagerly, so
// every Word value is reduced by construction.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fgybe {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax error in a word or braid expression; `position` is the byte
// offset into the input where parsing failed.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Free generator x_index, 1-based.
struct Generator {
  int index;
  friend bool operator==(Generator, Generator) = default;
};

// A maximal run gen^exp inside a word; exp is never zero.
struct Syllable {
  int gen;
  std::int64_t exp;
  friend bool operator==(Syllable, Syllable) = default;
};

// A single letter gen^sign with sign in {+1, -1}.
struct Letter {
  int gen;
  int sign;
  friend bool operator==(Letter, Letter) = default;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error("exponent overflow");
  return r;
}

inline std::int64_t checked_negate(std::int64_t a) {
  if (a == INT64_MIN) throw Error("exponent overflow");
  return -a;
}

// Alphabet position of a letter: x1 < x1^-1 < x2 < x2^-1 < ...
inline int letter_order(int gen, int sign) {
  return 2 * (gen - 1) + (sign < 0 ? 1 : 0);
}

namespace detail {

// Appends gen^exp to a syllable stack, merging and cancelling so the
// stack stays in normal form (adjacent syllables on distinct generators).
inline void push_syllable(std::vector<Syllable>& sylls, int gen,
                          std::int64_t exp) {
  if (exp == 0) return;
  if (!sylls.empty() && sylls.back().gen == gen) {
    std::int64_t e = checked_add(sylls.back().exp, exp);
    if (e == 0) {
      sylls.pop_back();
    } else {
      sylls.back().exp = e;
    }
  } else {
    sylls.push_back(Syllable{gen, exp});
  }
}

}  // namespace detail

// An element of the free group F_rank in reduced normal form.
// Immutable after construction; freely shareable across threads.
class Word {
 public:
  Word() = default;
  explicit Word(int rank) : rank_(check_rank(rank)) {}

  // x_index^exp as a word in F_rank.
  static Word generator(int rank, int index, std::int64_t exp = 1) {
    Word w(rank);
    w.check_gen(index);
    if (exp != 0) w.syllables_.push_back(Syllable{index, exp});
    return w;
  }

  static Word from_letters(int rank, std::span<const Letter> letters) {
    Word w(rank);
    for (const Letter& l : letters) {
      w.check_gen(l.gen);
      detail::push_syllable(w.syllables_, l.gen, l.sign < 0 ? -1 : +1);
    }
    return w;
  }

  static Word from_syllables(int rank, std::span<const Syllable> sylls) {
    Word w(rank);
    for (const Syllable& s : sylls) {
      w.check_gen(s.gen);
      detail::push_syllable(w.syllables_, s.gen, s.exp);
    }
    return w;
  }

  int rank() const { return rank_; }
  bool is_identity() const { return syllables_.empty(); }
  const std::vector<Syllable>& syllables() const { return syllables_; }

  // Letter length |w|.
  std::int64_t length() const {
    std::int64_t n = 0;
    for (const Syllable& s : syllables_)
      n = checked_add(n, s.exp < 0 ? checked_negate(s.exp) : s.exp);
    return n;
  }

  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(length()));
    for (const Syllable& s : syllables_) {
      int sign = s.exp < 0 ? -1 : +1;
      std::int64_t n = s.exp < 0 ? checked_negate(s.exp) : s.exp;
      for (std::int64_t i = 0; i < n; ++i) out.push_back(Letter{s.gen, sign});
    }
    return out;
  }

  Word inverse() const {
    Word w(rank_);
    w.syllables_.reserve(syllables_.size());
    for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
      w.syllables_.push_back(Syllable{it->gen, checked_negate(it->exp)});
    return w;
  }

  Word pow(std::int64_t k) const;

  // Total number of letters g^{+1} and g^{-1} appearing in the word.
  std::int64_t letter_count(Generator g) const {
    std::int64_t n = 0;
    for (const Syllable& s : syllables_)
      if (s.gen == g.index)
        n = checked_add(n, s.exp < 0 ? checked_negate(s.exp) : s.exp);
    return n;
  }

  friend Word operator*(const Word& u, const Word& v) {
    if (u.rank_ != v.rank_)
      throw Error("rank mismatch: F_" + std::to_string(u.rank_) + " vs F_" +
                  std::to_string(v.rank_));
    Word w = u;
    for (const Syllable& s : v.syllables_)
      detail::push_syllable(w.syllables_, s.gen, s.exp);
    return w;
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  static int check_rank(int rank) {
    if (rank < 0) throw Error("negative rank");
    return rank;
  }
  void check_gen(int index) const {
    if (index < 1 || index > rank_)
      throw Error("generator x" + std::to_string(index) +
                  " out of range for F_" + std::to_string(rank_));
  }

  int rank_ = 0;
  std::vector<Syllable> syllables_;
};

inline Word Word::pow(std::int64_t k) const {
  Word base = k < 0 ? inverse() : *this;
  std::int64_t n = k < 0 ? checked_negate(k) : k;
  Word w(rank_);
  for (std::int64_t i = 0; i < n; ++i) w = w * base;
  return w;
}

// The fixed enumeration order: shorter words first, equal lengths
// compared letter by letter in the alphabet order x1 < x1^-1 < x2 < ...
// Words of distinct ambient rank compare by rank first.
inline bool word_less(const Word& a, const Word& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  std::int64_t la = a.length(), lb = b.length();
  if (la != lb) return la < lb;
  auto ia = a.syllables().begin(), ib = b.syllables().begin();
  std::int64_t ra = 0, rb = 0;  // letters consumed within current syllable
  while (ia != a.syllables().end() && ib != b.syllables().end()) {
    int oa = letter_order(ia->gen, ia->exp < 0 ? -1 : +1);
    int ob = letter_order(ib->gen, ib->exp < 0 ? -1 : +1);
    if (oa != ob) return oa < ob;
    std::int64_t ca = (ia->exp < 0 ? -ia->exp : ia->exp) - ra;
    std::int64_t cb = (ib->exp < 0 ? -ib->exp : ib->exp) - rb;
    std::int64_t step = std::min(ca, cb);
    ra += step;
    rb += step;
    if (ra == (ia->exp < 0 ? -ia->exp : ia->exp)) ++ia, ra = 0;
    if (rb == (ib->exp < 0 ? -ib->exp : ib->exp)) ++ib, rb = 0;
  }
  return false;  // equal
}

inline bool operator<(const Word& a, const Word& b) { return word_less(a, b); }

// Builds the reduced form of an arbitrary letter sequence.
inline Word reduce(int rank, std::span<const Letter> letters) {
  return Word::from_letters(rank, letters);
}

inline Word concat(const Word& u, const Word& v) { return u * v; }
inline Word inverse(const Word& u) { return u.inverse(); }

// Evaluates `tmpl` (a word in F_k) at the given k images, which must all
// live in a common F_n.  Acts as the group homomorphism x_j -> images[j-1].
inline Word substitute(const Word& tmpl, std::span<const Word> images) {
  if (static_cast<std::size_t>(tmpl.rank()) != images.size())
    throw Error("substitute: template rank " + std::to_string(tmpl.rank()) +
                " != number of images " + std::to_string(images.size()));
  int target_rank = images.empty() ? 0 : images[0].rank();
  for (const Word& im : images)
    if (im.rank() != target_rank) throw Error("substitute: mixed image ranks");
  Word out(target_rank);
  for (const Syllable& s : tmpl.syllables())
    out = out * images[static_cast<std::size_t>(s.gen - 1)].pow(s.exp);
  return out;
}

// Reinterprets u inside F_rank; rank must cover every generator used.
inline Word with_rank(const Word& u, int rank) {
  return Word::from_syllables(rank, u.syllables());
}

struct CyclicDecomposition {
  Word core;        // cyclically reduced
  Word conjugator;  // u = conjugator * core * conjugator^-1
};

// Peels mutually inverse outer syllable runs until the first and last
// letters are no longer inverse.  The conjugator is the shortest word
// realising the decomposition.
inline CyclicDecomposition cyclic_reduce(const Word& u) {
  std::vector<Syllable> sylls(u.syllables().begin(), u.syllables().end());
  std::vector<Syllable> conj;
  while (sylls.size() >= 2) {
    Syllable& a = sylls.front();
    Syllable& b = sylls.back();
    if (a.gen != b.gen || (a.exp < 0) == (b.exp < 0)) break;
    std::int64_t am = a.exp < 0 ? -a.exp : a.exp;
    std::int64_t bm = b.exp < 0 ? -b.exp : b.exp;
    if (am == bm) {
      detail::push_syllable(conj, a.gen, a.exp);
      sylls.erase(sylls.begin());
      sylls.pop_back();
    } else if (am < bm) {
      detail::push_syllable(conj, a.gen, a.exp);
      b.exp = checked_add(b.exp, a.exp);
      sylls.erase(sylls.begin());
    } else {
      detail::push_syllable(conj, a.gen, checked_negate(b.exp));
      a.exp = checked_add(a.exp, b.exp);
      sylls.pop_back();
    }
  }
  CyclicDecomposition d;
  d.core = Word::from_syllables(u.rank(), sylls);
  d.conjugator = Word::from_syllables(u.rank(), conj);
  return d;
}

struct RootPower {
  Word root;
  std::int64_t exponent;  // maximal k with root^k == u
};

// Maximal root extraction.  Cyclically reduces, finds the smallest string
// period of the cyclic core via the failure function, and re-conjugates.
inline RootPower proper_power(const Word& u) {
  if (u.is_identity()) throw Error("proper_power: empty word");
  CyclicDecomposition d = cyclic_reduce(u);
  std::vector<Letter> ls = d.core.letters();
  std::size_t n = ls.size();
  // KMP failure function; smallest period p = n - fail[n-1].
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = fail[i - 1];
    while (k > 0 && !(ls[i] == ls[k])) k = fail[k - 1];
    if (ls[i] == ls[k]) ++k;
    fail[i] = k;
  }
  std::size_t p = n - fail[n - 1];
  if (n % p != 0) p = n;  // primitive
  RootPower r;
  r.exponent = static_cast<std::int64_t>(n / p);
  Word root_core = Word::from_letters(
      u.rank(), std::span<const Letter>(ls.data(), p));
  r.root = d.conjugator * root_core * d.conjugator.inverse();
  return r;
}

inline std::int64_t letter_count(const Word& u, Generator g) {
  return u.letter_count(g);
}

// --- text format ------------------------------------------------------
//
// word  := "1" | term+
// term  := gen ("^" int)?
// gen   := "x" | "y" | "z" | "x" digits     (x = x1, y = x2, z = x3)
// int   := nonzero signed decimal
//
// Canonical output uses single spaces between syllables: "y^-1 x y".

inline std::string format_generator(int index) {
  switch (index) {
    case 1: return "x";
    case 2: return "y";
    case 3: return "z";
    default: return "x" + std::to_string(index);
  }
}

inline std::string format_word(const Word& u) {
  if (u.is_identity()) return "1";
  std::string out;
  for (const Syllable& s : u.syllables()) {
    if (!out.empty()) out += ' ';
    out += format_generator(s.gen);
    if (s.exp != 1) out += '^' + std::to_string(s.exp);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Word& u) {
  return os << format_word(u);
}

// Parses the word grammar above.  The result is reduced.  The ambient
// rank is the largest generator index seen, but at least `min_rank`.
// If `max_rank` is positive, generators above it are rejected.
inline Word parse_word(std::string_view text, int min_rank = 0,
                       int max_rank = 0) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto parse_int = [&](bool allow_sign) -> std::int64_t {
    std::size_t start = i;
    bool neg = false;
    if (allow_sign && i < text.size() && (text[i] == '+' || text[i] == '-')) {
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

  std::vector<Syllable> sylls;
  int rank = min_rank;
  skip_ws();
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip_ws();
    if (i != text.size()) throw ParseError("unexpected input after \"1\"", i);
    return Word(rank);
  }
  bool any = false;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    char c = text[i];
    int gen = 0;
    if (c == 'x') {
      std::size_t gen_pos = i;
      ++i;
      if (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        std::int64_t v = parse_int(false);
        if (v < 1 || v > INT32_MAX)
          throw ParseError("bad generator index", gen_pos);
        gen = static_cast<int>(v);
      } else {
        gen = 1;
      }
    } else if (c == 'y') {
      gen = 2;
      ++i;
    } else if (c == 'z') {
      gen = 3;
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    if (max_rank > 0 && gen > max_rank)
      throw ParseError("unknown generator " + format_generator(gen) +
                           " in F_" + std::to_string(max_rank),
                       i - 1);
    std::int64_t exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t exp_pos = i;
      exp = parse_int(true);
      if (exp == 0) throw ParseError("zero exponent", exp_pos);
    }
    detail::push_syllable(sylls, gen, exp);
    rank = std::max(rank, gen);
    any = true;
  }
  if (!any) throw ParseError("empty word expression (write \"1\")", 0);
  return Word::from_syllables(rank, sylls);
}

// Streams every reduced word of F_rank with letter length <= max_length,
// each exactly once, shorter first and lexicographically within a length.
class WordEnumerator {
 public:
  WordEnumerator(int rank, std::int64_t max_length)
      : rank_(rank), max_length_(max_length) {
    if (rank < 1) throw Error("enumeration requires rank >= 1");
  }

  std::optional<Word> next() {
    if (done_) return std::nullopt;
    if (!started_) {
      started_ = true;
      if (max_length_ < 0) {
        done_ = true;
        return std::nullopt;
      }
      return make_word();  // the empty word
    }
    if (!advance()) {
      done_ = true;
      return std::nullopt;
    }
    return make_word();
  }

 private:
  // letters_ holds alphabet positions (letter_order values).
  bool advance() {
    // Try to increment in place, rightmost position first.
    for (std::size_t pos = letters_.size(); pos-- > 0;) {
      int forbidden = pos == 0 ? -1 : inverse_of(letters_[pos - 1]);
      for (int v = letters_[pos] + 1; v < 2 * rank_; ++v) {
        if (v == forbidden) continue;
        letters_[pos] = v;
        if (!fill_smallest(pos + 1)) return false;
        return true;
      }
    }
    // Exhausted this length; move to the next one.
    if (static_cast<std::int64_t>(letters_.size()) + 1 > max_length_)
      return false;
    letters_.assign(letters_.size() + 1, 0);
    return fill_smallest(0);
  }

  bool fill_smallest(std::size_t from) {
    for (std::size_t pos = from; pos < letters_.size(); ++pos) {
      int forbidden = pos == 0 ? -1 : inverse_of(letters_[pos - 1]);
      int v = (forbidden == 0) ? 1 : 0;
      if (v >= 2 * rank_) return false;  // rank 0 never reaches here
      letters_[pos] = v;
    }
    return true;
  }

  static int inverse_of(int order) { return order ^ 1; }

  Word make_word() const {
    std::vector<Letter> ls;
    ls.reserve(letters_.size());
    for (int v : letters_)
      ls.push_back(Letter{v / 2 + 1, (v & 1) ? -1 : +1});
    return Word::from_letters(rank_, ls);
  }

  int rank_;
  std::int64_t max_length_;
  std::vector<int> letters_;
  bool started_ = false;
  bool done_ = false;
};

inline std::vector<Word> all_reduced_words(int rank, std::int64_t max_length) {
  WordEnumerator e(rank, max_length);
  std::vector<Word> out;
  while (auto w = e.next()) out.push_back(*w);
  return out;
}

}  // namespace fgybe
