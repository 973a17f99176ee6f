// Endomorphisms of F_n as generator-image tables, the local pair (W, V),
// and the free-product assembly that places a pair on strands i, i+1.
//
// Composition convention (used everywhere): compose(outer, inner) acts as
// outer after inner, i.e. compose(a, b)(u) = a(b(u)).
#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fgybe/word.hpp"

namespace fgybe {

class Endomorphism {
 public:
  explicit Endomorphism(std::vector<Word> images)
      : images_(std::move(images)) {
    int n = static_cast<int>(images_.size());
    if (n < 1) throw Error("endomorphism needs at least one generator");
    for (const Word& w : images_)
      if (w.rank() != n)
        throw Error("image rank " + std::to_string(w.rank()) +
                    " does not match endomorphism rank " + std::to_string(n));
  }

  static Endomorphism identity(int rank) {
    std::vector<Word> im;
    im.reserve(static_cast<std::size_t>(rank));
    for (int j = 1; j <= rank; ++j) im.push_back(Word::generator(rank, j));
    return Endomorphism(std::move(im));
  }

  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<Word>& images() const { return images_; }

  Word apply(const Word& u) const {
    if (u.rank() != rank())
      throw Error("apply: word rank " + std::to_string(u.rank()) +
                  " != endomorphism rank " + std::to_string(rank()));
    return substitute(u, images_);
  }

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  std::vector<Word> images_;
};

inline Endomorphism compose(const Endomorphism& outer,
                            const Endomorphism& inner) {
  if (outer.rank() != inner.rank())
    throw Error("compose: rank mismatch");
  std::vector<Word> im;
  im.reserve(inner.images().size());
  for (const Word& w : inner.images()) im.push_back(outer.apply(w));
  return Endomorphism(std::move(im));
}

// A local rule (W, V): the F_2 endomorphism x -> W(x,y), y -> V(x,y).
struct SolutionPair {
  Word W{2};
  Word V{2};

  SolutionPair() = default;
  SolutionPair(const Word& w, const Word& v)
      : W(with_rank(w, 2)), V(with_rank(v, 2)) {}

  Endomorphism to_endomorphism() const { return Endomorphism({W, V}); }

  friend bool operator==(const SolutionPair&, const SolutionPair&) = default;
};

// Orders pairs by total length, then W, then V (the census output order).
inline bool pair_less(const SolutionPair& a, const SolutionPair& b) {
  std::int64_t la = a.W.length() + a.V.length();
  std::int64_t lb = b.W.length() + b.V.length();
  if (la != lb) return la < lb;
  if (a.W != b.W) return word_less(a.W, b.W);
  return word_less(a.V, b.V);
}

inline std::string format_pair(const SolutionPair& p) {
  return "(" + format_word(p.W) + ", " + format_word(p.V) + ")";
}

// Accepts "(W, V)" with the word grammar inside; the comma splits at the
// top level (words never contain commas or parentheses).
inline SolutionPair parse_pair(std::string_view text) {
  std::size_t open = text.find('(');
  std::size_t close = text.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos ||
      close < open)
    throw ParseError("expected \"(W, V)\"", 0);
  std::string_view inner = text.substr(open + 1, close - open - 1);
  std::size_t comma = inner.find(',');
  if (comma == std::string_view::npos)
    throw ParseError("expected \",\" between pair components", open + 1);
  Word w = parse_word(inner.substr(0, comma), 2, 2);
  Word v = parse_word(inner.substr(comma + 1), 2, 2);
  return SolutionPair(w, v);
}

// tau_i = id * tau * id on F_n: the pair acts on generators i, i+1 and
// fixes the rest.
inline Endomorphism assemble_tau_i(const SolutionPair& pair, int i, int n) {
  if (i < 1 || i > n - 1)
    throw Error("strand index " + std::to_string(i) + " out of range for n=" +
                std::to_string(n));
  std::vector<Word> im;
  im.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) im.push_back(Word::generator(n, j));
  std::vector<Word> local = {Word::generator(n, i), Word::generator(n, i + 1)};
  im[static_cast<std::size_t>(i - 1)] = substitute(pair.W, local);
  im[static_cast<std::size_t>(i)] = substitute(pair.V, local);
  return Endomorphism(std::move(im));
}

// One line per generator: "x<j> -> <word>".  Left-hand labels are always
// numbered (x1, x2, ...); the image uses the canonical word format.
inline std::string format_endomorphism(const Endomorphism& e) {
  std::string out;
  for (int j = 1; j <= e.rank(); ++j) {
    out += "x" + std::to_string(j);
    out += " -> ";
    out += format_word(e.images()[static_cast<std::size_t>(j - 1)]);
    out += '\n';
  }
  return out;
}

}  // namespace fgybe
