// Nielsen reduction of generating pairs of F_2: decides whether a pair
// (W, V) is a free basis, with a replayable certificate, and computes the
// inverse automorphism from that certificate.
//
// Surjective endomorphisms of a finitely generated free group are
// automorphisms (free groups are Hopfian), so "is an automorphism" is
// decided by checking that {W, V} reduces to a basis {x^±1, y^±1}.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fgybe/endomorphism.hpp"
#include "fgybe/word.hpp"

namespace fgybe {

class NotAnAutomorphism : public Error {
 public:
  explicit NotAnAutomorphism(const std::string& msg) : Error(msg) {}
};

enum class MoveKind { Swap, Invert, Multiply };

// One elementary Nielsen transformation on an ordered pair.
//   Swap:      exchange the two slots (slot/side/exp unused).
//   Invert:    replace slot by its inverse (side/exp unused).
//   Multiply:  replace p[slot] by p[slot]*other^exp (side 1, right) or
//              other^exp*p[slot] (side 0, left), exp in {+1, -1}.
// tie marks a length-preserving normalization step; every other Multiply
// strictly decreases the total letter length.
struct NielsenMove {
  MoveKind kind;
  int slot = 0;
  int side = 0;
  int exp = 0;
  bool tie = false;
};

inline void apply_move(std::array<Word, 2>& p, const NielsenMove& m) {
  switch (m.kind) {
    case MoveKind::Swap:
      std::swap(p[0], p[1]);
      return;
    case MoveKind::Invert:
      p[static_cast<std::size_t>(m.slot)] =
          p[static_cast<std::size_t>(m.slot)].inverse();
      return;
    case MoveKind::Multiply: {
      const Word& other = p[static_cast<std::size_t>(1 - m.slot)];
      Word factor = m.exp < 0 ? other.inverse() : other;
      Word& target = p[static_cast<std::size_t>(m.slot)];
      target = m.side == 1 ? target * factor : factor * target;
      return;
    }
  }
}

struct NielsenCertificate {
  std::array<Word, 2> initial;
  std::vector<NielsenMove> moves;
  std::array<Word, 2> final_pair;

  bool final_is_basis() const {
    const Word& a = final_pair[0];
    const Word& b = final_pair[1];
    return a.length() == 1 && b.length() == 1 &&
           a.syllables()[0].gen != b.syllables()[0].gen;
  }
};

// Replays the recorded moves from the initial pair; used by tests to
// validate certificates independently of the reduction search.
inline std::array<Word, 2> replay(const NielsenCertificate& cert) {
  std::array<Word, 2> p = cert.initial;
  for (const NielsenMove& m : cert.moves) apply_move(p, m);
  return p;
}

namespace detail {

// Secondary key for tie moves: the unordered pair, smaller word first,
// compared lexicographically.  Strictly decreasing at constant total
// length, hence terminating.
inline bool pair_key_less(const std::array<Word, 2>& a,
                          const std::array<Word, 2>& b) {
  const Word& a_lo = word_less(a[0], a[1]) ? a[0] : a[1];
  const Word& a_hi = word_less(a[0], a[1]) ? a[1] : a[0];
  const Word& b_lo = word_less(b[0], b[1]) ? b[0] : b[1];
  const Word& b_hi = word_less(b[0], b[1]) ? b[1] : b[0];
  if (a_lo != b_lo) return word_less(a_lo, b_lo);
  return word_less(a_hi, b_hi);
}

}  // namespace detail

// Greedy Nielsen reduction.  Repeatedly applies the first (slot, side,
// exp) multiply move that strictly shortens the replaced word; when none
// exists, applies a length-preserving multiply that lowers the secondary
// key, which can re-enable shortening.  Ends by swapping an empty word
// into the second slot.
inline NielsenCertificate nielsen_reduce(const Word& a, const Word& b) {
  NielsenCertificate cert;
  cert.initial = {with_rank(a, 2), with_rank(b, 2)};
  std::array<Word, 2> p = cert.initial;

  auto candidate = [&](int slot, int side, int exp) {
    const Word& other = p[static_cast<std::size_t>(1 - slot)];
    Word factor = exp < 0 ? other.inverse() : other;
    const Word& target = p[static_cast<std::size_t>(slot)];
    return side == 1 ? target * factor : factor * target;
  };

  for (;;) {
    bool moved = false;
    // Strictly length-reducing moves, lexicographic (slot, side, exp)
    // preference with left before right and +1 before -1.
    for (int slot = 0; slot < 2 && !moved; ++slot)
      for (int side = 0; side < 2 && !moved; ++side)
        for (int exp = +1; exp >= -1 && !moved; exp -= 2) {
          if (p[static_cast<std::size_t>(1 - slot)].is_identity()) continue;
          Word cand = candidate(slot, side, exp);
          if (cand.length() < p[static_cast<std::size_t>(slot)].length()) {
            NielsenMove m{MoveKind::Multiply, slot, side, exp, false};
            cert.moves.push_back(m);
            p[static_cast<std::size_t>(slot)] = cand;
            moved = true;
          }
        }
    if (moved) continue;
    // Tie normalization: same move set, constant length, strictly
    // decreasing secondary key.
    for (int slot = 0; slot < 2 && !moved; ++slot)
      for (int side = 0; side < 2 && !moved; ++side)
        for (int exp = +1; exp >= -1 && !moved; exp -= 2) {
          if (p[static_cast<std::size_t>(1 - slot)].is_identity()) continue;
          Word cand = candidate(slot, side, exp);
          if (cand.length() != p[static_cast<std::size_t>(slot)].length())
            continue;
          std::array<Word, 2> q = p;
          q[static_cast<std::size_t>(slot)] = cand;
          if (detail::pair_key_less(q, p)) {
            NielsenMove m{MoveKind::Multiply, slot, side, exp, true};
            cert.moves.push_back(m);
            p = q;
            moved = true;
          }
        }
    if (!moved) break;
  }

  if (p[0].is_identity() && !p[1].is_identity()) {
    cert.moves.push_back(NielsenMove{MoveKind::Swap, 0, 0, 0, false});
    std::swap(p[0], p[1]);
  }
  cert.final_pair = p;
  return cert;
}

inline bool is_automorphism(const SolutionPair& pair) {
  return nielsen_reduce(pair.W, pair.V).final_is_basis();
}

// Subgroup rank of <a, b>: 0 for the trivial subgroup, 1 when the
// nontrivial generators commute (hence lie in a common cyclic subgroup),
// 2 otherwise.
inline int generated_rank(const Word& a, const Word& b) {
  Word a2 = with_rank(a, 2), b2 = with_rank(b, 2);
  if (a2.is_identity() && b2.is_identity()) return 0;
  if (a2.is_identity() || b2.is_identity()) return 1;
  return a2 * b2 == b2 * a2 ? 1 : 2;
}

namespace detail {

// The automorphism alpha with phi_after = phi_before o alpha, for each
// elementary move applied to the pair of images.
inline Endomorphism move_automorphism(const NielsenMove& m) {
  Word x = Word::generator(2, 1);
  Word y = Word::generator(2, 2);
  switch (m.kind) {
    case MoveKind::Swap:
      return Endomorphism({y, x});
    case MoveKind::Invert:
      return m.slot == 0 ? Endomorphism({x.inverse(), y})
                         : Endomorphism({x, y.inverse()});
    case MoveKind::Multiply: {
      Word other = m.slot == 0 ? y : x;
      Word factor = m.exp < 0 ? other.inverse() : other;
      if (m.slot == 0) {
        Word img = m.side == 1 ? x * factor : factor * x;
        return Endomorphism({img, y});
      }
      Word img = m.side == 1 ? y * factor : factor * y;
      return Endomorphism({x, img});
    }
  }
  throw Error("unreachable");
}

}  // namespace detail

// Inverse of the automorphism x -> W, y -> V, computed by composing the
// move automorphisms against the inverted final basis, then verified by
// composition in both directions.
inline SolutionPair invert_pair(const SolutionPair& pair) {
  NielsenCertificate cert = nielsen_reduce(pair.W, pair.V);
  if (!cert.final_is_basis())
    throw NotAnAutomorphism("pair " + format_pair(pair) +
                            " is not an automorphism of F_2");

  // final pair: x -> g_a^{e_a}, y -> g_b^{e_b}; its inverse sends
  // x_{g_a} -> x^{e_a} and x_{g_b} -> y^{e_b}.
  const Syllable& sa = cert.final_pair[0].syllables()[0];
  const Syllable& sb = cert.final_pair[1].syllables()[0];
  std::vector<Word> inv_images(2, Word(2));
  inv_images[static_cast<std::size_t>(sa.gen - 1)] =
      Word::generator(2, 1, sa.exp);
  inv_images[static_cast<std::size_t>(sb.gen - 1)] =
      Word::generator(2, 2, sb.exp);
  Endomorphism acc{std::move(inv_images)};

  // phi_pair = phi_final o alpha_k^-1 o ... o alpha_1^-1, so
  // phi_pair^-1 = alpha_1 o ... o alpha_k o phi_final^-1.
  for (auto it = cert.moves.rbegin(); it != cert.moves.rend(); ++it)
    acc = compose(detail::move_automorphism(*it), acc);

  Endomorphism phi = pair.to_endomorphism();
  Endomorphism id = Endomorphism::identity(2);
  if (compose(phi, acc) != id || compose(acc, phi) != id)
    throw Error("inverse verification failed for pair " + format_pair(pair));
  return SolutionPair(acc.images()[0], acc.images()[1]);
}

}  // namespace fgybe
