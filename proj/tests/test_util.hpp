// Shared helpers for the test suites: seeded RNG and random word factories.
#pragma once

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "fgybe/word.hpp"

namespace fgybe::testutil {

// Seed for randomized suites; override with FGYBE_TEST_SEED to reproduce
// or explore.  The default keeps CI runs deterministic.
inline std::uint64_t suite_seed(std::uint64_t fallback = 20260823u) {
  if (const char* s = std::getenv("FGYBE_TEST_SEED")) {
    char* end = nullptr;
    std::uint64_t v = std::strtoull(s, &end, 10);
    if (end && *end == '\0') return v;
  }
  return fallback;
}

// Uniformly random reduced word of the exact given length.
inline Word random_reduced_word_exact(std::mt19937_64& rng, int rank,
                                      int length) {
  std::vector<Letter> ls;
  ls.reserve(static_cast<std::size_t>(length));
  int prev = -1;
  for (int i = 0; i < length; ++i) {
    int choices = (prev < 0) ? 2 * rank : 2 * rank - 1;
    int pick = static_cast<int>(rng() % static_cast<std::uint64_t>(choices));
    int forbidden = prev < 0 ? -1 : (prev ^ 1);
    if (forbidden >= 0 && pick >= forbidden) ++pick;
    ls.push_back(Letter{pick / 2 + 1, (pick & 1) ? -1 : +1});
    prev = pick;
  }
  return Word::from_letters(rank, ls);
}

// Random reduced word with length drawn uniformly from [0, max_length].
inline Word random_reduced_word(std::mt19937_64& rng, int rank,
                                int max_length) {
  int len = static_cast<int>(rng() %
                             static_cast<std::uint64_t>(max_length + 1));
  return random_reduced_word_exact(rng, rank, len);
}

// Random free basis of F_2: the images of (x, y) under a random product
// of elementary Nielsen automorphisms.
inline std::pair<Word, Word> random_basis_pair(std::mt19937_64& rng,
                                               int moves) {
  Word a = Word::generator(2, 1);
  Word b = Word::generator(2, 2);
  for (int i = 0; i < moves; ++i) {
    switch (rng() % 4) {
      case 0: std::swap(a, b); break;
      case 1: a = a.inverse(); break;
      case 2: a = (rng() % 2) ? a * b : b * a; break;
      default: b = (rng() % 2) ? b * a.inverse() : a.inverse() * b; break;
    }
  }
  return {a, b};
}

// Unreduced letter soup, for exercising reduction itself.
inline std::vector<Letter> random_letters(std::mt19937_64& rng, int rank,
                                          int count) {
  std::vector<Letter> ls;
  ls.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    int v = static_cast<int>(rng() % static_cast<std::uint64_t>(2 * rank));
    ls.push_back(Letter{v / 2 + 1, (v & 1) ? -1 : +1});
  }
  return ls;
}

}  // namespace fgybe::testutil
