// Group-valued invariants of braid closures: the closure presentation
// <x_1,...,x_n | x_j^-1 Phi(b)(x_j)>, its abelianization through an
// exact Smith normal form, and light presentation simplification.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fgybe/braid.hpp"
#include "fgybe/endomorphism.hpp"
#include "fgybe/word.hpp"

namespace fgybe {

// All matrix arithmetic is exact; entries never wrap.
using Integer = boost::multiprecision::cpp_int;

struct IntegerMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Integer> entries;  // row-major

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t r, std::size_t c)
      : rows(r), cols(c), entries(r * c) {}

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntegerMatrix from_rows(
      const std::vector<std::vector<std::int64_t>>& rows_in) {
    std::size_t r = rows_in.size();
    std::size_t c = r == 0 ? 0 : rows_in.front().size();
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows_in[i].size() != c) throw Error("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows_in[i][j];
    }
    return m;
  }

  Integer& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const Integer& at(std::size_t r, std::size_t c) const {
    return entries[r * cols + c];
  }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;
};

inline IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols != b.rows) throw Error("matrix dimension mismatch");
  IntegerMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

// Fraction-free (Bareiss) determinant; every division below is exact.
inline Integer determinant(IntegerMatrix m) {
  if (m.rows != m.cols) throw Error("determinant of a non-square matrix");
  std::size_t n = m.rows;
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m.at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign < 0 ? Integer(-m.at(n - 1, n - 1)) : m.at(n - 1, n - 1);
}

// A finite presentation of a group on n_generators generators; every
// relator r is a word of exactly that rank and asserts r = 1.
struct Presentation {
  int n_generators = 0;
  std::vector<Word> relators;

  Presentation() = default;
  Presentation(int n, std::vector<Word> rs) : n_generators(n) {
    if (n < 0) throw Error("negative generator count");
    relators.reserve(rs.size());
    for (const Word& r : rs) relators.push_back(with_rank(r, n));
  }

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// "gens: n" then one relator per line in the word grammar.
inline std::string format_presentation(const Presentation& p) {
  std::string out = "gens: " + std::to_string(p.n_generators) + "\n";
  for (const Word& r : p.relators) out += format_word(r) + "\n";
  return out;
}

// Presentation of the closure of b under the pair's representation:
// one relator red(x_j^-1 * Phi(b)(x_j)) per strand.
inline Presentation closure_presentation(const BraidWord& b,
                                         const SolutionPair& pair) {
  Endomorphism phi = braid_to_endo(b, pair);
  int n = b.strands;
  std::vector<Word> rs;
  rs.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j)
    rs.push_back(Word::generator(n, j, -1) * phi.images()[j - 1]);
  return Presentation(n, rs);
}

// Entry (r, j): exponent sum of generator j+1 in relator r.
inline IntegerMatrix abelianized_matrix(const Presentation& p) {
  IntegerMatrix m(p.relators.size(),
                  static_cast<std::size_t>(p.n_generators));
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (const Syllable& s : p.relators[r].syllables())
      m.at(r, static_cast<std::size_t>(s.gen - 1)) += s.exp;
  return m;
}

struct SmithNormalForm {
  IntegerMatrix u, d, v;  // u * input * v = d
};

namespace detail {

inline void row_swap(IntegerMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}
inline void col_swap(IntegerMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}
// row a += q * row b, and likewise for columns.
inline void row_add(IntegerMatrix& m, std::size_t a, std::size_t b,
                    const Integer& q) {
  for (std::size_t j = 0; j < m.cols; ++j) m.at(a, j) += q * m.at(b, j);
}
inline void col_add(IntegerMatrix& m, std::size_t a, std::size_t b,
                    const Integer& q) {
  for (std::size_t i = 0; i < m.rows; ++i) m.at(i, a) += q * m.at(i, b);
}

}  // namespace detail

// Diagonalization U*m*V = D by unimodular row and column moves, with the
// diagonal nonnegative and each entry dividing the next.  Pivots are the
// smallest nonzero entry in absolute value, ties in row-major order.
// The factorization is re-verified before returning.
inline SmithNormalForm smith_normal_form(const IntegerMatrix& m) {
  SmithNormalForm s{IntegerMatrix::identity(m.rows), m,
                    IntegerMatrix::identity(m.cols)};
  IntegerMatrix& d = s.d;
  std::size_t t = 0;
  std::size_t bound = m.rows < m.cols ? m.rows : m.cols;
  while (t < bound) {
    // Pivot selection over the trailing submatrix.
    std::size_t pi = 0, pj = 0;
    bool found = false;
    for (std::size_t i = t; i < d.rows; ++i)
      for (std::size_t j = t; j < d.cols; ++j) {
        if (d.at(i, j) == 0) continue;
        if (!found || abs(d.at(i, j)) < abs(d.at(pi, pj))) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    if (pi != t) {
      detail::row_swap(d, t, pi);
      detail::row_swap(s.u, t, pi);
    }
    if (pj != t) {
      detail::col_swap(d, t, pj);
      detail::col_swap(s.v, t, pj);
    }

    bool clean = true;
    for (std::size_t i = t + 1; i < d.rows; ++i) {
      if (d.at(i, t) == 0) continue;
      Integer q = d.at(i, t) / d.at(t, t);
      detail::row_add(d, i, t, -q);
      detail::row_add(s.u, i, t, -q);
      if (d.at(i, t) != 0) clean = false;  // remainder: smaller pivot exists
    }
    for (std::size_t j = t + 1; j < d.cols; ++j) {
      if (d.at(t, j) == 0) continue;
      Integer q = d.at(t, j) / d.at(t, t);
      detail::col_add(d, j, t, -q);
      detail::col_add(s.v, j, t, -q);
      if (d.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;

    // The pivot must divide the whole trailing block for the chain.
    bool divides = true;
    for (std::size_t i = t + 1; i < d.rows && divides; ++i)
      for (std::size_t j = t + 1; j < d.cols && divides; ++j)
        if (d.at(i, j) % d.at(t, t) != 0) {
          detail::row_add(d, t, i, 1);
          detail::row_add(s.u, t, i, 1);
          divides = false;
        }
    if (!divides) continue;

    if (d.at(t, t) < 0) {
      for (std::size_t j = 0; j < d.cols; ++j) d.at(t, j) = -d.at(t, j);
      for (std::size_t j = 0; j < s.u.cols; ++j) s.u.at(t, j) = -s.u.at(t, j);
    }
    ++t;
  }

  // Independent verification of the factorization.
  if (multiply(multiply(s.u, m), s.v) != d)
    throw Error("smith_normal_form: U*m*V != D");
  if (abs(determinant(s.u)) != 1 || abs(determinant(s.v)) != 1)
    throw Error("smith_normal_form: transform not unimodular");
  for (std::size_t i = 0; i + 1 < bound; ++i) {
    const Integer& a = d.at(i, i);
    const Integer& b = d.at(i + 1, i + 1);
    if ((a == 0 && b != 0) || (a != 0 && b % a != 0))
      throw Error("smith_normal_form: divisibility chain broken");
  }
  return s;
}

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<Integer> torsion;  // d1 | d2 | ..., each >= 2
  friend bool operator==(const AbelianInvariants&,
                         const AbelianInvariants&) = default;
};

inline AbelianInvariants abelian_invariants(const Presentation& p) {
  SmithNormalForm s = smith_normal_form(abelianized_matrix(p));
  std::size_t bound = s.d.rows < s.d.cols ? s.d.rows : s.d.cols;
  AbelianInvariants out;
  int nonzero = 0;
  for (std::size_t i = 0; i < bound; ++i) {
    const Integer& e = s.d.at(i, i);
    if (e == 0) continue;
    ++nonzero;
    if (e >= 2) out.torsion.push_back(e);
  }
  out.free_rank = p.n_generators - nonzero;
  return out;
}

// "Z^r + Z/d1 + Z/d2 ..."; the trivial group prints as "0".
inline std::string format_abelian(const AbelianInvariants& a) {
  std::string out;
  if (a.free_rank > 0) out = "Z^" + std::to_string(a.free_rank);
  for (const Integer& d : a.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.str();
  }
  return out.empty() ? "0" : out;
}

namespace detail {

// Least rotation of the cyclic core, over the core and its inverse: a
// canonical form shared by exactly the relators with the same normal
// closure footprint under rotation and inversion.
inline Word relator_canon(const Word& r) {
  Word core = cyclic_reduce(r).core;
  std::vector<Letter> ls = core.letters();
  Word best = core;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t k = 0; k < ls.size(); ++k) {
      std::vector<Letter> rot(ls.begin() + static_cast<std::ptrdiff_t>(k),
                              ls.end());
      rot.insert(rot.end(), ls.begin(),
                 ls.begin() + static_cast<std::ptrdiff_t>(k));
      Word w = Word::from_letters(core.rank(), rot);
      if (word_less(w, best)) best = w;
    }
    core = core.inverse();
    ls = core.letters();
  }
  return best;
}

}  // namespace detail

// Tietze simplification, deliberately weak: replace relators by their
// cyclic cores, drop trivial and duplicate relators (duplicates up to
// rotation and inversion), and eliminate a generator whenever a relator
// mentions it exactly once, to a fixpoint.  Every move preserves the
// isomorphism type.
inline Presentation simplify(const Presentation& p) {
  int n = p.n_generators;
  std::vector<Word> rs = p.relators;
  bool changed = true;
  while (changed) {
    changed = false;

    for (Word& r : rs) {
      Word core = cyclic_reduce(r).core;
      if (!(core == r)) {
        r = core;
        changed = true;
      }
    }
    std::vector<Word> kept;
    std::vector<Word> canon_seen;
    for (const Word& r : rs) {
      if (r.is_identity()) {
        changed = true;
        continue;
      }
      Word c = detail::relator_canon(r);
      bool dup = false;
      for (const Word& seen : canon_seen)
        if (seen == c) {
          dup = true;
          break;
        }
      if (dup) {
        changed = true;
        continue;
      }
      canon_seen.push_back(c);
      kept.push_back(r);
    }
    rs = std::move(kept);

    // Generator elimination: smallest generator, first usable relator.
    for (int j = 1; j <= n && !changed; ++j) {
      for (std::size_t ri = 0; ri < rs.size() && !changed; ++ri) {
        const Word& r = rs[ri];
        if (r.letter_count(Generator{j}) != 1) continue;
        // Split r = a * x_j^e * c; the relator says x_j^e = (c * a)^-1.
        std::vector<Syllable> before, after;
        std::int64_t e = 0;
        for (const Syllable& syl : r.syllables()) {
          if (syl.gen == j) {
            e = syl.exp;
          } else {
            (e == 0 ? before : after).push_back(syl);
          }
        }
        Word w = Word::from_syllables(n, after) * Word::from_syllables(n, before);
        Word u = e > 0 ? w.inverse() : w;

        std::vector<Word> sub_images;
        sub_images.reserve(static_cast<std::size_t>(n));
        for (int k = 1; k <= n; ++k)
          sub_images.push_back(k == j ? u : Word::generator(n, k));
        std::vector<Word> renumber;
        renumber.reserve(static_cast<std::size_t>(n));
        for (int k = 1; k <= n; ++k)
          renumber.push_back(k == j ? Word(n - 1)
                                    : Word::generator(n - 1, k < j ? k : k - 1));

        std::vector<Word> next;
        next.reserve(rs.size() - 1);
        for (std::size_t k = 0; k < rs.size(); ++k) {
          if (k == ri) continue;
          next.push_back(substitute(substitute(rs[k], sub_images), renumber));
        }
        rs = std::move(next);
        --n;
        changed = true;
      }
    }
  }
  return Presentation(n, std::move(rs));
}

}  // namespace fgybe
