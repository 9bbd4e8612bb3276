#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fg/errors.hpp"

namespace fg {

// A signed generator letter: +g is the g-th basis letter, -g its inverse (g in 1..rank).
using Letter = int;

constexpr int kMaxRank = 26;

struct Basis {
  int rank;
  std::vector<std::string> names;

  static Basis standard(int k);
};

// A freely reduced word over a fixed basis.  The class invariant is that no
// adjacent pair of letters is mutually inverse; all factories reduce.
class Word {
 public:
  Word() = default;

  static Word fromLetters(std::vector<Letter> letters);
  static Word letter(Letter v);
  // Parses the compact text format: generator i as the i-th lowercase Latin
  // letter, its inverse as the uppercase letter; "1" is the empty word.
  static Word parse(const std::string& text);

  const std::vector<Letter>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int maxGenerator() const;

  Word inverse() const;
  Word operator*(const Word& other) const;
  Word pow(int n) const;

  std::string str() const;

  auto operator<=>(const Word&) const = default;

 private:
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  std::vector<Letter> letters_;
};

// Freely reduces a raw letter sequence.
std::vector<Letter> reduceLetters(const std::vector<Letter>& raw);
inline Word reduce(const Word& w) { return w; }

// Total order on letters used for canonical rotations: generator index
// ascending, positive sign before negative.
inline int letterOrderKey(Letter v) { return 2 * (std::abs(v) - 1) + (v < 0 ? 1 : 0); }

// A conjugacy-class representative: a cyclically reduced word together with
// the conjugator peeled off during cyclic reduction and the lexicographically
// least rotation under the fixed letter order.
class CyclicWord {
 public:
  // Throws TrivialWordError if w reduces to the identity.
  static CyclicWord of(const Word& w);

  const Word& representative() const { return representative_; }
  const Word& conjugator() const { return conjugator_; }
  const std::vector<Letter>& canonicalRotation() const { return canonical_; }
  int length() const { return representative_.length(); }
  std::string str() const;

  // Smallest d dividing length() such that the cyclic word is d-periodic.
  int period() const;

  bool operator==(const CyclicWord& other) const { return canonical_ == other.canonical_; }
  bool operator<(const CyclicWord& other) const;

 private:
  Word representative_;
  Word conjugator_;
  std::vector<Letter> canonical_;
};

// Number of positions where g or g^{-1} occurs as a subword of w (no wraparound).
long long occurrencesLinear(const Word& g, const Word& w);

// Number of starting positions in the cyclic word h at which g or g^{-1}
// occurs as a subword of the bi-infinite periodic word.
long long occurrencesCyclic(const Word& g, const CyclicWord& h);

// True iff x and y are conjugate (inverses are not identified).
bool conjugacyTest(const Word& x, const Word& y);

struct PowerDecomposition {
  int multiplicity;  // m with h = root^m
  Word root;         // cyclically reduced, not a proper power
};
PowerDecomposition properPower(const CyclicWord& h);

// Enumeration helpers.  Visit every reduced word of length exactly `len`
// over rank k; `fn` may return false to stop early.
void forEachReducedWord(int rank, int len, const std::function<bool(const Word&)>& fn);

// Canonical representatives of conjugacy classes of cyclically reduced words
// with 1 <= length <= maxLen, in deterministic enumeration order.
std::vector<Word> cyclicClassRepresentatives(int rank, int maxLen);

Word randomReducedWord(std::mt19937_64& rng, int rank, int len);
Word randomCyclicallyReducedWord(std::mt19937_64& rng, int rank, int len);

}  // namespace fg
