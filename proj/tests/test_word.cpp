#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "fg/automorphism.hpp"
#include "fg/word.hpp"

using namespace fg;

namespace {

// Brute-force least rotation under the letter order, used as an oracle for
// the canonical rotation.
std::vector<Letter> naiveLeastRotation(const std::vector<Letter>& v) {
  auto cmp = [](const std::vector<Letter>& x, const std::vector<Letter>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      int a = letterOrderKey(x[i]), b = letterOrderKey(y[i]);
      if (a != b) return a < b;
    }
    return false;
  };
  std::vector<Letter> best = v;
  std::vector<Letter> rot = v;
  for (std::size_t i = 1; i < v.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (cmp(rot, best)) best = rot;
  }
  return best;
}

// Brute-force conjugacy: search all conjugators up to the given length.
bool naiveConjugate(const Word& x, const Word& y, int depth) {
  std::vector<Word> conjugators = {Word()};
  int rank = std::max(x.maxGenerator(), y.maxGenerator());
  for (int len = 1; len <= depth; ++len)
    forEachReducedWord(rank, len, [&](const Word& u) {
      conjugators.push_back(u);
      return true;
    });
  for (const auto& u : conjugators)
    if (u * x * u.inverse() == y) return true;
  return false;
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(Word::parse("aAb").str() == "b");
  CHECK(Word::parse("1").str() == "1");
  CHECK(Word::parse("abBa").str() == "aa");
  // Idempotence and inverse cancellation on random words.
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Word w = randomReducedWord(rng, 3, 12);
    CHECK((w * w.inverse()).empty());
    CHECK(Word::parse(w.str()) == w);
  }
}

TEST_CASE("word algebra") {
  Word a = Word::parse("a");
  CHECK((a * a * a) == Word::parse("aaa"));
  CHECK(Word::parse("ab").pow(3).str() == "ababab");
  CHECK(Word::parse("ab").pow(-1).str() == "BA");
  CHECK(Word::parse("ab").inverse().str() == "BA");
  CHECK(Word::parse("abc").maxGenerator() == 3);
}

TEST_CASE("cyclic reduction") {
  auto h1 = CyclicWord::of(Word::parse("abA"));
  CHECK(h1.representative().str() == "b");
  CHECK(h1.conjugator().str() == "a");

  auto h2 = CyclicWord::of(Word::parse("ab"));
  CHECK(h2.representative().str() == "ab");
  CHECK(h2.conjugator().empty());

  auto h3 = CyclicWord::of(Word::parse("abcBA"));
  CHECK(h3.representative().str() == "c");
  CHECK(h3.conjugator().str() == "ab");

  CHECK_THROWS_AS(CyclicWord::of(Word::parse("aA")), TrivialWordError);

  // w = conjugator * representative * conjugator^-1, and cyclic length is a
  // conjugation invariant.
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Word w = randomReducedWord(rng, 3, 14);
    if (w.empty()) continue;
    Word u = randomReducedWord(rng, 3, 6);
    auto h = CyclicWord::of(w);
    CHECK(h.conjugator() * h.representative() * h.conjugator().inverse() == w);
    auto hc = CyclicWord::of(u * w * u.inverse());
    CHECK(hc.length() == h.length());
    CHECK(hc == h);
  }
}

TEST_CASE("canonical rotation matches brute force") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 400; ++i) {
    Word w = randomCyclicallyReducedWord(rng, 3, 1 + int(rng() % 14));
    auto h = CyclicWord::of(w);
    CHECK(h.canonicalRotation() == naiveLeastRotation(w.letters()));
  }
  // Periodic words stress the rotation tie-breaking.
  for (int i = 0; i < 100; ++i) {
    Word root = randomCyclicallyReducedWord(rng, 2, 1 + int(rng() % 4));
    Word w = root.pow(3);
    if (CyclicWord::of(w).length() != 3 * root.length()) continue;
    CHECK(CyclicWord::of(w).canonicalRotation() == naiveLeastRotation(w.letters()));
  }
}

TEST_CASE("occurrence counting") {
  // Cyclic: proper-power rule, rotations, absent letter.
  CHECK(occurrencesCyclic(Word::parse("a"), CyclicWord::of(Word::parse("aaa"))) == 3);
  CHECK(occurrencesCyclic(Word::parse("ab"), CyclicWord::of(Word::parse("abab"))) == 2);
  CHECK(occurrencesCyclic(Word::parse("c"), CyclicWord::of(Word::parse("ab"))) == 0);

  // Linear: direct and inverse occurrences, no wraparound.
  CHECK(occurrencesLinear(Word::parse("a"), Word::parse("aba")) == 2);
  CHECK(occurrencesLinear(Word::parse("a"), Word::parse("Ab")) == 1);
  // Concatenation sanity with zero cancellation bound: o(a,w) + o(a,w') <=
  // <a, ww'> + C with C = 0 for the identity change.
  CHECK(occurrencesLinear(Word::parse("a"), Word::parse("ab")) +
            occurrencesLinear(Word::parse("a"), Word::parse("ab")) <=
        occurrencesCyclic(Word::parse("a"), CyclicWord::of(Word::parse("abab"))) + 0);

  // g and g^-1 count identically (current symmetrization).
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    Word g = randomReducedWord(rng, 3, 1 + int(rng() % 3));
    Word h = randomCyclicallyReducedWord(rng, 3, 2 + int(rng() % 10));
    if (g.empty()) continue;
    CHECK(occurrencesCyclic(g, CyclicWord::of(h)) ==
          occurrencesCyclic(g.inverse(), CyclicWord::of(h)));
  }
}

TEST_CASE("conjugacy test") {
  CHECK(conjugacyTest(Word::parse("ab"), Word::parse("ba")));
  CHECK_FALSE(conjugacyTest(Word::parse("ab"), Word::parse("BA")));
  CHECK_FALSE(conjugacyTest(Word::parse("a"), Word::parse("b")));

  // Agreement with brute-force conjugator search.
  std::mt19937_64 rng(19);
  for (int i = 0; i < 60; ++i) {
    Word x = randomReducedWord(rng, 2, 1 + int(rng() % 5));
    Word y = randomReducedWord(rng, 2, 1 + int(rng() % 5));
    if (x.empty() || y.empty()) continue;
    CHECK(conjugacyTest(x, y) == naiveConjugate(x, y, 6));
  }
  // ugu^-1 ~ g for random conjugators.
  for (int i = 0; i < 100; ++i) {
    Word g = randomReducedWord(rng, 3, 1 + int(rng() % 10));
    Word u = randomReducedWord(rng, 3, int(rng() % 8));
    if (g.empty()) continue;
    CHECK(conjugacyTest(u * g * u.inverse(), g));
  }
}

TEST_CASE("proper powers and periods") {
  auto h = CyclicWord::of(Word::parse("ababab"));
  auto pd = properPower(h);
  CHECK(pd.multiplicity == 3);
  CHECK(pd.root == Word::parse("ab"));
  CHECK(h.period() == 2);

  auto prim = properPower(CyclicWord::of(Word::parse("aab")));
  CHECK(prim.multiplicity == 1);
}

TEST_CASE("enumeration helpers are canonical and complete") {
  // Class representatives: pairwise non-conjugate, all cyclically reduced.
  auto reps = cyclicClassRepresentatives(2, 4);
  for (const auto& r : reps) {
    auto h = CyclicWord::of(r);
    CHECK(h.representative() == r);
    CHECK(h.canonicalRotation() == r.letters());
  }
  // Count reduced words of length 3 over rank 2: 4 * 3 * 3.
  int count = 0;
  forEachReducedWord(2, 3, [&](const Word&) {
    ++count;
    return true;
  });
  CHECK(count == 36);
}

TEST_CASE("bounded cancellation bracket") {
  auto identEst = bccEstimate(Automorphism::identity(2), 4);
  CHECK(identEst.empiricalLower == 0);
  CHECK(identEst.structuralUpper == 0);

  // a -> ab, b -> b: the pair (a, b^-1) cancels one letter.
  auto phi = Automorphism::fromMove(2, ElementaryMove::rightMultiply(1, 2));
  auto est = bccEstimate(phi, 4);
  CHECK(est.empiricalLower >= 1);
  CHECK(est.empiricalLower <= est.structuralUpper);

  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    std::vector<ElementaryMove> moves;
    for (int j = 0; j < 4; ++j) {
      int a = 1 + int(rng() % 3), b = 1 + int(rng() % 3);
      if (a == b) b = a % 3 + 1;
      moves.push_back(rng() % 2 ? ElementaryMove::leftMultiply(a, b)
                                : ElementaryMove::rightMultiply(a, b));
    }
    auto est2 = bccEstimate(Automorphism::fromFactors(3, moves), 3);
    CHECK(est2.empiricalLower <= est2.structuralUpper);
  }
}
