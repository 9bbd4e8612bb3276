#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fg/automorphism.hpp"
#include "fg/intmat.hpp"

using namespace fg;

namespace {

Automorphism tribonacci() {
  // a -> b, b -> c, c -> ab.
  return Automorphism::fromFactors(
      3, {ElementaryMove::permute({2, 3, 1}), ElementaryMove::rightMultiply(3, 1)});
}

Automorphism randomFactored(std::mt19937_64& rng, int rank, int nMoves) {
  std::vector<ElementaryMove> moves;
  for (int j = 0; j < nMoves; ++j) {
    int a = 1 + int(rng() % rank), b = 1 + int(rng() % rank);
    if (a == b) b = a % rank + 1;
    switch (rng() % 4) {
      case 0: moves.push_back(ElementaryMove::leftMultiply(a, b)); break;
      case 1: moves.push_back(ElementaryMove::rightMultiply(a, b)); break;
      case 2: moves.push_back(ElementaryMove::invert(a)); break;
      default: moves.push_back(ElementaryMove::swapGens(a, b)); break;
    }
  }
  return Automorphism::fromFactors(rank, moves);
}

}  // namespace

TEST_CASE("application of letter images") {
  // Conjugating twist: a,b fixed, c -> (ab) c (ab)^-1.
  auto inner = Automorphism::fromImages(
      3, {Word::parse("a"), Word::parse("b"), Word::parse("abcBA")});
  CHECK(inner.apply(Word::parse("c")).str() == "abcBA");
  CHECK(inner.apply(Word::parse("cb")).str() == "abcBAb");

  CHECK(Automorphism::identity(3).apply(Word::parse("abcABC")) == Word::parse("abcABC"));

  auto theta = tribonacci();
  CHECK(theta.imageOf(1).str() == "b");
  CHECK(theta.imageOf(2).str() == "c");
  CHECK(theta.imageOf(3).str() == "ab");
  CHECK(theta.apply(Word::parse("ca")).str() == "abb");
}

TEST_CASE("composition") {
  auto theta = tribonacci();
  CHECK(compose(theta, Automorphism::identity(3)).images() == theta.images());
  CHECK(compose(Automorphism::identity(3), theta).images() == theta.images());

  auto flip = Automorphism::fromMove(2, ElementaryMove::invert(1));
  CHECK(compose(flip, flip).isIdentity());

  auto lm = Automorphism::fromMove(2, ElementaryMove::leftMultiply(1, 2));
  CHECK(compose(lm, lm).imageOf(1).str() == "bba");

  CHECK_THROWS_AS(compose(theta, flip), RankMismatchError);
}

TEST_CASE("inversion requires and uses a witness") {
  auto lm = Automorphism::fromMove(2, ElementaryMove::leftMultiply(1, 2));
  CHECK(invertAut(lm).imageOf(1).str() == "Ba");
  CHECK(invertAut(Automorphism::identity(4)).isIdentity());

  auto theta = tribonacci();
  auto inv = invertAut(theta);
  CHECK(compose(inv, theta).isIdentity());
  CHECK(compose(theta, inv).isIdentity());

  // Raw images without witness are rejected, not searched.
  auto bare = Automorphism::fromImages(2, {Word::parse("ab"), Word::parse("b")});
  CHECK_THROWS_AS(invertAut(bare), NotInvertibleError);
}

TEST_CASE("abelianization conventions") {
  // Twists are trivial on homology.
  auto inner = Automorphism::fromImages(
      3, {Word::parse("a"), Word::parse("b"), Word::parse("bcB")});
  CHECK(abelianization(inner) == IntMatrix::identity(3));

  // Transvection, column convention: column j holds the exponents of the
  // image of the j-th letter.
  auto lm = Automorphism::fromMove(2, ElementaryMove::leftMultiply(1, 2));
  CHECK(abelianization(lm) == IntMatrix::parse("1,0;1,1"));

  CHECK(abelianization(tribonacci()) == IntMatrix::parse("0,0,1;1,0,1;0,1,0"));
}

TEST_CASE("abelianization is functorial") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    auto f = randomFactored(rng, 3, 6);
    auto g = randomFactored(rng, 3, 6);
    CHECK(abelianization(compose(f, g)) == abelianization(f) * abelianization(g));
    CHECK(abelianization(invertAut(f)) * abelianization(f) == IntMatrix::identity(3));
  }
}

TEST_CASE("iteration and growth") {
  auto theta = tribonacci();
  CHECK(iterateImage(theta, Word::parse("a"), 0) == Word::parse("a"));

  // Letter-count recurrence L_m = L_{m-2} + L_{m-3} for |theta^m(a)|.
  std::vector<long long> lens;
  for (int m = 0; m <= 14; ++m) lens.push_back(iterateImage(theta, Word::parse("a"), m).length());
  CHECK(lens[0] == 1);
  CHECK(lens[5] == 3);
  for (int m = 3; m <= 14; ++m) CHECK(lens[m] == lens[m - 2] + lens[m - 3]);

  // Inner automorphisms fix conjugacy classes under iteration.
  std::mt19937_64 rng(37);
  auto inner = Automorphism::fromMove(2, ElementaryMove::innerConjugate(Word::parse("ab")));
  for (int i = 0; i < 50; ++i) {
    Word w = randomReducedWord(rng, 2, 1 + int(rng() % 8));
    if (w.empty()) continue;
    CHECK(conjugacyTest(iterateImage(inner, w, 3), w));
  }
}

TEST_CASE("budget turns blowup into a typed error") {
  // a -> ab, b -> ba doubles length each step.
  auto grow = Automorphism::fromImages(2, {Word::parse("ab"), Word::parse("ba")});
  CHECK_THROWS_AS(iterateImage(grow, Word::parse("ab"), 40, 1000), BudgetExceededError);
  try {
    iterateImage(grow, Word::parse("ab"), 40, 1000);
  } catch (const BudgetExceededError& e) {
    CHECK(e.iteration() >= 0);
  }
}

TEST_CASE("pow and elementary inverses") {
  auto theta = tribonacci();
  CHECK(theta.pow(0).isIdentity());
  CHECK(theta.pow(2).images() == compose(theta, theta).images());
  CHECK(compose(theta.pow(-2), theta.pow(2)).isIdentity());

  std::mt19937_64 rng(41);
  for (int i = 0; i < 50; ++i) {
    auto f = randomFactored(rng, 3, 5);
    CHECK(compose(invertAut(f), f).isIdentity());
  }
}
