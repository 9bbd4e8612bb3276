#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "fg/automorphism.hpp"
#include "fg/intmat.hpp"

using namespace fg;

namespace {

IntMatrix randomGL(std::mt19937_64& rng, int k, int nFactors) {
  IntMatrix product = IntMatrix::identity(k);
  for (int j = 0; j < nFactors; ++j) {
    int a = int(rng() % k), b = int(rng() % k);
    if (a == b) b = (a + 1) % k;
    ElementaryMatrix e;
    switch (rng() % 3) {
      case 0: e = {ElementaryMatrix::Kind::Transvection, a, b, rng() % 2 ? 1 : -1}; break;
      case 1: e = {ElementaryMatrix::Kind::SignFlip, a, 0, 1}; break;
      default: e = {ElementaryMatrix::Kind::Swap, a, b, 1}; break;
    }
    product = product * e.toMatrix(k);
  }
  return product;
}

}  // namespace

TEST_CASE("parse, print, multiply") {
  auto m = IntMatrix::parse("0,0,1;1,0,1;0,1,0");
  CHECK(m.str() == "0,0,1;1,0,1;0,1,0");
  CHECK(IntMatrix::parse(m.str()) == m);
  CHECK(m * IntMatrix::identity(3) == m);
  CHECK_THROWS_AS(IntMatrix::parse("1,2;3"), Error);
}

TEST_CASE("determinant and unimodularity") {
  CHECK(glCheck(IntMatrix::identity(3)) == 1);
  CHECK(glCheck(IntMatrix::parse("-1,0,0;0,1,0;0,0,1")) == -1);
  CHECK(glCheck(IntMatrix::parse("0,0,1;1,0,1;0,1,0")) == 1);
  CHECK_THROWS_AS(glCheck(IntMatrix::parse("2,0;0,2")), NotUnimodularError);
  CHECK(IntMatrix::parse("2,0;0,2").determinant() == 4);

  // Determinant is multiplicative on random unimodular matrices.
  std::mt19937_64 rng(43);
  for (int i = 0; i < 50; ++i) {
    auto a = randomGL(rng, 4, 10);
    auto b = randomGL(rng, 4, 10);
    CHECK((a * b).determinant() == a.determinant() * b.determinant());
  }
}

TEST_CASE("elementary decomposition") {
  auto identityFac = elementaryDecompose(IntMatrix::identity(3));
  CHECK(identityFac.factors.empty());
  CHECK(identityFac.residual == IntMatrix::identity(3));

  ElementaryMatrix e12{ElementaryMatrix::Kind::Transvection, 0, 1, 1};
  auto single = elementaryDecompose(e12.toMatrix(3));
  CHECK(single.product(3) == e12.toMatrix(3));
  CHECK(single.factors.size() == 1);

  std::mt19937_64 rng(47);
  for (int i = 0; i < 40; ++i) {
    auto a = randomGL(rng, 4, 20);
    auto fac = elementaryDecompose(a);
    CHECK(fac.residual == IntMatrix::identity(4));
    CHECK(fac.product(4) == a);
  }
}

TEST_CASE("lifting to automorphisms") {
  CHECK(liftToAut(IntMatrix::identity(3)).isIdentity());

  auto padded = IntMatrix::parse("1,0,0;1,1,0;0,0,1");
  CHECK(abelianization(liftToAut(padded)) == padded);

  auto flip = liftToAut(IntMatrix::parse("-1,0,0;0,1,0;0,0,1"));
  CHECK(flip.imageOf(1).str() == "A");
  CHECK(flip.imageOf(2).str() == "b");
  CHECK(flip.imageOf(3).str() == "c");

  CHECK_THROWS_AS(liftToAut(IntMatrix::parse("2,0;0,2")), NotUnimodularError);
}

TEST_CASE("characteristic polynomial") {
  // t^3 - t - 1 for the reference seed matrix (coefficients low to high).
  auto cp = characteristicPolynomial(IntMatrix::parse("0,0,1;1,0,1;0,1,0"));
  CHECK(cp == std::vector<long long>{-1, -1, 0, 1});
  auto cpId = characteristicPolynomial(IntMatrix::identity(2));
  CHECK(cpId == std::vector<long long>{1, -2, 1});  // (t-1)^2
}

TEST_CASE("homology criterion") {
  CHECK_FALSE(homologyCriterion(IntMatrix::identity(3)).passes);
  CHECK(homologyCriterion(IntMatrix::parse("0,0,1;1,0,1;0,1,0")).passes);
  // 3-cycle permutation: all eigenvalues are roots of unity.
  auto verdict = homologyCriterion(IntMatrix::parse("0,0,1;1,0,0;0,1,0"));
  CHECK_FALSE(verdict.passes);
  CHECK_FALSE(verdict.reason.empty());

  // Conjugation invariance under permutation matrices.
  auto a = IntMatrix::parse("0,0,1;1,0,1;0,1,0");
  auto p = IntMatrix::parse("0,1,0;0,0,1;1,0,0");
  auto pInv = IntMatrix::parse("0,0,1;1,0,0;0,1,0");
  CHECK(p * pInv == IntMatrix::identity(3));
  CHECK(homologyCriterion(p * a * pInv).passes == homologyCriterion(a).passes);
}

TEST_CASE("checked arithmetic") {
  long long big = std::numeric_limits<long long>::max();
  CHECK_THROWS_AS(checkedAdd(big, 1), ArithmeticOverflowError);
  CHECK_THROWS_AS(checkedMul(big, 2), ArithmeticOverflowError);
  CHECK(checkedSub(5, 9) == -4);
}
