#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fg/dynamics.hpp"
#include "fg/pipeline.hpp"

using namespace fg;

namespace {

CyclicSplitting refT1() {
  return CyclicSplitting::amalgam(3, {1, 2}, 2, Automorphism::identity(3));
}

// Reference seed: a -> b, b -> c, c -> ab.
Automorphism refTheta() {
  return Automorphism::fromFactors(
      3, {ElementaryMove::permute({2, 3, 1}), ElementaryMove::rightMultiply(3, 1)});
}

CyclicSplitting refT2() { return pushforward(refT1(), refTheta(), 8); }

}  // namespace

TEST_CASE("inequality scan passes on a small window") {
  auto reports = verifyLemma51(refT1(), refT2(), 3, 3);
  CHECK(reports.size() == 5);
  for (const auto& report : reports) {
    CHECK(report.pass());
    CHECK(report.samples > 0);
    CHECK(report.exhaustiveUpToLength == 3);
    CHECK(report.nMax == 3);
  }
  // The edge class itself is in the scan range and satisfies everything with
  // equality (the twist fixes it), so id al:3 in particular saw it.
  CHECK(translationLength(refT1(), Word::parse("b")) == 0);
  CHECK(dehnTwist(refT1()).apply(Word::parse("b")) == Word::parse("b"));
}

TEST_CASE("hypothesis check rejects a bad second splitting") {
  // Conjugate the second splitting's basis so its edge class is no longer
  // cyclically reduced in the first relative basis.
  auto badT2 = CyclicSplitting::amalgam(
      3, {1, 2}, 2,
      Automorphism::fromMove(3, ElementaryMove::innerConjugate(Word::parse("a"))));
  CHECK_THROWS_AS(verifyLemma51(refT1(), badT2, 2, 2), HypothesisUnmetError);
}

TEST_CASE("twist growth is linear with bounded deviation") {
  auto report = twistGrowth(refT1(), refT2(), Word::parse("bc"), 30);
  CHECK(report.rows.size() == 30);
  CHECK(report.linearCoefficient ==
        translationLength(refT2(), Word::parse("bc")) *
            translationLength(refT1(), refT2().edgeWordStd()));
  CHECK(report.deviationBounded);
  // Ratio within 5% at the end of the table.
  auto ratio = report.slopeRatioAtEnd;
  CHECK(ratio >= Rational(95, 100));
  CHECK(ratio <= Rational(105, 100));
  // Deviation rows really are length minus the linear prediction.
  for (const auto& row : report.rows)
    CHECK(row.deviation == row.length - row.n * report.linearCoefficient);

  CHECK_THROWS_AS(twistGrowth(refT1(), refT2(), refT2().edgeWordStd(), 5), EllipticInputError);
}

TEST_CASE("edge-current concentration improves with n") {
  auto report = stableCurrentConvergence(refT1(), refT2(), {2, 4}, 2, 2);
  CHECK(report.fillingChecked);
  CHECK(report.fillingPassed);
  REQUIRE(report.cells.size() == 4);  // forward and mirror per n
  for (const auto& cell : report.cells) {
    CHECK(cell.massOnEdge >= Rational(0));
    CHECK(cell.massOnEdge <= Rational(1));
    CHECK(cell.deficit == Rational(1) - cell.massOnEdge);
    CHECK(cell.mUsed >= 1);
  }
  // Forward deficit shrinks from n=2 to n=4.
  Rational fwd2, fwd4;
  for (const auto& cell : report.cells) {
    if (!cell.mirror && cell.n == 2) fwd2 = cell.deficit;
    if (!cell.mirror && cell.n == 4) fwd4 = cell.deficit;
  }
  CHECK(fwd4 < fwd2);
}

TEST_CASE("periodic falsifier") {
  auto idReport = periodicFalsifier(Automorphism::identity(3), 2, 1);
  REQUIRE(idReport.witness.has_value());
  CHECK(idReport.witness->word == Word::parse("a"));
  CHECK(idReport.witness->power == 1);

  // A twist fixes vertex-group classes; first-found witness is length 1, and
  // the edge class is genuinely periodic with period 1.
  auto d1 = dehnTwist(refT1());
  auto twistReport = periodicFalsifier(d1, 4, 2);
  REQUIRE(twistReport.witness.has_value());
  CHECK(twistReport.witness->power == 1);
  CHECK(conjugacyTest(d1.apply(twistReport.witness->word), twistReport.witness->word));
  CHECK(conjugacyTest(d1.apply(refT1().edgeWordStd()), refT1().edgeWordStd()));

  // The seed automorphism has no small periodic class.
  auto thetaReport = periodicFalsifier(refTheta(), 6, 4);
  CHECK_FALSE(thetaReport.witness.has_value());
  CHECK(thetaReport.scanned > 0);

  // Budget exhaustion is recorded, not fatal.
  auto grow = Automorphism::fromImages(3, {Word::parse("ab"), Word::parse("bc"), Word::parse("ca")});
  auto tight = periodicFalsifier(grow, 3, 4, 10);
  CHECK(tight.skipped > 0);
}

TEST_CASE("reports are deterministic") {
  auto a = stableCurrentConvergence(refT1(), refT2(), {2}, 2, 2);
  auto b = stableCurrentConvergence(refT1(), refT2(), {2}, 2, 2);
  REQUIRE(a.cells.size() == b.cells.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    CHECK(a.cells[i].massOnEdge == b.cells[i].massOnEdge);
    CHECK(a.cells[i].gapToEdgeCurrent.supGap == b.cells[i].gapToEdgeCurrent.supGap);
  }
}
