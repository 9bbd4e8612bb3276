#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fg/automorphism.hpp"
#include "fg/currents.hpp"
#include "fg/splitting.hpp"
#include "fg/word.hpp"

namespace fg {

struct InequalityViolation {
  Word x;
  int n = 0;
  int r = 0;
  long long lhs = 0;
  long long rhs = 0;
};

struct InequalityReport {
  std::string id;  // "al:1".."al:5"
  long long samples = 0;
  long long skippedSamples = 0;  // cells abandoned when an iterate hit the budget
  std::vector<InequalityViolation> violations;
  int exhaustiveUpToLength = 0;
  int nMax = 0;

  bool pass() const { return violations.empty(); }
};

// Exhaustive exact check of the five twist-occurrence inequalities over every
// cyclic conjugacy class with length <= lengthBound and all n <= nMax,
// r <= n. Pairing counts are taken in T1-relative coordinates; the
// cancellation constant is the coarse upper bracket of the basis-change
// cancellation bound, times four, taken in both directions.
std::vector<InequalityReport> verifyLemma51(const CyclicSplitting& t1, const CyclicSplitting& t2,
                                            int lengthBound, int nMax,
                                            std::size_t budget = kDefaultBudget);

struct FitConstants {
  Rational beta1{0};
  Rational beta2{0};
  Rational gamma1{0};
  Rational gamma2{0};
  Rational gamma3{0};
  Rational c{0};
  std::vector<Rational> residuals;  // advisory only
};

struct GrowthRow {
  int n = 0;
  long long length = 0;     // translation length of the n-th twist image on T1
  long long deviation = 0;  // length minus the linear prediction
};

struct GrowthReport {
  std::vector<GrowthRow> rows;
  long long linearCoefficient = 0;  // per-step prediction: lenT2(x) * lenT1(c2)
  Rational slopeRatioAtEnd{0};      // length / (n * linearCoefficient) at n = nMax
  long long maxAbsDeviation = 0;
  bool deviationBounded = false;  // no growth in |deviation| over the second half
  FitConstants fit;
};

// Table of translation lengths of the twist iterates of x on the other tree,
// with the additive deviation from the exact linear term.
GrowthReport twistGrowth(const CyclicSplitting& t1, const CyclicSplitting& t2, const Word& x,
                         int nMax, std::size_t budget = kDefaultBudget);

struct ConvergenceCell {
  int n = 0;
  int mUsed = 0;       // largest fully completed iterate under budget
  bool mirror = false;  // inverse run, compared against the other edge class
  bool truncated = false;
  Rational massOnEdge{0};
  Rational deficit{0};
  ProjectiveGap gapToEdgeCurrent;
};

struct ConvergenceReport {
  bool fillingChecked = false;
  bool fillingPassed = false;
  Word seed;  // standard-coordinate seed conjugacy class
  std::vector<ConvergenceCell> cells;
};

// For each n, iterates twist1^n twist2^-n on a relative basis letter and
// measures how much of the image concentrates on the edge class of t1; the
// mirror cells run the inverse map against the edge class of t2.
ConvergenceReport stableCurrentConvergence(const CyclicSplitting& t1, const CyclicSplitting& t2,
                                           const std::vector<int>& nList, int mMax, int radius,
                                           std::size_t budget = kDefaultBudget,
                                           int fillingLengthBound = 4);

struct PeriodicWitness {
  Word word;      // canonical cyclic representative
  int power = 0;  // p with phi^p(word) conjugate to word
};

struct FalsifierReport {
  std::optional<PeriodicWitness> witness;
  long long scanned = 0;
  long long skipped = 0;  // cells abandoned on budget
  int maxLen = 0;
  int maxPow = 0;
};

// Scans cyclic conjugacy classes up to maxLen for a class periodic under phi
// with power <= maxPow; returns the first witness in deterministic order.
FalsifierReport periodicFalsifier(const Automorphism& phi, int maxLen, int maxPow,
                                  std::size_t budget = kDefaultBudget);

}  // namespace fg
