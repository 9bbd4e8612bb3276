#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fg/automorphism.hpp"
#include "fg/dynamics.hpp"
#include "fg/intmat.hpp"
#include "fg/splitting.hpp"

namespace fg {

// Seed automorphism used when the config does not supply one: a_i -> a_{i+1}
// for i < k, a_k -> a_1 a_2. Its homology action passes homologyCriterion
// for every supported rank; constructPhi re-verifies at startup.
Automorphism defaultSeedTheta(int k);

// Amalgam over the first two letters with the second as designated edge.
CyclicSplitting defaultBaseSplitting(int k);

struct PipelineConfig {
  int k = 3;
  IntMatrix a;  // target homology action, must pass glCheck
  std::optional<Automorphism> seedTheta;
  std::optional<CyclicSplitting> baseSplitting;
  std::vector<int> ellSchedule = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16};
  std::vector<int> nSchedule = {2, 4, 8, 16};
  int mExponent = 1;  // largest twist-product exponent tried per n
  int falsifierMaxLen = 4;
  int falsifierMaxPow = 3;
  std::size_t falsifierBudget = 100000;  // per-application cap in the scan
  int fillingLengthBound = 4;
  int lemma51LengthBound = 3;
  int lemma51NMax = 3;
  std::vector<int> convergenceNList = {2, 4};
  int convergenceMMax = 2;
  int convergenceRadius = 2;
  std::size_t budget = kDefaultBudget;
  unsigned long long randomSeed = 0;  // reserved for sampling subcommands
};

struct ConstructionCertificate {
  Automorphism phi;
  IntMatrix phiStar;
  bool matrixCheck = false;   // phiStar == config.a, exact
  bool twistChecksPassed = false;  // both twist abelianizations are identity
  int chosenEll = 0;
  int chosenN = 0;
  int chosenM = 0;
  FillingReport fillingReport;
  std::vector<InequalityReport> lemma51Report;
  ConvergenceReport convergence;
  FalsifierReport falsifierResult;
  std::vector<std::string> caveats;
};

// Builds phi = (twist1^n twist2^-n)^m psi with psi a factored lift of the
// target matrix, escalating ell and (n, m) through the schedules until the
// filling, distinctness, and falsifier gates pass.
ConstructionCertificate constructPhi(const PipelineConfig& config);

}  // namespace fg
