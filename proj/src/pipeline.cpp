#include "fg/pipeline.hpp"

#include <utility>

#include "fg/errors.hpp"

namespace fg {

Automorphism defaultSeedTheta(int k) {
  if (k < 3 || k > kMaxRank) throw ConfigError("seed automorphism needs rank in [3, 26]");
  // Cycle the letters and feed the top letter back multiplicatively; the
  // extra feed at k >= 5 speeds up mixing so the exponent schedule suffices.
  std::vector<int> cycle;
  for (int i = 2; i <= k; ++i) cycle.push_back(i);
  cycle.push_back(1);
  std::vector<ElementaryMove> moves = {ElementaryMove::permute(std::move(cycle)),
                                       ElementaryMove::rightMultiply(k, k - 1)};
  if (k >= 5) moves.push_back(ElementaryMove::rightMultiply(k - 1, 3));
  return Automorphism::fromFactors(k, moves);
}

CyclicSplitting defaultBaseSplitting(int k) {
  if (k < 3) throw ConfigError("base splitting needs rank at least 3");
  return CyclicSplitting::amalgam(k, {1, 2}, 2, Automorphism::identity(k));
}

namespace {

bool sameEdgeClass(const Word& u, const Word& v) {
  return conjugacyTest(u, v) || conjugacyTest(u, v.inverse());
}

}  // namespace

ConstructionCertificate constructPhi(const PipelineConfig& config) {
  const int k = config.k;
  if (k == 2) throw ConfigError("rank 2 has no room for this construction; use k >= 3");
  if (k < 3 || k > kMaxRank) throw ConfigError("rank must lie in [3, 26]");
  if (config.a.size() != k) throw ConfigError("matrix size does not match the rank");
  if (config.ellSchedule.empty() || config.nSchedule.empty() || config.mExponent < 1)
    throw ConfigError("schedules must be nonempty and mExponent positive");
  glCheck(config.a);

  Automorphism theta = config.seedTheta ? *config.seedTheta : defaultSeedTheta(k);
  if (theta.rank() != k) throw ConfigError("seed automorphism rank does not match");
  if (!theta.hasInverseWitness()) throw ConfigError("seed automorphism needs an inverse witness");
  HomologyVerdict seedVerdict = homologyCriterion(abelianization(theta));
  if (!seedVerdict.passes)
    throw ConfigError("seed automorphism fails the homology criterion: " + seedVerdict.reason);

  CyclicSplitting base = config.baseSplitting ? *config.baseSplitting : defaultBaseSplitting(k);
  if (base.rank() != k) throw ConfigError("base splitting rank does not match");
  if (base.kind() != CyclicSplitting::Kind::Amalgam)
    throw ConfigError("the construction requires an amalgam base splitting");

  ConstructionCertificate cert;
  Automorphism psi = liftToAut(config.a);
  Automorphism d1 = dehnTwist(base);
  Word c1std = base.edgeWordStd();
  Word psiC1 = psi.apply(c1std, config.budget);

  // Gate 1: an exponent whose pushforward fills against the base and moves
  // the edge class off psi(c1).
  std::optional<CyclicSplitting> pushed;
  for (int ell : config.ellSchedule) {
    CyclicSplitting candidate = pushforward(base, theta, ell);
    // Letters are the usual doubly elliptic classes; screen them before the
    // full scan.
    if (!fillingHeuristic(base, candidate, 1).passes) continue;
    FillingReport filling = fillingHeuristic(base, candidate, config.fillingLengthBound);
    if (!filling.passes) continue;
    if (sameEdgeClass(psiC1, candidate.edgeWordStd())) continue;
    pushed = candidate;
    cert.fillingReport = std::move(filling);
    cert.chosenEll = ell;
    break;
  }
  if (!pushed) throw ScheduleExhaustedError("no exponent in the schedule fills and separates the edge classes");
  Automorphism d2 = dehnTwist(*pushed);

  IntMatrix d1Star = abelianization(d1);
  IntMatrix d2Star = abelianization(d2);
  cert.twistChecksPassed = d1Star == IntMatrix::identity(k) && d2Star == IntMatrix::identity(k);

  cert.lemma51Report = verifyLemma51(base, *pushed, config.lemma51LengthBound, config.lemma51NMax,
                                     config.budget);
  cert.convergence = stableCurrentConvergence(base, *pushed, config.convergenceNList,
                                              config.convergenceMMax, config.convergenceRadius,
                                              config.budget, 0);

  // Gate 2: the first (n, m) whose composite shows no short periodic class.
  Automorphism d2inv = invertAut(d2);
  bool found = false;
  for (int n : config.nSchedule) {
    try {
      Automorphism block = compose(d1.pow(n), d2inv.pow(n));
      Automorphism candidate = psi;
      for (int m = 1; m <= config.mExponent && !found; ++m) {
        candidate = compose(block, candidate);
        FalsifierReport scan = periodicFalsifier(candidate, config.falsifierMaxLen,
                                                 config.falsifierMaxPow, config.falsifierBudget);
        if (!scan.witness) {
          cert.phi = candidate;
          cert.falsifierResult = std::move(scan);
          cert.chosenN = n;
          cert.chosenM = m;
          found = true;
        }
      }
    } catch (const BudgetExceededError&) {
      // This exponent cannot even be assembled under budget; larger ones
      // cannot either.
      break;
    }
    if (found) break;
  }
  if (!found) throw ScheduleExhaustedError("every (n, m) in the schedule left a periodic witness");

  cert.phiStar = abelianization(cert.phi);
  cert.matrixCheck = cert.phiStar == config.a;
  if (!cert.matrixCheck) throw ConfigError("constructed map does not realize the target matrix");

  cert.caveats = {
      "full irreducibility and hyperbolicity are heuristically supported, not certified",
      "the filling check covers cyclic classes up to the length bound only; higher-rank free factors are not enumerated",
      "the exponent schedules are engineering policy; the existence result carries no effective bounds",
  };
  return cert;
}

}  // namespace fg
