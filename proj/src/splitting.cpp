#include "fg/splitting.hpp"

#include <algorithm>
#include <cstdlib>

#include "fg/errors.hpp"

namespace fg {

namespace {

void checkRelChange(int rank, const Automorphism& relChange) {
  if (relChange.rank() != rank) throw RankMismatchError();
  if (!relChange.hasInverseWitness()) throw ConfigError("relative basis change needs an inverse witness");
}

void checkGenRange(int rank, int g, const char* what) {
  if (g < 1 || g > rank) throw ConfigError(std::string(what) + " out of range");
}

// Maximal same-membership run, cyclic; indices are into the rotation vector.
struct Run {
  std::vector<Letter> letters;
  bool inA = false;
  bool pureEdge = false;
};

std::vector<Run> cyclicRuns(const CyclicSplitting& t, const std::vector<Letter>& rot) {
  const int n = static_cast<int>(rot.size());
  auto isA = [&](Letter v) { return t.inAPart(std::abs(v)); };
  int start = 0;
  bool mixed = false;
  for (int i = 0; i < n; ++i) {
    if (isA(rot[i]) != isA(rot[(i + n - 1) % n])) {
      start = i;
      mixed = true;
      break;
    }
  }
  std::vector<Run> runs;
  for (int off = 0; off < n; ++off) {
    Letter v = rot[(start + off) % n];
    if (runs.empty() || (mixed && isA(v) != runs.back().inA)) {
      runs.push_back(Run{{}, isA(v), true});
    }
    runs.back().letters.push_back(v);
    if (std::abs(v) != t.edgeLetter()) runs.back().pureEdge = false;
  }
  return runs;
}

// Signed edge power at one end of a letter span; the stripped letters all
// carry the same sign because the span is freely reduced.
long long stripEdgePower(std::vector<Letter>& span, int edge, bool fromFront) {
  long long power = 0;
  while (!span.empty()) {
    Letter v = fromFront ? span.front() : span.back();
    if (std::abs(v) != edge) break;
    power += v > 0 ? 1 : -1;
    if (fromFront) {
      span.erase(span.begin());
    } else {
      span.pop_back();
    }
  }
  return power;
}

TReduceResult analyzeAmalgam(const CyclicSplitting& t, const std::vector<Letter>& rot) {
  std::vector<Run> runs = cyclicRuns(t, rot);
  bool anyB = std::any_of(runs.begin(), runs.end(), [](const Run& r) { return !r.inA; });
  if (!anyB) return Elliptic{"A", Word::fromLetters(rot)};
  std::vector<int> trueA;
  for (int i = 0; i < static_cast<int>(runs.size()); ++i) {
    if (runs[i].inA && !runs[i].pureEdge) trueA.push_back(i);
  }
  if (trueA.empty()) return Elliptic{"B", Word::fromLetters(rot)};

  TReducedForm form;
  form.kind = CyclicSplitting::Kind::Amalgam;
  const int m = static_cast<int>(trueA.size());
  const int nRuns = static_cast<int>(runs.size());
  for (int s = 0; s < m; ++s) {
    TReducedForm::AmalgamBlock block;
    std::vector<Letter> span = runs[static_cast<size_t>(trueA[s])].letters;
    // The leading edge power belongs to the previous block's trailing slot.
    long long lead = stripEdgePower(span, t.edgeLetter(), true);
    block.i = stripEdgePower(span, t.edgeLetter(), false);
    block.x = Word::fromLetters(std::move(span));
    std::vector<Letter> between;
    for (int r = trueA[s] + 1; r % nRuns != trueA[(s + 1) % m]; ++r) {
      const auto& ls = runs[static_cast<size_t>(r % nRuns)].letters;
      between.insert(between.end(), ls.begin(), ls.end());
    }
    block.y = Word::fromLetters(std::move(between));
    form.amalgamBlocks.push_back(std::move(block));
    if (s > 0) form.amalgamBlocks[static_cast<size_t>(s) - 1].j = lead;
    if (s == m - 1) {
      // Cyclic wrap: the lead power of block 0 closes the last block.
      std::vector<Letter> firstSpan = runs[static_cast<size_t>(trueA[0])].letters;
      form.amalgamBlocks.back().j = stripEdgePower(firstSpan, t.edgeLetter(), true);
    }
  }
  form.length = 2 * m;
  return form;
}

TReduceResult analyzeHnn(const CyclicSplitting& t, const std::vector<Letter>& rot) {
  const int n = static_cast<int>(rot.size());
  const int t0 = t.stableLetter();
  const int c = t.edgeLetter();
  std::vector<int> tpos;
  for (int i = 0; i < n; ++i) {
    if (std::abs(rot[i]) == t0) tpos.push_back(i);
  }
  if (tpos.empty()) return Elliptic{"base", Word::fromLetters(rot)};

  // A stable-letter pair t^-1 c^i t (i != 0) spells an element of the base
  // group and sheds both stable letters; no further pinches cascade because
  // the surviving gaps are never pure edge powers.
  const int nt = static_cast<int>(tpos.size());
  std::vector<bool> pinched(static_cast<size_t>(nt), false);
  for (int k = 0; k < nt; ++k) {
    int next = (k + 1) % nt;
    if (rot[static_cast<size_t>(tpos[static_cast<size_t>(k)])] > 0) continue;
    if (rot[static_cast<size_t>(tpos[static_cast<size_t>(next)])] < 0) continue;
    bool pureEdgeGap = true;
    bool empty = true;
    for (int p = (tpos[static_cast<size_t>(k)] + 1) % n; p != tpos[static_cast<size_t>(next)]; p = (p + 1) % n) {
      empty = false;
      if (std::abs(rot[static_cast<size_t>(p)]) != c) {
        pureEdgeGap = false;
        break;
      }
    }
    if (!empty && pureEdgeGap) pinched[static_cast<size_t>(k)] = pinched[static_cast<size_t>(next)] = true;
  }
  std::vector<int> real;
  for (int k = 0; k < nt; ++k) {
    if (!pinched[static_cast<size_t>(k)]) real.push_back(tpos[static_cast<size_t>(k)]);
  }
  if (real.empty()) return Elliptic{"base", Word::fromLetters(rot)};

  TReducedForm form;
  form.kind = CyclicSplitting::Kind::Hnn;
  const int m = static_cast<int>(real.size());
  for (int s = 0; s < m; ++s) {
    int from = real[static_cast<size_t>(s)];
    int to = real[static_cast<size_t>((s + 1) % m)];
    std::vector<Letter> span;
    for (int p = (from + 1) % n; p != to; p = (p + 1) % n) span.push_back(rot[static_cast<size_t>(p)]);
    TReducedForm::HnnBlock block;
    block.i = stripEdgePower(span, c, false);
    block.x = Word::fromLetters(std::move(span));
    block.eps = rot[static_cast<size_t>(to)] > 0 ? 1 : -1;
    form.hnnBlocks.push_back(std::move(block));
  }
  form.length = m;
  return form;
}

TReduceResult analyze(const CyclicSplitting& t, const Word& x) {
  Word rel = t.relChange().apply(x);
  if (rel.empty()) throw TrivialWordError();
  CyclicWord cyc = CyclicWord::of(rel);
  const std::vector<Letter>& rot = cyc.canonicalRotation();
  if (t.kind() == CyclicSplitting::Kind::Amalgam) return analyzeAmalgam(t, rot);
  return analyzeHnn(t, rot);
}

}  // namespace

CyclicSplitting CyclicSplitting::amalgam(int rank, std::vector<int> aPart, int edgeLetter,
                                         Automorphism relChange) {
  if (rank < 3) throw ConfigError("amalgam splittings need rank >= 3");
  checkRelChange(rank, relChange);
  std::sort(aPart.begin(), aPart.end());
  aPart.erase(std::unique(aPart.begin(), aPart.end()), aPart.end());
  for (int g : aPart) checkGenRange(rank, g, "aPart letter");
  if (aPart.size() < 2) throw ConfigError("amalgam A side needs at least two letters");
  if (static_cast<int>(aPart.size()) >= rank) throw ConfigError("amalgam B side must be nonempty");
  if (!std::binary_search(aPart.begin(), aPart.end(), edgeLetter)) {
    throw ConfigError("edge letter must belong to the A side");
  }
  CyclicSplitting t;
  t.kind_ = Kind::Amalgam;
  t.rank_ = rank;
  t.relChange_ = std::move(relChange);
  t.aPart_ = std::move(aPart);
  t.edgeLetter_ = edgeLetter;
  return t;
}

CyclicSplitting CyclicSplitting::hnn(int rank, int edgeLetter, int stableLetter,
                                     Automorphism relChange) {
  if (rank < 2) throw ConfigError("hnn splittings need rank >= 2");
  checkRelChange(rank, relChange);
  checkGenRange(rank, edgeLetter, "edge letter");
  checkGenRange(rank, stableLetter, "stable letter");
  if (edgeLetter == stableLetter) throw ConfigError("edge letter must differ from the stable letter");
  CyclicSplitting t;
  t.kind_ = Kind::Hnn;
  t.rank_ = rank;
  t.relChange_ = std::move(relChange);
  t.edgeLetter_ = edgeLetter;
  t.stableLetter_ = stableLetter;
  return t;
}

std::vector<int> CyclicSplitting::bPart() const {
  std::vector<int> out;
  for (int g = 1; g <= rank_; ++g) {
    if (!inAPart(g)) out.push_back(g);
  }
  return out;
}

bool CyclicSplitting::inAPart(int gen) const {
  if (kind_ == Kind::Hnn) return gen != stableLetter_;
  return std::binary_search(aPart_.begin(), aPart_.end(), gen);
}

Word CyclicSplitting::edgeWordStd() const {
  return invertAut(relChange_).apply(Word::letter(edgeLetter_));
}

TReduceResult tReduce(const CyclicSplitting& t, const Word& x) { return analyze(t, x); }

int translationLength(const CyclicSplitting& t, const Word& x) {
  if (x.empty()) return 0;
  TReduceResult result = analyze(t, x);
  if (std::holds_alternative<Elliptic>(result)) return 0;
  return std::get<TReducedForm>(result).length;
}

Automorphism dehnTwist(const CyclicSplitting& t) {
  const int c = t.edgeLetter();
  std::vector<ElementaryMove> moves;
  if (t.kind() == CyclicSplitting::Kind::Amalgam) {
    for (int z : t.bPart()) {
      // z -> c z c^-1 as four Nielsen moves.
      moves.push_back(ElementaryMove::leftMultiply(z, c));
      moves.push_back(ElementaryMove::invert(c));
      moves.push_back(ElementaryMove::rightMultiply(z, c));
      moves.push_back(ElementaryMove::invert(c));
    }
  } else {
    moves.push_back(ElementaryMove::leftMultiply(t.stableLetter(), c));
  }
  Automorphism rel = Automorphism::fromFactors(t.rank(), moves);
  return compose(compose(invertAut(t.relChange()), rel), t.relChange());
}

CyclicSplitting pushforward(const CyclicSplitting& t, const Automorphism& theta, int ell) {
  if (ell < 0) throw ConfigError("pushforward exponent must be nonnegative");
  if (!theta.hasInverseWitness()) throw NotInvertibleError();
  Automorphism sigma = compose(t.relChange(), theta.pow(ell));
  if (t.kind() == CyclicSplitting::Kind::Amalgam) {
    return CyclicSplitting::amalgam(t.rank(), t.aPart(), t.edgeLetter(), std::move(sigma));
  }
  return CyclicSplitting::hnn(t.rank(), t.edgeLetter(), t.stableLetter(), std::move(sigma));
}

FillingReport fillingHeuristic(const CyclicSplitting& t1, const CyclicSplitting& t2, int lengthBound,
                               std::size_t maxViolations) {
  if (t1.rank() != t2.rank()) throw RankMismatchError();
  FillingReport report;
  report.lengthBound = lengthBound;
  report.passes = true;
  for (const Word& w : cyclicClassRepresentatives(t1.rank(), lengthBound)) {
    ++report.scanned;
    if (translationLength(t1, w) == 0 && translationLength(t2, w) == 0) {
      report.passes = false;
      if (report.violations.size() < maxViolations) report.violations.push_back(w);
    }
  }
  return report;
}

}  // namespace fg
