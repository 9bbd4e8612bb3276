#include "fg/currents.hpp"

#include <algorithm>
#include <cstdlib>
#include <cctype>
#include <sstream>

#include "fg/errors.hpp"

namespace fg {

namespace {

// Longest cyclic run of edge letters (same generator, either sign block is
// sign-uniform because the word is reduced).
int maxEdgeRun(const std::vector<Letter>& rot, int edge) {
  const int n = static_cast<int>(rot.size());
  int best = 0;
  int run = 0;
  for (int i = 0; i < 2 * n; ++i) {
    if (std::abs(rot[static_cast<size_t>(i % n)]) == edge) {
      run = std::min(run + 1, n);
      best = std::max(best, run);
    } else {
      run = 0;
    }
  }
  return best;
}

Word edgePower(int edge, long long i) {
  std::vector<Letter> ls(static_cast<size_t>(std::llabs(i)), i > 0 ? edge : -edge);
  return Word::fromLetters(std::move(ls));
}

}  // namespace

long long WindowedCurrent::countOf(const Word& g) const {
  auto it = counts_.find(g.str());
  return it == counts_.end() ? 0 : it->second;
}

std::string WindowedCurrent::dump() const {
  std::ostringstream out;
  out << "rank " << rank_ << " radius " << radius_ << " weight " << weight_ << "\n";
  for (const auto& [word, count] : counts_) out << word << " " << count << "\n";
  return out.str();
}

WindowedCurrent countingCurrent(const Word& h, int radius, int rank) {
  if (radius < 1) throw ConfigError("window radius must be at least 1");
  CyclicWord cyc = CyclicWord::of(h);
  PowerDecomposition pd = properPower(cyc);
  CyclicWord rootCyc = CyclicWord::of(pd.root);
  if (rank == 0) rank = std::max(1, h.maxGenerator());
  if (rank < h.maxGenerator()) throw ConfigError("window rank smaller than a generator in the word");
  // One sliding pass over the cyclic root; every window of a cyclically
  // reduced word is itself reduced, so occurrences need no further screening.
  const std::vector<Letter>& rot = rootCyc.canonicalRotation();
  const int n = static_cast<int>(rot.size());
  auto toChar = [](Letter v) {
    return static_cast<char>(v > 0 ? 'a' + v - 1 : 'A' - v - 1);
  };
  std::map<std::string, long long> raw;
  for (int p = 0; p < n; ++p) {
    std::string key;
    key.reserve(static_cast<size_t>(radius));
    for (int len = 1; len <= radius; ++len) {
      key.push_back(toChar(rot[static_cast<size_t>((p + len - 1) % n)]));
      ++raw[key];
    }
  }
  std::map<std::string, long long> counts;
  for (const auto& [key, occ] : raw) {
    std::string inv(key.rbegin(), key.rend());
    for (char& ch : inv) ch = static_cast<char>(std::islower(static_cast<unsigned char>(ch))
                                                    ? std::toupper(static_cast<unsigned char>(ch))
                                                    : std::tolower(static_cast<unsigned char>(ch)));
    auto invIt = raw.find(inv);
    long long sym = occ + (invIt == raw.end() ? 0 : invIt->second);
    long long total = checkedMul(sym, pd.multiplicity);
    counts[key] = total;
    counts[inv] = total;
  }
  return WindowedCurrent(rank, radius, cyc.length(), std::move(counts));
}

WindowedCurrent pushCurrent(const Automorphism& phi, const Word& h, int radius, std::size_t budget) {
  return countingCurrent(phi.apply(h, budget), radius, phi.rank());
}

ProjectiveGap projectiveGap(const WindowedCurrent& nu1, const WindowedCurrent& nu2) {
  if (nu1.rank() != nu2.rank() || nu1.radius() != nu2.radius()) throw RadiusMismatchError();
  if (nu1.weight() <= 0 || nu2.weight() <= 0) throw ConfigError("projective comparison needs positive weights");
  ProjectiveGap gap;
  gap.radius = nu1.radius();
  auto consider = [&](const std::string& key) {
    Word g = Word::parse(key);
    Rational d = Rational(nu1.countOf(g), nu1.weight()) - Rational(nu2.countOf(g), nu2.weight());
    if (d < Rational(0)) d = -d;
    gap.supGap = std::max(gap.supGap, d);
  };
  for (const auto& [key, count] : nu1.counts()) consider(key);
  for (const auto& [key, count] : nu2.counts()) {
    if (nu1.counts().find(key) == nu1.counts().end()) consider(key);
  }
  return gap;
}

long long currentPairing(const CyclicSplitting& t, const Word& h) {
  if (h.empty()) return 0;
  Word rel = t.relChange().apply(h);
  if (rel.empty()) return 0;
  CyclicWord cyc = CyclicWord::of(rel);
  const std::vector<Letter>& rot = cyc.canonicalRotation();
  const int c = t.edgeLetter();
  const int runCap = maxEdgeRun(rot, c);
  auto cnt = [&](const Word& g) { return occurrencesCyclic(g, cyc); };

  if (t.kind() == CyclicSplitting::Kind::Hnn) {
    // Stable letters minus two per base-group pinch t^-1 c^i t; each pinch
    // shows up under its own key and under the negated key.
    long long total = cnt(Word::letter(t.stableLetter()));
    for (long long i = -runCap; i <= runCap; ++i) {
      if (i == 0) continue;
      total -= cnt(Word::letter(-t.stableLetter()) * edgePower(c, i) * Word::letter(t.stableLetter()));
    }
    return total;
  }

  // Amalgam: every vertex-boundary 2-cylinder counts one crossing; pure edge
  // spans between B letters cancel the two crossings of an absorbed block.
  std::vector<Letter> aLetters;
  std::vector<Letter> bLetters;
  for (int g = 1; g <= t.rank(); ++g) {
    auto& side = t.inAPart(g) ? aLetters : bLetters;
    side.push_back(g);
    side.push_back(-g);
  }
  long long total = 0;
  for (Letter z : bLetters) {
    for (Letter x : aLetters) total += cnt(Word::fromLetters({z, x}));
  }
  for (Letter z : bLetters) {
    for (Letter zp : bLetters) {
      for (long long i = -runCap; i <= runCap; ++i) {
        if (i == 0) continue;
        total -= cnt(Word::letter(z) * edgePower(c, i) * Word::letter(zp));
      }
    }
  }
  return total;
}

}  // namespace fg
