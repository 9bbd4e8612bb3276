#pragma once

#include <variant>
#include <vector>

#include "fg/automorphism.hpp"
#include "fg/word.hpp"

namespace fg {

// One-edge cyclic splitting of F_k, described in a relative basis reached
// through relChange. Lengths are computed in relative coordinates:
// length(T, x) = relativeLength(relChange(x)).
class CyclicSplitting {
 public:
  enum class Kind { Amalgam, Hnn };

  static CyclicSplitting amalgam(int rank, std::vector<int> aPart, int edgeLetter,
                                 Automorphism relChange);
  static CyclicSplitting hnn(int rank, int edgeLetter, int stableLetter, Automorphism relChange);

  Kind kind() const { return kind_; }
  int rank() const { return rank_; }
  const Automorphism& relChange() const { return relChange_; }
  const std::vector<int>& aPart() const { return aPart_; }
  std::vector<int> bPart() const;
  int edgeLetter() const { return edgeLetter_; }
  int stableLetter() const { return stableLetter_; }
  bool inAPart(int gen) const;

  // The edge stabilizer generator written in the standard basis.
  Word edgeWordStd() const;

 private:
  CyclicSplitting() = default;

  Kind kind_ = Kind::Amalgam;
  int rank_ = 0;
  Automorphism relChange_;
  std::vector<int> aPart_;   // amalgam only, sorted; contains edgeLetter_
  int edgeLetter_ = 0;       // relative-basis generator index
  int stableLetter_ = 0;     // hnn only
};

// Conjugacy normal form adapted to the splitting. Amalgam blocks spell
// x_s c^{i_s} y_s c^{j_s}; hnn blocks spell x_s c^{i_s} t^{eps_s}.
struct TReducedForm {
  struct AmalgamBlock {
    Word x;            // vertex-A word, no edge-letter power at either end
    long long i = 0;   // edge-letter power before y
    Word y;            // vertex-B word over bPart and interior edge powers
    long long j = 0;   // edge-letter power after y
  };
  struct HnnBlock {
    Word x;            // base-group word (may embed t^-1 c^i t pinch spans)
    long long i = 0;   // edge-letter power before the stable letter
    int eps = 1;       // sign of the stable letter closing the block
  };

  CyclicSplitting::Kind kind = CyclicSplitting::Kind::Amalgam;
  std::vector<AmalgamBlock> amalgamBlocks;
  std::vector<HnnBlock> hnnBlocks;
  int length = 0;  // tree translation length
};

struct Elliptic {
  std::string vertexGroup;  // "A", "B", or "base"
  Word representative;      // cyclically reduced relative-basis word
};

using TReduceResult = std::variant<TReducedForm, Elliptic>;

TReduceResult tReduce(const CyclicSplitting& t, const Word& x);

// Translation length of the conjugacy class of x on the Bass-Serre tree;
// 0 exactly when x is elliptic (or trivial).
int translationLength(const CyclicSplitting& t, const Word& x);

// The twist automorphism of the splitting, in standard coordinates.
Automorphism dehnTwist(const CyclicSplitting& t);

// The splitting T.theta^ell (relChange composed with theta^ell).
CyclicSplitting pushforward(const CyclicSplitting& t, const Automorphism& theta, int ell);

struct FillingReport {
  bool passes = false;
  int lengthBound = 0;
  long long scanned = 0;
  std::vector<Word> violations;  // cyclically reduced, elliptic in both trees
};

// Scans every cyclic conjugacy class up to the length bound for elements
// elliptic in both trees. Non-certifying: free factors of rank >= 2 are
// not examined.
FillingReport fillingHeuristic(const CyclicSplitting& t1, const CyclicSplitting& t2, int lengthBound,
                               std::size_t maxViolations = 5);

}  // namespace fg
