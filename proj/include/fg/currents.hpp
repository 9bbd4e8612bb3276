#pragma once

#include <map>
#include <string>

#include <boost/rational.hpp>

#include "fg/automorphism.hpp"
#include "fg/splitting.hpp"
#include "fg/word.hpp"

namespace fg {

using Rational = boost::rational<long long>;

// Finite window of a counting current: symmetrized cylinder counts for every
// reduced word of length <= radius, stored sparsely (absent key = 0).
class WindowedCurrent {
 public:
  WindowedCurrent(int rank, int radius, long long weight, std::map<std::string, long long> counts)
      : rank_(rank), radius_(radius), weight_(weight), counts_(std::move(counts)) {}

  int rank() const { return rank_; }
  int radius() const { return radius_; }
  long long weight() const { return weight_; }
  const std::map<std::string, long long>& counts() const { return counts_; }
  long long countOf(const Word& g) const;

  // One line per nonzero cylinder, "word count", after a header line.
  std::string dump() const;

 private:
  int rank_;
  int radius_;
  long long weight_;
  std::map<std::string, long long> counts_;
};

// Window of the counting current of h: countOf(g) counts occurrences of g or
// g^-1 in the cyclic word, with the proper-power rule applied to the root;
// weight equals the cyclic length of h. rank 0 means the largest generator
// appearing in h.
WindowedCurrent countingCurrent(const Word& h, int radius, int rank = 0);

// Window of the image current, i.e. the counting current of phi(h).
WindowedCurrent pushCurrent(const Automorphism& phi, const Word& h, int radius,
                            std::size_t budget = kDefaultBudget);

struct ProjectiveGap {
  int radius = 0;
  Rational supGap{0};
};

// Sup over nontrivial cylinders of the difference between weight-normalized
// counts; exact rational arithmetic.
ProjectiveGap projectiveGap(const WindowedCurrent& nu1, const WindowedCurrent& nu2);

// Tree pairing evaluated through cylinder counts alone: recovers the
// translation length of h on the tree from a window of the relative-basis
// current, without running the normal-form machinery.
long long currentPairing(const CyclicSplitting& t, const Word& h);

}  // namespace fg
