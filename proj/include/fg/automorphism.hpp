#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fg/intmat.hpp"
#include "fg/word.hpp"

namespace fg {

// Hard cap on intermediate word length per application; converts exponential
// growth into a typed error instead of a silent memory blowup.
constexpr std::size_t kDefaultBudget = 10'000'000;

// Nielsen-style elementary automorphisms.
struct ElementaryMove {
  enum class Kind { LeftMultiply, RightMultiply, Invert, Swap, Permute, InnerConjugate };
  Kind kind;
  int i = 0;  // 1-based generator indices
  int j = 0;
  std::vector<int> perm;  // Permute: image generator of each generator, 1-based
  Word u;                 // InnerConjugate: x -> u x u^{-1}

  static ElementaryMove leftMultiply(int i, int j) { return {Kind::LeftMultiply, i, j, {}, {}}; }
  static ElementaryMove rightMultiply(int i, int j) { return {Kind::RightMultiply, i, j, {}, {}}; }
  static ElementaryMove invert(int i) { return {Kind::Invert, i, 0, {}, {}}; }
  static ElementaryMove swapGens(int i, int j) { return {Kind::Swap, i, j, {}, {}}; }
  static ElementaryMove permute(std::vector<int> perm) { return {Kind::Permute, 0, 0, std::move(perm), {}}; }
  static ElementaryMove innerConjugate(Word u) { return {Kind::InnerConjugate, 0, 0, {}, std::move(u)}; }

  // Inverse as a short sequence of elementary moves.
  std::vector<ElementaryMove> inverseMoves() const;
};

// An automorphism of F_k given by letter images, with an optional inverse
// witness and optional factored elementary form.
class Automorphism {
 public:
  Automorphism() = default;

  static Automorphism identity(int rank);
  static Automorphism fromImages(int rank, std::vector<Word> images,
                                 std::optional<std::vector<Word>> inverseImages = std::nullopt);
  static Automorphism fromMove(int rank, const ElementaryMove& move);
  static Automorphism fromFactors(int rank, const std::vector<ElementaryMove>& factors);

  int rank() const { return rank_; }
  const std::vector<Word>& images() const { return images_; }
  const std::optional<std::vector<Word>>& inverseImages() const { return inverseImages_; }
  const std::optional<std::vector<ElementaryMove>>& factors() const { return factors_; }
  const Word& imageOf(int gen) const { return images_[static_cast<size_t>(gen) - 1]; }
  bool isIdentity() const;
  bool hasInverseWitness() const { return inverseImages_.has_value() || factors_.has_value(); }

  Word apply(const Word& w, std::size_t budget = kDefaultBudget) const;
  Automorphism pow(int n, std::size_t budget = kDefaultBudget) const;

  friend Automorphism compose(const Automorphism& f, const Automorphism& g);
  friend Automorphism invertAut(const Automorphism& f);

 private:
  int rank_ = 0;
  std::vector<Word> images_;
  std::optional<std::vector<Word>> inverseImages_;
  std::optional<std::vector<ElementaryMove>> factors_;
};

// Images of result = f applied to images of g (result = f after g).
Automorphism compose(const Automorphism& f, const Automorphism& g);

// Requires an inverse witness; the returned map is verified on every letter.
Automorphism invertAut(const Automorphism& f);

// phi^m(w) by m successive budget-checked applications.
Word iterateImage(const Automorphism& phi, const Word& w, int m, std::size_t budget = kDefaultBudget);

// The induced matrix on H_1: column j is the exponent vector of phi(a_j).
IntMatrix abelianization(const Automorphism& phi);

// Factored automorphism psi with abelianization(psi) = A exactly.
Automorphism liftToAut(const IntMatrix& a);

struct BccEstimate {
  long long empiricalLower = 0;
  long long structuralUpper = 0;
  int searchDepth = 0;
};

// Brackets the bounded cancellation constant of the basis change given by
// `change`: exhaustive defect search up to `depth` below, classical coarse
// bound (sum of image lengths minus one per letter) above.
BccEstimate bccEstimate(const Automorphism& change, int depth);

// Coarse upper bound alone, without the exhaustive search.
long long bccStructuralUpper(const Automorphism& change);

}  // namespace fg
