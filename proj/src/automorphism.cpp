#include "fg/automorphism.hpp"

#include <algorithm>
#include <map>

namespace fg {

namespace {

void checkGen(int rank, int g) {
  if (g < 1 || g > rank) throw ConfigError("generator index out of range");
}

std::vector<Word> moveImages(int rank, const ElementaryMove& m) {
  std::vector<Word> images;
  images.reserve(rank);
  for (int g = 1; g <= rank; ++g) images.push_back(Word::letter(g));
  switch (m.kind) {
    case ElementaryMove::Kind::LeftMultiply:
      checkGen(rank, m.i);
      checkGen(rank, m.j);
      if (m.i == m.j) throw ConfigError("multiply moves need i != j");
      images[m.i - 1] = Word::fromLetters({m.j, m.i});
      break;
    case ElementaryMove::Kind::RightMultiply:
      checkGen(rank, m.i);
      checkGen(rank, m.j);
      if (m.i == m.j) throw ConfigError("multiply moves need i != j");
      images[m.i - 1] = Word::fromLetters({m.i, m.j});
      break;
    case ElementaryMove::Kind::Invert:
      checkGen(rank, m.i);
      images[m.i - 1] = Word::letter(-m.i);
      break;
    case ElementaryMove::Kind::Swap:
      checkGen(rank, m.i);
      checkGen(rank, m.j);
      if (m.i == m.j) throw ConfigError("swap needs i != j");
      images[m.i - 1] = Word::letter(m.j);
      images[m.j - 1] = Word::letter(m.i);
      break;
    case ElementaryMove::Kind::Permute: {
      if (static_cast<int>(m.perm.size()) != rank) throw ConfigError("permutation size must equal rank");
      std::vector<bool> seen(static_cast<size_t>(rank), false);
      for (int g = 1; g <= rank; ++g) {
        int img = m.perm[static_cast<size_t>(g) - 1];
        checkGen(rank, img);
        if (seen[static_cast<size_t>(img) - 1]) throw ConfigError("permutation is not a bijection");
        seen[static_cast<size_t>(img) - 1] = true;
        images[g - 1] = Word::letter(img);
      }
      break;
    }
    case ElementaryMove::Kind::InnerConjugate:
      if (m.u.maxGenerator() > rank) throw ConfigError("conjugator uses a generator out of range");
      for (int g = 1; g <= rank; ++g) images[g - 1] = m.u * Word::letter(g) * m.u.inverse();
      break;
  }
  return images;
}

Word applyImages(const std::vector<Word>& images, const Word& w, std::size_t budget) {
  std::vector<Letter> out;
  std::size_t pushes = 0;
  for (Letter v : w.letters()) {
    const Word& img = images[static_cast<size_t>(std::abs(v)) - 1];
    const auto& ls = img.letters();
    auto push = [&](Letter x) {
      if (++pushes > budget || out.size() > budget) throw BudgetExceededError(out.size());
      if (!out.empty() && out.back() == -x) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    };
    if (v > 0) {
      for (Letter x : ls) push(x);
    } else {
      for (auto it = ls.rbegin(); it != ls.rend(); ++it) push(-*it);
    }
  }
  return Word::fromLetters(std::move(out));
}

}  // namespace

std::vector<ElementaryMove> ElementaryMove::inverseMoves() const {
  switch (kind) {
    case Kind::LeftMultiply:
      return {invert(j), leftMultiply(i, j), invert(j)};
    case Kind::RightMultiply:
      return {invert(j), rightMultiply(i, j), invert(j)};
    case Kind::Invert:
    case Kind::Swap:
      return {*this};
    case Kind::Permute: {
      std::vector<int> inv(perm.size());
      for (size_t g = 0; g < perm.size(); ++g) inv[static_cast<size_t>(perm[g]) - 1] = static_cast<int>(g) + 1;
      return {permute(std::move(inv))};
    }
    case Kind::InnerConjugate:
      return {innerConjugate(u.inverse())};
  }
  throw Error("unreachable");
}

Automorphism Automorphism::identity(int rank) {
  Automorphism a;
  a.rank_ = rank;
  for (int g = 1; g <= rank; ++g) a.images_.push_back(Word::letter(g));
  a.inverseImages_ = a.images_;
  a.factors_ = std::vector<ElementaryMove>{};
  return a;
}

Automorphism Automorphism::fromImages(int rank, std::vector<Word> images,
                                      std::optional<std::vector<Word>> inverseImages) {
  if (static_cast<int>(images.size()) != rank) throw ConfigError("need one image per generator");
  for (const Word& w : images) {
    if (w.maxGenerator() > rank) throw ConfigError("image uses a generator out of range");
  }
  if (inverseImages) {
    if (static_cast<int>(inverseImages->size()) != rank) throw ConfigError("need one inverse image per generator");
    for (int g = 1; g <= rank; ++g) {
      Word back = applyImages(*inverseImages, images[static_cast<size_t>(g) - 1], kDefaultBudget);
      Word forth = applyImages(images, (*inverseImages)[static_cast<size_t>(g) - 1], kDefaultBudget);
      if (back != Word::letter(g) || forth != Word::letter(g)) {
        throw ConfigError("inverse images do not invert the images");
      }
    }
  }
  Automorphism a;
  a.rank_ = rank;
  a.images_ = std::move(images);
  a.inverseImages_ = std::move(inverseImages);
  return a;
}

Automorphism Automorphism::fromMove(int rank, const ElementaryMove& move) {
  Automorphism a;
  a.rank_ = rank;
  a.images_ = moveImages(rank, move);
  std::vector<Word> inv;
  inv.reserve(rank);
  for (int g = 1; g <= rank; ++g) inv.push_back(Word::letter(g));
  for (const ElementaryMove& m : move.inverseMoves()) inv = [&] {
      std::vector<Word> stepImages = moveImages(rank, m);
      std::vector<Word> next;
      next.reserve(rank);
      for (const Word& w : inv) next.push_back(applyImages(stepImages, w, kDefaultBudget));
      return next;
    }();
  a.inverseImages_ = std::move(inv);
  a.factors_ = std::vector<ElementaryMove>{move};
  return a;
}

Automorphism Automorphism::fromFactors(int rank, const std::vector<ElementaryMove>& factors) {
  Automorphism acc = identity(rank);
  for (const ElementaryMove& m : factors) acc = compose(acc, fromMove(rank, m));
  return acc;
}

bool Automorphism::isIdentity() const {
  for (int g = 1; g <= rank_; ++g) {
    if (images_[static_cast<size_t>(g) - 1] != Word::letter(g)) return false;
  }
  return true;
}

Word Automorphism::apply(const Word& w, std::size_t budget) const {
  return applyImages(images_, w, budget);
}

Automorphism Automorphism::pow(int n, std::size_t budget) const {
  (void)budget;
  if (n < 0) return invertAut(*this).pow(-n);
  Automorphism acc = identity(rank_);
  for (int i = 0; i < n; ++i) acc = compose(acc, *this);
  return acc;
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  if (f.rank_ != g.rank_) throw RankMismatchError();
  Automorphism out;
  out.rank_ = f.rank_;
  out.images_.reserve(f.rank_);
  for (const Word& w : g.images_) out.images_.push_back(f.apply(w));
  if (f.inverseImages_ && g.inverseImages_) {
    std::vector<Word> inv;
    inv.reserve(f.rank_);
    for (const Word& w : *f.inverseImages_) inv.push_back(applyImages(*g.inverseImages_, w, kDefaultBudget));
    out.inverseImages_ = std::move(inv);
  }
  if (f.factors_ && g.factors_) {
    std::vector<ElementaryMove> fac = *f.factors_;
    fac.insert(fac.end(), g.factors_->begin(), g.factors_->end());
    out.factors_ = std::move(fac);
  }
  return out;
}

Automorphism invertAut(const Automorphism& f) {
  if (!f.hasInverseWitness()) throw NotInvertibleError();
  std::vector<Word> inv;
  if (f.inverseImages_) {
    inv = *f.inverseImages_;
  } else {
    std::vector<ElementaryMove> invFactors;
    for (auto it = f.factors_->rbegin(); it != f.factors_->rend(); ++it) {
      auto moves = it->inverseMoves();
      invFactors.insert(invFactors.end(), moves.begin(), moves.end());
    }
    inv = Automorphism::fromFactors(f.rank_, invFactors).images_;
  }
  Automorphism out;
  out.rank_ = f.rank_;
  out.images_ = inv;
  out.inverseImages_ = f.images_;
  if (f.factors_) {
    std::vector<ElementaryMove> invFactors;
    for (auto it = f.factors_->rbegin(); it != f.factors_->rend(); ++it) {
      auto moves = it->inverseMoves();
      invFactors.insert(invFactors.end(), moves.begin(), moves.end());
    }
    out.factors_ = std::move(invFactors);
  }
  // Round trip re-check on letters; advisory, so a budget blowup on huge
  // composite images skips it rather than failing the inversion.
  try {
    for (int g = 1; g <= f.rank_; ++g) {
      if (out.apply(f.imageOf(g)) != Word::letter(g)) throw ConfigError("inverse witness failed verification");
    }
  } catch (const BudgetExceededError&) {
  }
  return out;
}

Word iterateImage(const Automorphism& phi, const Word& w, int m, std::size_t budget) {
  Word cur = w;
  for (int i = 1; i <= m; ++i) {
    try {
      cur = phi.apply(cur, budget);
    } catch (const BudgetExceededError& e) {
      throw BudgetExceededError(e.reached(), i);
    }
  }
  return cur;
}

IntMatrix abelianization(const Automorphism& phi) {
  const int k = phi.rank();
  IntMatrix m = IntMatrix::zero(k);
  for (int j = 1; j <= k; ++j) {
    for (Letter v : phi.imageOf(j).letters()) {
      int i = std::abs(v);
      m.at(i - 1, j - 1) = checkedAdd(m.at(i - 1, j - 1), v > 0 ? 1 : -1);
    }
  }
  return m;
}

Automorphism liftToAut(const IntMatrix& a) {
  ElementaryFactorization fac = elementaryDecompose(a);
  const int k = a.size();
  std::vector<ElementaryMove> moves;
  for (const ElementaryMatrix& f : fac.factors) {
    switch (f.kind) {
      case ElementaryMatrix::Kind::Transvection:
        if (f.s > 0) {
          moves.push_back(ElementaryMove::rightMultiply(f.j + 1, f.i + 1));
        } else {
          moves.push_back(ElementaryMove::invert(f.i + 1));
          moves.push_back(ElementaryMove::rightMultiply(f.j + 1, f.i + 1));
          moves.push_back(ElementaryMove::invert(f.i + 1));
        }
        break;
      case ElementaryMatrix::Kind::SignFlip:
        moves.push_back(ElementaryMove::invert(f.i + 1));
        break;
      case ElementaryMatrix::Kind::Swap:
        moves.push_back(ElementaryMove::swapGens(f.i + 1, f.j + 1));
        break;
    }
  }
  return Automorphism::fromFactors(k, moves);
}

long long bccStructuralUpper(const Automorphism& change) {
  long long sum = 0;
  for (const Word& img : change.images()) sum += std::max(0, img.length() - 1);
  return sum;
}

BccEstimate bccEstimate(const Automorphism& change, int depth) {
  BccEstimate est;
  est.searchDepth = depth;
  est.structuralUpper = bccStructuralUpper(change);

  std::vector<Word> words;
  words.push_back(Word());
  for (int len = 1; len <= depth; ++len) {
    forEachReducedWord(change.rank(), len, [&](const Word& w) {
      if (w.length() == len) words.push_back(w);
      return true;
    });
  }
  std::vector<Word> imgs;
  imgs.reserve(words.size());
  for (const Word& w : words) imgs.push_back(change.apply(w));

  long long best = 0;
  for (size_t i = 0; i < words.size(); ++i) {
    for (size_t j = 0; j < words.size(); ++j) {
      const Word& w = words[i];
      const Word& wp = words[j];
      if (!w.empty() && !wp.empty() && w.letters().back() == -wp.letters().front()) continue;
      const Word prod = imgs[i] * imgs[j];
      long long defect = (imgs[i].length() + imgs[j].length() - prod.length()) / 2;
      best = std::max(best, defect);
    }
  }
  est.empiricalLower = best;
  if (est.empiricalLower > est.structuralUpper) throw Error("internal: BCC bracket inverted");
  return est;
}

}  // namespace fg
