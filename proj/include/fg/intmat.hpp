#pragma once

#include <string>
#include <vector>

#include "fg/errors.hpp"

namespace fg {

long long checkedAdd(long long a, long long b);
long long checkedSub(long long a, long long b);
long long checkedMul(long long a, long long b);

// A k x k integer matrix with exact, overflow-checked arithmetic.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int k, std::vector<long long> entries);
  static IntMatrix identity(int k);
  static IntMatrix zero(int k);
  // Inline row syntax "0,0,1;1,0,1;0,1,0".
  static IntMatrix parse(const std::string& text);

  int size() const { return k_; }
  long long at(int i, int j) const { return entries_[static_cast<size_t>(i) * k_ + j]; }
  long long& at(int i, int j) { return entries_[static_cast<size_t>(i) * k_ + j]; }

  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix&) const = default;

  // Exact determinant via fraction-free (Bareiss) elimination.
  long long determinant() const;
  std::string str() const;

 private:
  int k_ = 0;
  std::vector<long long> entries_;
};

// Verifies A is in GL(k,Z); returns the determinant (+1 or -1) or throws
// NotUnimodularError.
int glCheck(const IntMatrix& a);

// Elementary matrices generating GL(k,Z): transvections I + s*E_ij (s = +-1),
// sign flips diag(..,-1,..), and row swaps.
struct ElementaryMatrix {
  enum class Kind { Transvection, SignFlip, Swap };
  Kind kind;
  int i = 0;  // 0-based
  int j = 0;
  int s = 1;  // +-1, transvections only

  IntMatrix toMatrix(int k) const;
  ElementaryMatrix inverse() const;
};

struct ElementaryFactorization {
  std::vector<ElementaryMatrix> factors;  // product in order equals the input
  IntMatrix residual;                     // identity on success
  IntMatrix product(int k) const;
};

ElementaryFactorization elementaryDecompose(const IntMatrix& a);

// Characteristic polynomial coefficients c[0..k], c[k] = 1, of det(tI - A).
std::vector<long long> characteristicPolynomial(const IntMatrix& a);

struct HomologyVerdict {
  bool passes = false;
  std::string reason;  // empty when passing
  std::vector<long long> charPoly;
};

// Sufficient-condition check on the abelianized action: the characteristic
// polynomial must be irreducible over Q, must not be a polynomial in t^d for
// d >= 2, and must have no cyclotomic factor.  Advisory, never a certificate.
HomologyVerdict homologyCriterion(const IntMatrix& a);

}  // namespace fg
