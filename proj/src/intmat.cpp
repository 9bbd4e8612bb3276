#include "fg/intmat.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace fg {

long long checkedAdd(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflowError();
  return r;
}

long long checkedSub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflowError();
  return r;
}

long long checkedMul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflowError();
  return r;
}

IntMatrix::IntMatrix(int k, std::vector<long long> entries) : k_(k), entries_(std::move(entries)) {
  if (k < 1 || entries_.size() != static_cast<size_t>(k) * k) throw Error("bad matrix shape");
}

IntMatrix IntMatrix::identity(int k) {
  IntMatrix m = zero(k);
  for (int i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::zero(int k) { return IntMatrix(k, std::vector<long long>(static_cast<size_t>(k) * k, 0)); }

IntMatrix IntMatrix::parse(const std::string& text) {
  std::vector<std::vector<long long>> rows;
  std::stringstream ss(text);
  std::string rowText;
  while (std::getline(ss, rowText, ';')) {
    std::vector<long long> row;
    std::stringstream rs(rowText);
    std::string cell;
    while (std::getline(rs, cell, ',')) row.push_back(std::stoll(cell));
    rows.push_back(std::move(row));
  }
  const int k = static_cast<int>(rows.size());
  std::vector<long long> entries;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != k) throw Error("matrix rows must all have length k");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return IntMatrix(k, std::move(entries));
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (k_ != other.k_) throw RankMismatchError();
  IntMatrix out = zero(k_);
  for (int i = 0; i < k_; ++i) {
    for (int j = 0; j < k_; ++j) {
      long long acc = 0;
      for (int t = 0; t < k_; ++t) acc = checkedAdd(acc, checkedMul(at(i, t), other.at(t, j)));
      out.at(i, j) = acc;
    }
  }
  return out;
}

long long IntMatrix::determinant() const {
  const int n = k_;
  std::vector<long long> m = entries_;
  long long prev = 1;
  int sign = 1;
  for (int col = 0; col < n - 1; ++col) {
    int p = -1;
    for (int r = col; r < n; ++r) {
      if (m[static_cast<size_t>(r) * n + col] != 0) {
        p = r;
        break;
      }
    }
    if (p == -1) return 0;
    if (p != col) {
      for (int c = 0; c < n; ++c) std::swap(m[static_cast<size_t>(p) * n + c], m[static_cast<size_t>(col) * n + c]);
      sign = -sign;
    }
    for (int r = col + 1; r < n; ++r) {
      for (int c = col + 1; c < n; ++c) {
        long long num = checkedSub(checkedMul(m[static_cast<size_t>(r) * n + c], m[static_cast<size_t>(col) * n + col]),
                                   checkedMul(m[static_cast<size_t>(r) * n + col], m[static_cast<size_t>(col) * n + c]));
        m[static_cast<size_t>(r) * n + c] = num / prev;  // exact by Bareiss
      }
      m[static_cast<size_t>(r) * n + col] = 0;
    }
    prev = m[static_cast<size_t>(col) * n + col];
  }
  return sign * m[static_cast<size_t>(n - 1) * n + (n - 1)];
}

std::string IntMatrix::str() const {
  std::string s;
  for (int i = 0; i < k_; ++i) {
    for (int j = 0; j < k_; ++j) {
      s += std::to_string(at(i, j));
      if (j + 1 < k_) s += ',';
    }
    if (i + 1 < k_) s += ';';
  }
  return s;
}

int glCheck(const IntMatrix& a) {
  long long det = a.determinant();
  if (det != 1 && det != -1) throw NotUnimodularError(det);
  return static_cast<int>(det);
}

IntMatrix ElementaryMatrix::toMatrix(int k) const {
  IntMatrix m = IntMatrix::identity(k);
  switch (kind) {
    case Kind::Transvection:
      m.at(i, j) = s;
      break;
    case Kind::SignFlip:
      m.at(i, i) = -1;
      break;
    case Kind::Swap:
      m.at(i, i) = 0;
      m.at(j, j) = 0;
      m.at(i, j) = 1;
      m.at(j, i) = 1;
      break;
  }
  return m;
}

ElementaryMatrix ElementaryMatrix::inverse() const {
  ElementaryMatrix inv = *this;
  if (kind == Kind::Transvection) inv.s = -s;
  return inv;
}

IntMatrix ElementaryFactorization::product(int k) const {
  IntMatrix acc = IntMatrix::identity(k);
  for (const auto& f : factors) acc = acc * f.toMatrix(k);
  return acc * residual;
}

namespace {

struct RowReducer {
  IntMatrix m;
  std::vector<ElementaryMatrix> ops;  // applied on the left, in order

  int n() const { return m.size(); }

  // row_r += s * row_p, recorded as a unit transvection.
  void addRow(int r, int p, int s) {
    for (int c = 0; c < n(); ++c) m.at(r, c) = checkedAdd(m.at(r, c), checkedMul(s, m.at(p, c)));
    ops.push_back({ElementaryMatrix::Kind::Transvection, r, p, s});
  }

  void addRowMultiple(int r, int p, long long q) {
    const int s = q > 0 ? 1 : -1;
    for (long long t = 0; t < std::llabs(q); ++t) addRow(r, p, s);
  }

  void swapRows(int r, int p) {
    for (int c = 0; c < n(); ++c) std::swap(m.at(r, c), m.at(p, c));
    ops.push_back({ElementaryMatrix::Kind::Swap, r, p, 1});
  }

  void negateRow(int r) {
    for (int c = 0; c < n(); ++c) m.at(r, c) = -m.at(r, c);
    ops.push_back({ElementaryMatrix::Kind::SignFlip, r, 0, 1});
  }
};

}  // namespace

ElementaryFactorization elementaryDecompose(const IntMatrix& a) {
  glCheck(a);
  const int n = a.size();
  RowReducer red{a, {}};

  for (int col = 0; col < n; ++col) {
    // Euclidean reduction of column `col` over rows col..n-1.
    for (;;) {
      std::vector<int> nonzero;
      for (int r = col; r < n; ++r) {
        if (red.m.at(r, col) != 0) nonzero.push_back(r);
      }
      if (nonzero.empty()) throw Error("internal: singular column during decomposition");
      if (nonzero.size() == 1) {
        int r = nonzero.front();
        if (r != col) red.swapRows(r, col);
        if (red.m.at(col, col) < 0) red.negateRow(col);
        if (red.m.at(col, col) != 1) throw Error("internal: column gcd is not 1 in a unimodular matrix");
        break;
      }
      // Smallest-pivot selection, ties broken by lowest row index.
      int p = nonzero.front();
      for (int r : nonzero) {
        if (std::llabs(red.m.at(r, col)) < std::llabs(red.m.at(p, col))) p = r;
      }
      for (int r : nonzero) {
        if (r == p) continue;
        long long q = red.m.at(r, col) / red.m.at(p, col);
        if (q != 0) red.addRowMultiple(r, p, -q);
      }
    }
    for (int r = col + 1; r < n; ++r) {
      long long q = red.m.at(r, col);
      if (q != 0) red.addRowMultiple(r, col, -q);
    }
  }
  // Upper unitriangular now; clear above the diagonal.
  for (int col = n - 1; col >= 1; --col) {
    for (int r = col - 1; r >= 0; --r) {
      long long q = red.m.at(r, col);
      if (q != 0) red.addRowMultiple(r, col, -q);
    }
  }

  ElementaryFactorization fac;
  fac.residual = red.m;  // identity on success
  fac.factors.reserve(red.ops.size());
  for (const auto& op : red.ops) fac.factors.push_back(op.inverse());
  return fac;
}

std::vector<long long> characteristicPolynomial(const IntMatrix& a) {
  const int k = a.size();
  std::vector<long long> c(static_cast<size_t>(k) + 1, 0);
  c[k] = 1;
  IntMatrix m = a;
  auto trace = [&](const IntMatrix& x) {
    long long t = 0;
    for (int i = 0; i < x.size(); ++i) t = checkedAdd(t, x.at(i, i));
    return t;
  };
  long long ci = -trace(m);
  c[k - 1] = ci;
  for (int i = 2; i <= k; ++i) {
    IntMatrix shifted = m;
    for (int d = 0; d < k; ++d) shifted.at(d, d) = checkedAdd(shifted.at(d, d), ci);
    m = a * shifted;
    long long t = trace(m);
    if (t % i != 0) throw Error("internal: Faddeev-LeVerrier division not exact");
    ci = -t / i;
    c[k - i] = ci;
  }
  return c;
}

namespace {

long long polyEval(const std::vector<long long>& p, long long t) {
  long long acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = checkedAdd(checkedMul(acc, t), *it);
  return acc;
}

// Exact division of p by monic q over Z; empty result when q does not divide p.
bool monicDivides(const std::vector<long long>& q, std::vector<long long> p) {
  const int dq = static_cast<int>(q.size()) - 1;
  const int dp = static_cast<int>(p.size()) - 1;
  if (dp < dq) return false;
  for (int d = dp; d >= dq; --d) {
    long long lead = p[d];
    if (lead == 0) continue;
    for (int i = 0; i <= dq; ++i) p[d - dq + i] = checkedSub(p[d - dq + i], checkedMul(lead, q[i]));
  }
  return std::all_of(p.begin(), p.end(), [](long long v) { return v == 0; });
}

std::vector<long long> polyDivExact(const std::vector<long long>& p, const std::vector<long long>& q) {
  std::vector<long long> rem = p;
  const int dq = static_cast<int>(q.size()) - 1;
  const int dp = static_cast<int>(p.size()) - 1;
  std::vector<long long> quot(static_cast<size_t>(dp - dq) + 1, 0);
  for (int d = dp; d >= dq; --d) {
    long long lead = rem[d];
    if (lead == 0) continue;
    quot[d - dq] = lead;  // q monic
    for (int i = 0; i <= dq; ++i) rem[d - dq + i] = checkedSub(rem[d - dq + i], checkedMul(lead, q[i]));
  }
  return quot;
}

std::vector<long long> cyclotomic(int n) {
  // x^n - 1 divided by the product of cyclotomics of proper divisors.
  std::vector<long long> p(static_cast<size_t>(n) + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = polyDivExact(p, cyclotomic(d));
  }
  return p;
}

int eulerPhi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

// Looks for a monic integer factor of degree d with |coefficients| <= bound
// and constant term +-1.  Returns true when found.
bool findMonicFactor(const std::vector<long long>& p, int d, long long bound, long long effortCap, bool& capped) {
  std::vector<long long> q(static_cast<size_t>(d) + 1, 0);
  q[d] = 1;
  long long tried = 0;
  std::function<bool(int)> rec = [&](int idx) -> bool {
    if (idx == d) {
      for (long long b0 : {1LL, -1LL}) {
        q[0] = b0;
        if (++tried > effortCap) {
          capped = true;
          return false;
        }
        if (monicDivides(q, p)) return true;
      }
      return false;
    }
    for (long long v = -bound; v <= bound; ++v) {
      q[idx] = v;
      if (rec(idx + 1)) return true;
      if (capped) return false;
    }
    return false;
  };
  return rec(1);
}

}  // namespace

HomologyVerdict homologyCriterion(const IntMatrix& a) {
  glCheck(a);
  HomologyVerdict v;
  v.charPoly = characteristicPolynomial(a);
  const int k = a.size();
  const auto& p = v.charPoly;

  // Rational roots of a monic integer polynomial with constant term +-1 can
  // only be +-1.
  if (polyEval(p, 1) == 0 || polyEval(p, -1) == 0) {
    v.reason = "characteristic polynomial has a rational root (t -+ 1 divides it)";
    return v;
  }
  // Mahler-type coefficient bound for a monic factor.
  long long norm2 = 0;
  for (long long c : p) norm2 = checkedAdd(norm2, checkedMul(c, c));
  const long long normCeil = static_cast<long long>(std::ceil(std::sqrt(static_cast<double>(norm2))));
  for (int d = 2; d <= k / 2; ++d) {
    const long long bound = checkedMul(1LL << d, normCeil);
    bool capped = false;
    if (findMonicFactor(p, d, bound, 20'000'000, capped)) {
      v.reason = "characteristic polynomial has a degree-" + std::to_string(d) + " integer factor";
      return v;
    }
    if (capped) {
      v.reason = "factor search effort cap exceeded; irreducibility undecided";
      return v;
    }
  }
  for (int d = 2; d <= k; ++d) {
    if (k % d != 0) continue;
    bool inPowerOfD = true;
    for (size_t i = 0; i < p.size(); ++i) {
      if (p[i] != 0 && i % d != 0) {
        inPowerOfD = false;
        break;
      }
    }
    if (inPowerOfD) {
      v.reason = "characteristic polynomial is a polynomial in t^" + std::to_string(d);
      return v;
    }
  }
  // phi(n) <= k forces n <= 2k^2 comfortably at desk scale.
  for (int n = 1; n <= 2 * k * k + 2; ++n) {
    if (eulerPhi(n) > k) continue;
    if (monicDivides(cyclotomic(n), p)) {
      v.reason = "characteristic polynomial has a root of unity (cyclotomic index " + std::to_string(n) + ")";
      return v;
    }
  }
  v.passes = true;
  return v;
}

}  // namespace fg
