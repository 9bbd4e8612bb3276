#include "fg/word.hpp"

#include <algorithm>
#include <cctype>

namespace fg {

Basis Basis::standard(int k) {
  if (k < 2 || k > kMaxRank) throw ConfigError("rank must be between 2 and 26");
  Basis b;
  b.rank = k;
  for (int i = 0; i < k; ++i) b.names.push_back(std::string(1, static_cast<char>('a' + i)));
  return b;
}

std::vector<Letter> reduceLetters(const std::vector<Letter>& raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter v : raw) {
    if (v == 0) throw Error("zero is not a letter");
    if (!out.empty() && out.back() == -v) {
      out.pop_back();
    } else {
      out.push_back(v);
    }
  }
  return out;
}

Word Word::fromLetters(std::vector<Letter> letters) { return Word(reduceLetters(letters)); }

Word Word::letter(Letter v) { return fromLetters({v}); }

Word Word::parse(const std::string& text) {
  if (text == "1" || text.empty()) return Word();
  std::vector<Letter> raw;
  raw.reserve(text.size());
  for (char ch : text) {
    if (ch >= 'a' && ch <= 'z') {
      raw.push_back(ch - 'a' + 1);
    } else if (ch >= 'A' && ch <= 'Z') {
      raw.push_back(-(ch - 'A' + 1));
    } else {
      throw Error(std::string("bad character in word: '") + ch + "'");
    }
  }
  return fromLetters(std::move(raw));
}

int Word::maxGenerator() const {
  int m = 0;
  for (Letter v : letters_) m = std::max(m, std::abs(v));
  return m;
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& v : out) v = -v;
  return Word(std::move(out));
}

Word Word::operator*(const Word& other) const {
  std::vector<Letter> out = letters_;
  for (Letter v : other.letters_) {
    if (!out.empty() && out.back() == -v) {
      out.pop_back();
    } else {
      out.push_back(v);
    }
  }
  return Word(std::move(out));
}

Word Word::pow(int n) const {
  Word base = n >= 0 ? *this : inverse();
  int reps = std::abs(n);
  Word out;
  for (int i = 0; i < reps; ++i) out = out * base;
  return out;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  s.reserve(letters_.size());
  for (Letter v : letters_) {
    s.push_back(v > 0 ? static_cast<char>('a' + v - 1) : static_cast<char>('A' - v - 1));
  }
  return s;
}

namespace {

// Lexicographically least rotation under letterOrderKey (Booth's algorithm,
// linear in the word length).
std::vector<Letter> leastRotation(const std::vector<Letter>& w) {
  const int n = static_cast<int>(w.size());
  auto key = [&](int idx) { return letterOrderKey(w[static_cast<size_t>(idx % n)]); };
  std::vector<int> fail(static_cast<size_t>(2 * n), -1);
  int best = 0;
  for (int j = 1; j < 2 * n; ++j) {
    int i = fail[static_cast<size_t>(j - best - 1)];
    while (i != -1 && key(j) != key(best + i + 1)) {
      if (key(j) < key(best + i + 1)) best = j - i - 1;
      i = fail[static_cast<size_t>(i)];
    }
    if (i == -1 && key(j) != key(best + i + 1)) {
      if (key(j) < key(best + i + 1)) best = j;
      fail[static_cast<size_t>(j - best)] = -1;
    } else {
      fail[static_cast<size_t>(j - best)] = i + 1;
    }
  }
  best %= n;
  std::vector<Letter> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = w[static_cast<size_t>((best + i) % n)];
  return out;
}

}  // namespace

CyclicWord CyclicWord::of(const Word& w) {
  if (w.empty()) throw TrivialWordError();
  const std::vector<Letter>& ls = w.letters();
  size_t lo = 0;
  size_t hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == -ls[hi - 1]) {
    ++lo;
    --hi;
  }
  std::vector<Letter> conj(ls.begin(), ls.begin() + static_cast<long>(lo));
  std::vector<Letter> core(ls.begin() + static_cast<long>(lo), ls.begin() + static_cast<long>(hi));
  if (core.empty()) throw TrivialWordError();
  CyclicWord c;
  c.representative_ = Word::fromLetters(core);
  c.conjugator_ = Word::fromLetters(conj);
  c.canonical_ = leastRotation(core);
  return c;
}

std::string CyclicWord::str() const { return Word::fromLetters(canonical_).str(); }

int CyclicWord::period() const {
  const int n = length();
  const auto& w = canonical_;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = w[i] == w[(i + d) % n];
    if (ok) return d;
  }
  return n;
}

bool CyclicWord::operator<(const CyclicWord& other) const {
  auto key = [](const std::vector<Letter>& v) {
    std::vector<int> k(v.size());
    for (size_t i = 0; i < v.size(); ++i) k[i] = letterOrderKey(v[i]);
    return k;
  };
  if (canonical_.size() != other.canonical_.size())
    return canonical_.size() < other.canonical_.size();
  return key(canonical_) < key(other.canonical_);
}

long long occurrencesLinear(const Word& g, const Word& w) {
  if (g.empty()) throw Error("occurrence pattern must be nontrivial");
  long long count = 0;
  const Word gi = g.inverse();
  const auto& ws = w.letters();
  for (const Word* pat : {&g, &gi}) {
    const auto& ps = pat->letters();
    if (ps.size() > ws.size()) continue;
    for (size_t p = 0; p + ps.size() <= ws.size(); ++p) {
      if (std::equal(ps.begin(), ps.end(), ws.begin() + p)) ++count;
    }
  }
  return count;
}

long long occurrencesCyclic(const Word& g, const CyclicWord& h) {
  if (g.empty()) throw Error("occurrence pattern must be nontrivial");
  const auto& rep = h.representative().letters();
  const int n = static_cast<int>(rep.size());
  const int m = g.length();
  // Buffer long enough to read any subword of length m from any of the n
  // starting positions of the periodic word.
  std::vector<Letter> buf;
  buf.reserve(n + m);
  for (int i = 0; i < n + m; ++i) buf.push_back(rep[i % n]);
  long long count = 0;
  const Word gi = g.inverse();
  for (const Word* pat : {&g, &gi}) {
    const auto& ps = pat->letters();
    for (int p = 0; p < n; ++p) {
      if (std::equal(ps.begin(), ps.end(), buf.begin() + p)) ++count;
    }
  }
  return count;
}

bool conjugacyTest(const Word& x, const Word& y) {
  const bool xt = x.empty();
  const bool yt = y.empty();
  if (xt || yt) return xt == yt;
  return CyclicWord::of(x) == CyclicWord::of(y);
}

PowerDecomposition properPower(const CyclicWord& h) {
  const int d = h.period();
  const auto& rep = h.representative().letters();
  std::vector<Letter> root(rep.begin(), rep.begin() + d);
  return PowerDecomposition{h.length() / d, Word::fromLetters(std::move(root))};
}

namespace {

bool enumerate(int rank, int len, std::vector<Letter>& cur, const std::function<bool(const Word&)>& fn) {
  if (static_cast<int>(cur.size()) == len) {
    return fn(Word::fromLetters(cur));
  }
  for (int g = 1; g <= rank; ++g) {
    for (int s : {+1, -1}) {
      Letter v = s * g;
      if (!cur.empty() && cur.back() == -v) continue;
      cur.push_back(v);
      if (!enumerate(rank, len, cur, fn)) return false;
      cur.pop_back();
    }
  }
  return true;
}

}  // namespace

void forEachReducedWord(int rank, int len, const std::function<bool(const Word&)>& fn) {
  std::vector<Letter> cur;
  if (len == 0) {
    fn(Word());
    return;
  }
  enumerate(rank, len, cur, fn);
}

std::vector<Word> cyclicClassRepresentatives(int rank, int maxLen) {
  std::vector<Word> reps;
  for (int len = 1; len <= maxLen; ++len) {
    forEachReducedWord(rank, len, [&](const Word& w) {
      if (w.length() != len) return true;                       // reduced words only
      if (w.letters().front() == -w.letters().back()) return true;  // cyclically reduced only
      CyclicWord c = CyclicWord::of(w);
      if (c.canonicalRotation() == w.letters()) reps.push_back(w);
      return true;
    });
  }
  return reps;
}

Word randomReducedWord(std::mt19937_64& rng, int rank, int len) {
  std::vector<Letter> out;
  out.reserve(len);
  std::uniform_int_distribution<int> genDist(1, rank);
  std::uniform_int_distribution<int> signDist(0, 1);
  while (static_cast<int>(out.size()) < len) {
    Letter v = genDist(rng) * (signDist(rng) ? 1 : -1);
    if (!out.empty() && out.back() == -v) continue;
    out.push_back(v);
  }
  return Word::fromLetters(std::move(out));
}

Word randomCyclicallyReducedWord(std::mt19937_64& rng, int rank, int len) {
  for (;;) {
    Word w = randomReducedWord(rng, rank, len);
    if (w.length() < 1) continue;
    if (w.length() == 1 || w.letters().front() != -w.letters().back()) return w;
  }
}

}  // namespace fg
