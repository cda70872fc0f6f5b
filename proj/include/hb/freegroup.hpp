#pragma once
// Words in free groups and free monoids, and conjugacy class keys.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "hb/scalar.hpp"

namespace hb {

/// Letter codes: 2u is the generator u, 2u+1 its inverse. The numeric
/// order is the fixed letter order (1,+) < (1,-) < (2,+) < ...
inline int letter(int u, bool inverse = false) { return 2 * u + (inverse ? 1 : 0); }
inline int core_of(int code) { return code >> 1; }
inline bool is_inverse(int code) { return code & 1; }
inline int inverse_letter(int code) { return code ^ 1; }

using Codes = std::vector<int>;

inline void check_range(const Codes& w, int g) {
  for (int c : w)
    if (core_of(c) < 1 || core_of(c) > g)
      throw std::out_of_range("core index " + std::to_string(core_of(c)) + " outside 1.." + std::to_string(g));
}

/// Free reduction.
inline Codes free_reduce(const Codes& w) {
  Codes out;
  out.reserve(w.size());
  for (int c : w) {
    if (!out.empty() && out.back() == inverse_letter(c)) out.pop_back();
    else out.push_back(c);
  }
  return out;
}

inline Codes free_inverse(const Codes& w) {
  Codes r(w.rbegin(), w.rend());
  for (int& c : r) c = inverse_letter(c);
  return r;
}

/// Lexicographically least rotation (naive, words are short).
inline Codes min_rotation(const Codes& w) {
  Codes best = w;
  Codes cur = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

inline Codes cyclic_reduce(Codes w) {
  w = free_reduce(w);
  std::size_t a = 0, b = w.size();
  while (b - a >= 2 && w[a] == inverse_letter(w[b - 1])) {
    ++a;
    --b;
  }
  return Codes(w.begin() + a, w.begin() + b);
}

/// Free group word in F_g, always freely reduced.
struct FreeWord {
  Codes w;

  FreeWord() = default;
  explicit FreeWord(const Codes& c) : w(free_reduce(c)) {}
  static FreeWord gen(int u, bool inv = false) { return FreeWord(Codes{letter(u, inv)}); }

  static FreeWord one() { return {}; }
  bool is_one() const { return w.empty(); }
  std::size_t length() const { return w.size(); }
  FreeWord inverse() const { return FreeWord(free_inverse(w)); }
  /// Order reversal without inverting letters (mirror reading).
  FreeWord reversed() const {
    FreeWord r;
    r.w.assign(w.rbegin(), w.rend());
    return r;
  }
  std::string str() const { return render_word_codes(w); }
  static FreeWord parse(const std::string& s) { return FreeWord(parse_word_codes(s)); }

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b) {
    Codes c = a.w;
    c.insert(c.end(), b.w.begin(), b.w.end());
    return FreeWord(c);
  }
  friend bool operator==(const FreeWord& a, const FreeWord& b) { return a.w == b.w; }
  friend bool operator!=(const FreeWord& a, const FreeWord& b) { return a.w != b.w; }
  friend bool operator<(const FreeWord& a, const FreeWord& b) {
    if (a.w.size() != b.w.size()) return a.w.size() < b.w.size();
    return a.w < b.w;
  }
};

/// Word in the free monoid on cores; letter codes are always even.
struct MonoidWord {
  Codes w;

  MonoidWord() = default;
  explicit MonoidWord(const Codes& c) : w(c) {
    for (int x : w)
      if (is_inverse(x)) throw std::invalid_argument("inverse letter in monoid word");
  }
  static MonoidWord gen(int u) { return MonoidWord(Codes{letter(u)}); }
  static MonoidWord from_cores(const std::vector<int>& cores) {
    MonoidWord m;
    for (int u : cores) m.w.push_back(letter(u));
    return m;
  }

  static MonoidWord one() { return {}; }
  bool is_one() const { return w.empty(); }
  std::size_t length() const { return w.size(); }
  MonoidWord reversed() const {
    MonoidWord r;
    r.w.assign(w.rbegin(), w.rend());
    return r;
  }
  int count(int u) const { return static_cast<int>(std::count(w.begin(), w.end(), letter(u))); }
  std::string str() const { return render_word_codes(w); }
  static MonoidWord parse(const std::string& s) { return MonoidWord(parse_word_codes(s)); }

  friend MonoidWord operator*(const MonoidWord& a, const MonoidWord& b) {
    MonoidWord r = a;
    r.w.insert(r.w.end(), b.w.begin(), b.w.end());
    return r;
  }
  friend bool operator==(const MonoidWord& a, const MonoidWord& b) { return a.w == b.w; }
  friend bool operator!=(const MonoidWord& a, const MonoidWord& b) { return a.w != b.w; }
  friend bool operator<(const MonoidWord& a, const MonoidWord& b) {
    if (a.w.size() != b.w.size()) return a.w.size() < b.w.size();
    return a.w < b.w;
  }
};

/// Canonical representative of a conjugacy class (group) or rotation class (monoid).
struct ConjKey {
  Codes w;
  std::string str() const { return render_word_codes(w); }
  friend bool operator==(const ConjKey& a, const ConjKey& b) { return a.w == b.w; }
  friend bool operator<(const ConjKey& a, const ConjKey& b) {
    if (a.w.size() != b.w.size()) return a.w.size() < b.w.size();
    return a.w < b.w;
  }
};

inline ConjKey conj_key(const FreeWord& x) { return {min_rotation(cyclic_reduce(x.w))}; }
inline ConjKey conj_key(const MonoidWord& x) { return {min_rotation(x.w)}; }

}  // namespace hb
