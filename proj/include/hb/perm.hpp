#pragma once
// Permutations of {0..n-1} and the type A Hecke algebra on them.

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "hb/element.hpp"

namespace hb {

/// Right action: point i is sent to p[i]; (w v)[i] = v[w[i]].
struct Perm {
  std::vector<int> p;

  Perm() = default;
  explicit Perm(std::vector<int> v) : p(std::move(v)) {}
  static Perm identity(int n) {
    Perm r;
    r.p.resize(n);
    std::iota(r.p.begin(), r.p.end(), 0);
    return r;
  }
  /// Simple transposition s_k (1-based) swapping k-1 and k.
  static Perm s(int n, int k) {
    Perm r = identity(n);
    std::swap(r.p[k - 1], r.p[k]);
    return r;
  }

  int size() const { return static_cast<int>(p.size()); }
  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (p[i] != i) return false;
    return true;
  }
  int length() const {
    int l = 0;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j) l += p[i] > p[j];
    return l;
  }
  Perm inverse() const {
    Perm r;
    r.p.resize(p.size());
    for (int i = 0; i < size(); ++i) r.p[p[i]] = i;
    return r;
  }
  /// Whether s_k w is shorter than w.
  bool left_descent(int k) const { return p[k - 1] > p[k]; }
  /// Whether w s_k is shorter than w.
  bool right_descent(int k) const { return inverse().p[k - 1] > inverse().p[k]; }

  /// Lexicographically smallest reduced word (indices of simple reflections).
  std::vector<int> reduced_word() const {
    std::vector<int> word;
    Perm w = *this;
    while (!w.is_identity()) {
      int k = 1;
      while (!w.left_descent(k)) ++k;
      word.push_back(k);
      w = Perm::s(size(), k) * w;
    }
    return word;
  }

  /// One-line notation, 1-based.
  std::string str() const {
    std::string s;
    for (int x : p) s += std::to_string(x + 1);
    return s;
  }

  friend Perm operator*(const Perm& w, const Perm& v) {
    Perm r;
    r.p.resize(w.p.size());
    for (std::size_t i = 0; i < w.p.size(); ++i) r.p[i] = v.p[w.p[i]];
    return r;
  }
  friend bool operator==(const Perm& a, const Perm& b) { return a.p == b.p; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.p < b.p; }
};

inline std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm w = Perm::identity(n);
  do out.push_back(w);
  while (std::next_permutation(w.p.begin(), w.p.end()));
  return out;
}

/// Elements of the finite type A Hecke algebra in the basis H_w.
using H0 = Element<Perm>;

/// H_w H_{s_k}.
inline H0 h0_mul_s_right(const H0& x, int k, const ScalarPoly& delta = delta_poly()) {
  H0 r;
  for (auto& [w, c] : x) {
    Perm ws = w * Perm::s(w.size(), k);
    add_term(r, ws, c);
    if (w.right_descent(k)) add_term(r, w, c * delta);
  }
  return r;
}

/// H_{s_k} H_w.
inline H0 h0_mul_s_left(int k, const H0& x, const ScalarPoly& delta = delta_poly()) {
  H0 r;
  for (auto& [w, c] : x) {
    Perm sw = Perm::s(w.size(), k) * w;
    add_term(r, sw, c);
    if (w.left_descent(k)) add_term(r, w, c * delta);
  }
  return r;
}

inline H0 h0_mul(const H0& x, const H0& y, const ScalarPoly& delta = delta_poly()) {
  H0 r;
  for (auto& [v, cv] : y) {
    H0 acc = x;
    for (int k : v.reduced_word()) acc = h0_mul_s_right(acc, k, delta);
    add_into(r, acc, cv);
  }
  return r;
}

inline H0 h0_basis(const Perm& w) { return basis_element(w); }
inline H0 h0_one(int n) { return basis_element(Perm::identity(n)); }

/// H_{s_k}^{-1} = H_{s_k} - (q - q^{-1}).
inline H0 h0_s_inverse(int n, int k, const ScalarPoly& delta = delta_poly()) {
  H0 r = h0_basis(Perm::s(n, k));
  add_term(r, Perm::identity(n), -delta);
  return r;
}

inline std::string h0_str(const H0& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = x.rbegin(); it != x.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ") * " << (it->first.is_identity() ? "id" : it->first.str());
  }
  return os.str();
}

}  // namespace hb
