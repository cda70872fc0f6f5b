#pragma once
// Coefficient fields for numeric work: Q with bound symbols, and F_p.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hb/scalar.hpp"

namespace hb {

/// Raised when a symbolic scalar has no value in the requested field.
struct UnboundSymbol : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RationalField {
  using T = Rational;
  Bindings bind;

  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(const T& a) const { return a == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T neg(const T& a) const { return -a; }
  T inv(const T& a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return 1 / a;
  }
  T from(const ScalarPoly& p) const {
    ScalarPoly v = specialize(p, bind);
    if (!v.is_constant()) throw UnboundSymbol("unbound symbols in " + v.str());
    return v.constant();
  }
  T from_int(long k) const { return k; }
  std::string str(const T& a) const { return a.get_str(); }
};

struct PrimeField {
  using T = std::uint64_t;
  std::uint64_t p = 1000003;
  std::map<Symbol, std::uint64_t> vals;

  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(const T& a) const { return a % p == 0; }
  T add(const T& a, const T& b) const { return (a + b) % p; }
  T sub(const T& a, const T& b) const { return (a + p - b % p) % p; }
  T mul(const T& a, const T& b) const { return static_cast<T>(static_cast<unsigned __int128>(a) * b % p); }
  T neg(const T& a) const { return (p - a % p) % p; }
  T inv(const T& a) const { return mod_inv(a, p); }
  T from(const ScalarPoly& x) const {
    try {
      return eval_mod(x, vals, p);
    } catch (const std::domain_error& e) {
      throw UnboundSymbol(e.what());
    }
  }
  T from_int(long k) const { return k >= 0 ? static_cast<T>(k) % p : neg(static_cast<T>(-k) % p); }
  std::string str(const T& a) const { return std::to_string(a); }
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// F_p with p = 1 mod 2e and q a primitive 2e-th root of unity, so that
/// q^2 is a primitive e-th root of unity and [e]_q = 0.
inline PrimeField root_of_unity_field(int e, std::uint64_t min_p = 1000) {
  const std::uint64_t m = 2 * static_cast<std::uint64_t>(e);
  std::uint64_t p = (min_p / m + 1) * m + 1;
  while (!is_prime(p)) p += m;
  PrimeField f;
  f.p = p;
  for (std::uint64_t x = 2; x < p; ++x) {
    std::uint64_t r = mod_pow(x, (p - 1) / m, p);
    bool primitive = true;
    for (std::uint64_t k = 1; k < m && primitive; ++k)
      if (m % k == 0 && mod_pow(r, k, p) == 1) primitive = false;
    if (primitive) {
      f.vals[Symbol::q()] = r;
      return f;
    }
  }
  throw std::runtime_error("no primitive root found");
}

/// Sparse vectors over F keyed by an ordered column type; the first key is the pivot.
template <class F, class Col>
using SparseVec = std::map<Col, typename F::T>;

/// Incremental echelon form: rows keyed by pivot column, pivot normalized to 1.
template <class F, class Col>
class Echelon {
 public:
  explicit Echelon(F f) : f_(std::move(f)) {}
  const F& field() const { return f_; }

  /// Reduce v modulo the rows.
  SparseVec<F, Col> reduce(SparseVec<F, Col> v) const {
    SparseVec<F, Col> out;
    while (!v.empty()) {
      auto it = v.begin();
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        out.insert(*it);
        v.erase(it);
        continue;
      }
      axpy(v, f_.neg(it->second), row->second);
    }
    return out;
  }

  /// Insert v; returns false when v is already in the span.
  bool insert(SparseVec<F, Col> v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    typename F::T s = f_.inv(v.begin()->second);
    for (auto& [c, x] : v) x = f_.mul(x, s);
    rows_.emplace(v.begin()->first, std::move(v));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  bool has_pivot(const Col& c) const { return rows_.count(c) > 0; }
  const std::map<Col, SparseVec<F, Col>>& rows() const { return rows_; }

  void axpy(SparseVec<F, Col>& v, const typename F::T& a, const SparseVec<F, Col>& row) const {
    auto it = v.begin();
    for (auto& [c, x] : row) {
      it = v.lower_bound(c);
      if (it == v.end() || v.key_comp()(c, it->first)) {
        v.emplace_hint(it, c, f_.mul(a, x));
        continue;
      }
      it->second = f_.add(it->second, f_.mul(a, x));
      if (f_.is_zero(it->second)) v.erase(it);
    }
  }

 private:
  F f_;
  std::map<Col, SparseVec<F, Col>> rows_;
};

/// Dense rank over F.
template <class F>
std::size_t rank_over(const F& f, std::vector<std::vector<typename F::T>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && f.is_zero(m[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    auto inv = f.inv(m[r][c]);
    for (auto& x : m[r]) x = f.mul(x, inv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (f.is_zero(m[i][c])) continue;
      auto a = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(a, m[r][j]));
    }
    ++r;
  }
  return r;
}

/// Dense inverse over F; empty when singular.
template <class F>
std::vector<std::vector<typename F::T>> inverse_over(const F& f, std::vector<std::vector<typename F::T>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<typename F::T>> inv(n, std::vector<typename F::T>(n, f.zero()));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && f.is_zero(m[piv][c])) ++piv;
    if (piv == n) return {};
    std::swap(m[c], m[piv]);
    std::swap(inv[c], inv[piv]);
    auto s = f.inv(m[c][c]);
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] = f.mul(m[c][j], s);
      inv[c][j] = f.mul(inv[c][j], s);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || f.is_zero(m[i][c])) continue;
      auto a = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] = f.sub(m[i][j], f.mul(a, m[c][j]));
        inv[i][j] = f.sub(inv[i][j], f.mul(a, inv[c][j]));
      }
    }
  }
  return inv;
}

}  // namespace hb
