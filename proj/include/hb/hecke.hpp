#pragma once
// Handlebody Hecke algebras in the Jucys-Murphy normal form
// L-word * H_w, with strand words ordered by strand index.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <type_traits>
#include <vector>

#include "hb/braid_coxeter.hpp"
#include "hb/element.hpp"
#include "hb/field.hpp"
#include "hb/linalg.hpp"
#include "hb/perm.hpp"
#include "hb/tl_blob.hpp"

namespace hb {

using HeckeElem = Element<CoxNormalForm>;

/// L_{u,j}^{+-1}, j 1-based.
struct JMLetter {
  int u = 1, j = 1;
  bool inv = false;
  friend bool operator<(const JMLetter& a, const JMLetter& b) {
    return std::tie(a.u, a.j, a.inv) < std::tie(b.u, b.j, b.inv);
  }
};

/// Inverse of z in the finite Hecke algebra with all scalars bound.
inline H0 h0_inverse_numeric(const H0& z, int n, const ScalarPoly& delta) {
  const auto perms = all_perms(n);
  QMatrix m(perms.size(), std::vector<Rational>(perms.size()));
  for (std::size_t c = 0; c < perms.size(); ++c) {
    H0 col = h0_mul(z, h0_basis(perms[c]), delta);
    for (std::size_t r = 0; r < perms.size(); ++r) {
      auto it = col.find(perms[r]);
      if (it == col.end()) continue;
      if (!it->second.is_constant()) throw std::invalid_argument("unbound symbols in " + it->second.str());
      m[r][c] = it->second.constant();
    }
  }
  std::vector<Rational> rhs(perms.size(), Rational(0));
  rhs[std::find(perms.begin(), perms.end(), Perm::identity(n)) - perms.begin()] = 1;
  auto x = solve(m, rhs);
  if (!x) throw std::runtime_error("not invertible: " + h0_str(z));
  H0 r;
  for (std::size_t i = 0; i < perms.size(); ++i) add_term(r, perms[i], ScalarPoly((*x)[i]));
  return r;
}

/// Rewriting engine for a fixed numeric value of q - q^-1. Reductions that
/// reproduce themselves are solved as linear equations over the finite Hecke algebra.
class HeckeEngine {
 public:
  int g = 0, n = 1;
  ScalarPoly delta;

  HeckeEngine(int g_, int n_, ScalarPoly delta_) : g(g_), n(n_), delta(std::move(delta_)) {
    if (!delta.is_constant()) throw std::invalid_argument("engine needs a numeric q");
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (g < 0) throw std::invalid_argument("g must be non-negative");
  }

  HeckeElem one() const { return basis_element(CoxNormalForm::identity(n)); }
  HeckeElem H(int k) const {
    check_h(k);
    CoxNormalForm m = CoxNormalForm::identity(n);
    m.w = Perm::s(n, k);
    return basis_element(m);
  }
  HeckeElem H_inverse(int k) const {
    HeckeElem r = H(k);
    add_term(r, CoxNormalForm::identity(n), -delta);
    return r;
  }
  HeckeElem L(int u, int i, bool inv = false) const {
    check_letter({u, i, inv});
    CoxNormalForm m = CoxNormalForm::identity(n);
    m.strand[i - 1] = FreeWord::gen(u, inv);
    return basis_element(m);
  }
  HeckeElem from_h0(const H0& x) const {
    HeckeElem r;
    for (auto& [w, c] : x) {
      CoxNormalForm m = CoxNormalForm::identity(n);
      m.w = w;
      add_term(r, m, c);
    }
    return r;
  }

  /// Image of a braid word: tau_u -> L_{u,1}, beta_i -> H_i.
  HeckeElem from_braid(const BraidWord& w) const {
    w.check(g, n);
    HeckeElem r = one();
    for (auto& x : w.gens) {
      if (x.tau) r = right_mul_letter(r, {x.idx, 1, x.inv});
      else if (!x.inv) r = right_mul_H(r, x.idx);
      else {
        HeckeElem a = right_mul_H(r, x.idx);
        add_into(a, r, -delta);
        r = std::move(a);
      }
    }
    return r;
  }

  HeckeElem right_mul_H(const HeckeElem& x, int k) const {
    check_h(k);
    HeckeElem r;
    for (auto& [m, c] : x)
      for (auto& [w, cw] : h0_mul_s_right(h0_basis(m.w), k, delta)) {
        CoxNormalForm t = m;
        t.w = w;
        add_term(r, t, c * cw);
      }
    return r;
  }

  HeckeElem right_mul_h0(const HeckeElem& x, const H0& y) const {
    HeckeElem r;
    for (auto& [m, c] : x)
      for (auto& [w, cw] : h0_mul(h0_basis(m.w), y, delta)) {
        CoxNormalForm t = m;
        t.w = w;
        add_term(r, t, c * cw);
      }
    return r;
  }

  HeckeElem right_mul_letter(const HeckeElem& x, const JMLetter& l) const {
    check_letter(l);
    HeckeElem r;
    for (auto& [m, c] : x) {
      if (placeholder_id(m) >= 0) throw std::logic_error("letter times open value");
      CoxNormalForm word = m;
      word.w = Perm::identity(n);
      for (auto& [l2, y] : pull_through(m.w, l))
        for (auto& [t, ct] : insert(word, l2))
          for (auto& [w, cw] : h0_mul(h0_basis(t.w), y, delta)) {
            CoxNormalForm s = t;
            s.w = w;
            add_term(r, s, c * ct * cw);
          }
    }
    return r;
  }

  HeckeElem multiply(const HeckeElem& x, const HeckeElem& y) const {
    HeckeElem r;
    for (auto& [m, c] : y) {
      if (placeholder_id(m) >= 0) throw std::logic_error("product with open value");
      add_into(r, mul_basis(x, m), c);
    }
    return r;
  }
  HeckeElem multiply(const CoxNormalForm& a, const CoxNormalForm& b) const { return mul_basis(basis_element(a), b); }

  static std::vector<JMLetter> letters(const CoxNormalForm& m) {
    std::vector<JMLetter> out;
    for (int i = 1; i <= m.n(); ++i)
      for (int c : m.strand[i - 1].w) out.push_back({core_of(c), i, is_inverse(c)});
    return out;
  }

 private:
  mutable std::map<std::pair<JMLetter, JMLetter>, HeckeElem> swap_cache_;
  mutable std::map<std::pair<std::vector<FreeWord>, JMLetter>, HeckeElem> insert_cache_;
  mutable std::map<std::pair<std::vector<FreeWord>, JMLetter>, int> active_;
  mutable int next_id_ = 0;

  void check_h(int k) const {
    if (k < 1 || k >= n) throw std::out_of_range("H_" + std::to_string(k) + " out of range");
  }
  void check_letter(const JMLetter& l) const {
    if (l.u < 1 || l.u > g || l.j < 1 || l.j > n)
      throw std::out_of_range("L(" + std::to_string(l.u) + "," + std::to_string(l.j) + ") out of range");
  }

  HeckeElem mul_basis(const HeckeElem& x, const CoxNormalForm& m) const {
    HeckeElem acc = x;
    for (auto& l : letters(m)) acc = right_mul_letter(acc, l);
    for (int k : m.w.reduced_word()) acc = right_mul_H(acc, k);
    return acc;
  }

  /// H_k L with L moved to the left: terms (L', h) with h = H_k or 1.
  std::vector<std::tuple<JMLetter, bool, ScalarPoly>> pull1(int k, const JMLetter& x) const {
    JMLetter lo{x.u, k, x.inv}, hi{x.u, k + 1, x.inv};
    if (x.j != k && x.j != k + 1) return {{x, true, ScalarPoly(1)}};
    if (!x.inv) {
      if (x.j == k + 1) return {{lo, true, ScalarPoly(1)}, {hi, false, delta}};
      return {{hi, true, ScalarPoly(1)}, {hi, false, -delta}};
    }
    if (x.j == k + 1) return {{lo, true, ScalarPoly(1)}, {lo, false, -delta}};
    return {{hi, true, ScalarPoly(1)}, {lo, false, delta}};
  }

  /// H_w L = sum L' Y with Y in the finite Hecke algebra.
  std::vector<std::pair<JMLetter, H0>> pull_through(const Perm& w, const JMLetter& x) const {
    std::map<JMLetter, H0> state{{x, h0_one(n)}};
    auto word = w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      std::map<JMLetter, H0> next;
      for (auto& [l, y] : state)
        for (auto& [l2, keep, c] : pull1(*it, l)) add_into(next[l2], keep ? h0_mul_s_left(*it, y, delta) : y, c);
      state.clear();
      for (auto& [l, y] : next)
        if (!y.empty()) state.emplace(l, std::move(y));
    }
    return {state.begin(), state.end()};
  }

  /// Normal form of word * l, where word has trivial permutation.
  HeckeElem insert(const CoxNormalForm& word, const JMLetter& x) const {
    int r = 0;
    for (int i = 1; i <= n; ++i)
      if (!word.strand[i - 1].is_one()) r = i;
    if (r <= x.j) {
      CoxNormalForm t = word;
      t.strand[x.j - 1] = t.strand[x.j - 1] * FreeWord::gen(x.u, x.inv);
      return basis_element(t);
    }
    auto key = std::pair(word.strand, x);
    if (auto it = insert_cache_.find(key); it != insert_cache_.end()) return it->second;
    if (auto it = active_.find(key); it != active_.end()) return basis_element(placeholder(it->second));
    const int id = next_id_++;
    active_.emplace(key, id);
    CoxNormalForm w0 = word;
    int code = w0.strand[r - 1].w.back();
    w0.strand[r - 1].w.pop_back();
    JMLetter m{core_of(code), r, is_inverse(code)};
    HeckeElem res = m.u <= x.u ? right_mul_letter(insert(w0, x), m) : multiply(basis_element(w0), swap(m, x));
    active_.erase(key);
    // res = A + Phi Y with Phi the value being computed
    HeckeElem a;
    H0 y;
    bool open = false;
    for (auto& [t, c] : res) {
      if (placeholder_id(t) == id) add_term(y, t.w, c);
      else {
        add_term(a, t, c);
        open = open || placeholder_id(t) >= 0;
      }
    }
    if (!y.empty()) {
      H0 z = h0_one(n);
      add_into(z, y, ScalarPoly(-1));
      res = solve_right(a, z);
    }
    if (!open) insert_cache_.emplace(key, res);
    return res;
  }

  CoxNormalForm placeholder(int id) const {
    CoxNormalForm t = CoxNormalForm::identity(n);
    t.strand.push_back(FreeWord(Codes{id}));
    return t;
  }
  int placeholder_id(const CoxNormalForm& t) const {
    return static_cast<int>(t.strand.size()) == n + 1 ? t.strand[n].w[0] : -1;
  }

  HeckeElem solve_right(const HeckeElem& a, const H0& z) const {
    return right_mul_h0(a, h0_inverse_numeric(z, n, delta));
  }

  HeckeElem word_elem(std::initializer_list<JMLetter> ls, const H0& y) const {
    CoxNormalForm t = CoxNormalForm::identity(n);
    for (auto& l : ls) t.strand[l.j - 1] = t.strand[l.j - 1] * FreeWord::gen(l.u, l.inv);
    return right_mul_h0(basis_element(t), y);
  }

  /// m x in normal form, m = L^b_{v,i} on a higher strand than x = L^a_{u,j}, v > u.
  HeckeElem swap(const JMLetter& m, const JMLetter& x) const {
    auto key = std::pair(m, x);
    if (auto it = swap_cache_.find(key); it != swap_cache_.end()) return it->second;
    const int i = m.j;
    const int k = i - 1;
    HeckeElem r;
    if (x.j == k) {
      const int v = m.u, u = x.u;
      H0 h = h0_basis(Perm::s(n, k)), one = h0_one(n);
      H0 hinv = h0_s_inverse(n, k, delta);
      H0 hinv2 = h0_mul(hinv, hinv, delta), h2 = h0_mul(h, h, delta);
      if (!x.inv && !m.inv) {
        add_into(r, word_elem({{u, k, false}, {v, i, false}}, hinv2));
        add_into(r, word_elem({{v, k, false}, {u, i, false}}, hinv), delta);
      } else if (x.inv && m.inv) {
        add_into(r, word_elem({{u, k, true}, {v, i, true}}, h2));
        add_into(r, word_elem({{v, k, true}, {u, i, true}}, h), -delta);
      } else if (!x.inv && m.inv) {
        add_into(r, word_elem({{u, k, false}, {v, i, true}}, one));
        add_into(r, word_elem({{u, k, false}, {v, k, true}}, hinv), delta);
        add_into(r, word_elem({{v, i, true}, {u, i, false}}, hinv), -delta);
      } else {
        add_into(r, word_elem({{u, k, true}, {v, i, false}}, one));
        add_into(r, word_elem({{u, k, true}, {v, k, false}}, h), -delta);
        add_into(r, word_elem({{v, i, false}, {u, i, true}}, h), delta);
      }
    } else {
      // L^b_{v,i} = H^b L^b_{v,i-1} H^b and H_{i-1} commutes with x
      H0 hb = m.inv ? h0_s_inverse(n, k, delta) : h0_basis(Perm::s(n, k));
      CoxNormalForm lower = CoxNormalForm::identity(n);
      lower.strand[k - 1] = FreeWord::gen(m.u, m.inv);
      r = right_mul_h0(multiply(from_h0(hb), insert(lower, x)), hb);
    }
    bool open = false;
    for (auto& [t, c] : r) open = open || placeholder_id(t) >= 0;
    if (!open) swap_cache_.emplace(key, r);
    return r;
  }
};

/// Newton interpolation: coefficients c_0..c_{k-1} of the polynomial through (xs, ys).
inline std::vector<Rational> interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
  const std::size_t k = xs.size();
  for (std::size_t j = 1; j < k; ++j)
    for (std::size_t i = k - 1; i >= j; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
  std::vector<Rational> c(k, Rational(0));
  for (std::size_t i = k; i-- > 0;) {
    // c = c * (x - xs[i]) + ys[i]
    std::vector<Rational> next(k, Rational(0));
    for (std::size_t e = 0; e + 1 < k; ++e) {
      next[e + 1] += c[e];
      next[e] -= c[e] * xs[i];
    }
    next[0] += ys[i];
    c = std::move(next);
  }
  return c;
}

/// H_{g,n} over Z[q, q^-1], or over Q when q is bound. Products of basis
/// elements are computed by the numeric engine at sample values of q and
/// interpolated as Laurent polynomials, with extra sample points as a check.
class HeckeAlgebra {
 public:
  int g = 0, n = 1;

  HeckeAlgebra(int g_, int n_, const Bindings& bind = {}) : g(g_), n(n_) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (g < 0) throw std::invalid_argument("g must be non-negative");
    if (auto it = bind.find(Symbol::q()); it != bind.end()) {
      if (it->second == 0) throw std::invalid_argument("q must be nonzero");
      q_ = it->second;
    }
  }

  std::optional<Rational> q_value() const { return q_; }
  ScalarPoly delta() const { return q_ ? ScalarPoly(*q_ - 1 / *q_) : delta_poly(); }

  HeckeElem one() const { return basis_element(CoxNormalForm::identity(n)); }
  HeckeElem H(int k) const {
    if (k < 1 || k >= n) throw std::out_of_range("H_" + std::to_string(k) + " out of range");
    CoxNormalForm m = CoxNormalForm::identity(n);
    m.w = Perm::s(n, k);
    return basis_element(m);
  }
  HeckeElem H_inverse(int k) const {
    HeckeElem r = H(k);
    add_term(r, CoxNormalForm::identity(n), -delta());
    return r;
  }
  HeckeElem L(int u, int i, bool inv = false) const {
    if (u < 1 || u > g || i < 1 || i > n)
      throw std::out_of_range("L(" + std::to_string(u) + "," + std::to_string(i) + ") out of range");
    CoxNormalForm m = CoxNormalForm::identity(n);
    m.strand[i - 1] = FreeWord::gen(u, inv);
    return basis_element(m);
  }
  HeckeElem from_h0(const H0& x) const {
    HeckeElem r;
    for (auto& [w, c] : x) {
      CoxNormalForm m = CoxNormalForm::identity(n);
      m.w = w;
      add_term(r, m, c);
    }
    return r;
  }
  /// tau_u -> L_{u,1}, beta_i -> H_i.
  HeckeElem from_braid(const BraidWord& w) const {
    w.check(g, n);
    HeckeElem r = one();
    for (auto& x : w.gens) r = multiply(r, x.tau ? L(x.idx, 1, x.inv) : x.inv ? H_inverse(x.idx) : H(x.idx));
    return r;
  }

  bool is_basis(const CoxNormalForm& m) const {
    if (m.n() != n || static_cast<int>(m.strand.size()) != n) return false;
    for (auto& s : m.strand) check_range(s.w, g);
    return true;
  }

  HeckeElem multiply(const CoxNormalForm& a, const CoxNormalForm& b) const {
    auto key = std::pair(a, b);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    HeckeElem r = q_ ? engine(*q_).multiply(a, b) : interpolated(a, b);
    cache_.emplace(key, r);
    return r;
  }
  HeckeElem multiply(const HeckeElem& x, const HeckeElem& y) const {
    return hb::multiply(x, y, [&](auto& a, auto& b) { return multiply(a, b); });
  }

 private:
  std::optional<Rational> q_;
  mutable std::map<Rational, std::unique_ptr<HeckeEngine>> engines_;
  mutable std::map<std::pair<CoxNormalForm, CoxNormalForm>, HeckeElem> cache_;

  HeckeEngine& engine(const Rational& t) const {
    auto& e = engines_[t];
    if (!e) e = std::make_unique<HeckeEngine>(g, n, ScalarPoly(t - 1 / t));
    return *e;
  }

  HeckeElem interpolated(const CoxNormalForm& a, const CoxNormalForm& b) const {
    std::vector<Rational> xs;
    std::map<CoxNormalForm, std::map<int, Rational>> vals;
    auto sample = [&](int k) {
      Rational t(k + 2);
      for (auto& [m, c] : engine(t).multiply(a, b)) vals[m][k] = c.constant();
    };
    auto value = [&](const CoxNormalForm& m, int k) {
      auto& v = vals[m];
      auto it = v.find(k);
      return it == v.end() ? Rational(0) : it->second;
    };
    int done = 0;
    for (int deg = 2; deg <= 64; deg *= 2) {
      const int pts = 2 * deg + 1, checks = 2;
      for (; done < pts + checks; ++done) sample(done);
      HeckeElem r;
      bool ok = true;
      for (auto& [m, v] : vals) {
        std::vector<Rational> xv, yv;
        for (int k = 0; k < pts; ++k) {
          Rational t(k + 2), scale = 1;
          for (int j = 0; j < deg; ++j) scale *= t;
          xv.push_back(t);
          yv.push_back(value(m, k) * scale);
        }
        auto c = interpolate(xv, yv);
        ScalarPoly coef;
        for (int j = 0; j < pts; ++j)
          if (c[j] != 0) coef += ScalarPoly(c[j]) * q_poly(j - deg);
        for (int k = pts; k < pts + checks && ok; ++k)
          ok = specialize(coef, {{Symbol::q(), Rational(k + 2)}}) == ScalarPoly(value(m, k));
        if (!ok) break;
        add_term(r, m, coef);
      }
      if (ok) return r;
    }
    throw std::runtime_error("Hecke structure constant of too high degree in q");
  }
};

// ---------------------------------------------------------------------------
// Cyclotomic quotient

inline int hecke_degree(const CoxNormalForm& m) {
  int d = 0;
  for (auto& s : m.strand) d += static_cast<int>(s.length());
  return d;
}

/// Column order for elimination: higher degree first, then non-basis before basis.
struct HeckeCol {
  int neg_degree = 0;
  bool basis = false;
  CoxNormalForm m;
  friend bool operator<(const HeckeCol& a, const HeckeCol& b) {
    if (a.neg_degree != b.neg_degree) return a.neg_degree < b.neg_degree;
    if (a.basis != b.basis) return !a.basis;
    return a.m < b.m;
  }
  friend bool operator==(const HeckeCol& a, const HeckeCol& b) { return a.m == b.m; }
};

/// Positive JM monomials with every strand word bounded by d, times all H_w.
inline std::vector<CoxNormalForm> cyclo_hecke_basis(const CycloParams& p, int n) {
  std::vector<CoxNormalForm> out;
  auto words = bounded_words(p);
  CoxNormalForm cur = CoxNormalForm::identity(n);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      for (auto& w : all_perms(n)) {
        cur.w = w;
        out.push_back(cur);
      }
      return;
    }
    for (auto& w : words) {
      cur.strand[i] = FreeWord(w.w);
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

/// Cyclotomic quotient H^{d,b}_{g,n} of the positive part of H_{g,n}, over a field F.
/// The ideal generated by the cyclotomic relations is spanned degree by degree
/// (all relations preserve the number of JM letters except the cyclotomic ones,
/// which lower it); reduction eliminates the non-basis monomials.
template <class F>
class CycloHecke {
 public:
  using T = typename F::T;
  using Vec = SparseVec<F, HeckeCol>;

  CycloHecke(int n_, CycloParams p, F f)
      : n(n_), params(std::move(p)), field(std::move(f)), hecke(params.g, n_, q_binding()), ideal_(field) {
    basis_ = cyclo_hecke_basis(params, n);
    for (auto& m : basis_) max_degree_ = std::max(max_degree_, hecke_degree(m));
  }

  int n;
  CycloParams params;
  F field;
  HeckeAlgebra hecke;

  const std::vector<CoxNormalForm>& basis() const { return basis_; }
  bool is_basis(const CoxNormalForm& m) const {
    if (m.n() != n || static_cast<int>(m.strand.size()) != n) return false;
    for (auto& s : m.strand) {
      for (int c : s.w)
        if (is_inverse(c)) return false;
      check_range(s.w, params.g);
      if (!params.bounded(MonoidWord(s.w))) return false;
    }
    return true;
  }

  Vec vec(const HeckeElem& x) const {
    Vec v;
    for (auto& [m, c] : x) add(v, m, field.from(c));
    return v;
  }
  Vec basis_vec(const CoxNormalForm& m) const {
    Vec v;
    add(v, m, field.one());
    return v;
  }

  /// Normal form in the quotient.
  Vec reduce(const Vec& x) const {
    int deg = 0;
    for (auto& [c, a] : x) deg = std::max(deg, -c.neg_degree);
    ensure(deg);
    IVec v;
    for (auto& [c, a] : x) v.emplace(index_.at(c.m), a);
    Vec r;
    for (auto& [i, a] : ideal_.reduce(std::move(v))) {
      if (!cols_[i].basis) throw std::runtime_error("cyclotomic reduction left " + hecke_monomial_str(cols_[i].m));
      r.emplace(cols_[i], a);
    }
    return r;
  }

  Vec multiply(const Vec& x, const Vec& y) const {
    Vec r;
    for (auto& [a, ca] : x)
      for (auto& [b, cb] : y) axpy(r, field.mul(ca, cb), product(a.m, b.m));
    return reduce(r);
  }
  Vec multiply(const CoxNormalForm& a, const CoxNormalForm& b) const { return reduce(product(a, b)); }

  /// Whether the span of the ideal meets the span of the claimed basis
  /// (only zero is allowed) at the degrees built so far.
  bool basis_independent() const {
    for (auto& [i, row] : ideal_.rows())
      if (cols_[i].basis) return false;
    return true;
  }
  int built_degree() const { return built_; }

  /// Elements of the ideal (at the degrees built so far) that are combinations of basis monomials.
  std::vector<Vec> basis_relations() const {
    std::vector<Vec> out;
    for (auto& [i, row] : ideal_.rows()) {
      if (!cols_[i].basis) continue;
      Vec v;
      for (auto& [j, a] : row) v.emplace(cols_[j], a);
      out.push_back(std::move(v));
    }
    return out;
  }

  /// Whether every basis element times a generator (either side) reduces to the basis;
  /// since the generators generate, this shows the basis spans the quotient.
  bool spans() const {
    std::vector<CoxNormalForm> gens;
    for (int u = 1; u <= params.g; ++u) {
      CoxNormalForm m = CoxNormalForm::identity(n);
      m.strand[0] = FreeWord::gen(u);
      gens.push_back(m);
    }
    for (int i = 1; i < n; ++i) {
      CoxNormalForm m = CoxNormalForm::identity(n);
      m.w = Perm::s(n, i);
      gens.push_back(m);
    }
    try {
      for (auto& b : basis_)
        for (auto& x : gens) {
          reduce(product(x, b));
          reduce(product(b, x));
        }
    } catch (const std::runtime_error&) {
      return false;
    }
    return true;
  }

  std::string str(const Vec& v) const {
    if (v.empty()) return "0";
    std::string s;
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += field.str(it->second) + " * " + hecke_monomial_str(it->first.m);
    }
    return s;
  }

 private:
  std::vector<CoxNormalForm> basis_;
  int max_degree_ = 0;
  mutable int built_ = -1;
  using IVec = SparseVec<F, int>;
  mutable Echelon<F, int> ideal_;
  mutable std::vector<HeckeCol> cols_;
  mutable std::map<CoxNormalForm, int> index_;
  mutable std::map<std::pair<CoxNormalForm, CoxNormalForm>, Vec> products_;
  mutable std::map<std::pair<int, int>, IVec> iproducts_;

  /// Structure constants are Laurent polynomials in q, so over F_p they may
  /// be computed over Q at the integer lift of q and then reduced.
  Bindings q_binding() const {
    if constexpr (std::is_same_v<F, RationalField>) {
      auto it = field.bind.find(Symbol::q());
      if (it != field.bind.end()) return {{Symbol::q(), it->second}};
    } else {
      auto it = field.vals.find(Symbol::q());
      if (it != field.vals.end()) return {{Symbol::q(), Rational(static_cast<unsigned long>(it->second))}};
    }
    return {};
  }

  HeckeCol col(const CoxNormalForm& m) const { return {-hecke_degree(m), is_basis(m), m}; }
  void add(Vec& v, const CoxNormalForm& m, const T& a) const {
    if (field.is_zero(a)) return;
    auto [it, fresh] = v.emplace(col(m), a);
    if (!fresh) {
      it->second = field.add(it->second, a);
      if (field.is_zero(it->second)) v.erase(it);
    }
  }

  void axpy(Vec& v, const T& a, const Vec& row) const {
    for (auto& [c, x] : row) add(v, c.m, field.mul(a, x));
  }

  /// Positive monomials of degree <= k, indexed in column order.
  void build_columns(int k) const {
    std::vector<CoxNormalForm> mons;
    CoxNormalForm cur = CoxNormalForm::identity(n);
    std::function<void(int, int)> rec = [&](int i, int budget) {
      if (i == n) {
        for (auto& w : all_perms(n)) {
          cur.w = w;
          mons.push_back(cur);
        }
        return;
      }
      std::function<void(Codes&, int)> words = [&](Codes& c, int b) {
        cur.strand[i] = FreeWord(c);
        rec(i + 1, b);
        if (b == 0) return;
        for (int u = 1; u <= params.g; ++u) {
          c.push_back(letter(u));
          words(c, b - 1);
          c.pop_back();
        }
      };
      Codes c;
      words(c, budget);
    };
    rec(0, k);
    cols_.clear();
    for (auto& m : mons) cols_.push_back(col(m));
    std::sort(cols_.begin(), cols_.end());
    index_.clear();
    for (std::size_t i = 0; i < cols_.size(); ++i) index_.emplace(cols_[i].m, static_cast<int>(i));
    iproducts_.clear();
  }

  const IVec& iproduct(int a, int b) const {
    auto key = std::pair(a, b);
    auto it = iproducts_.find(key);
    if (it == iproducts_.end()) {
      IVec v;
      for (auto& [c, x] : product(cols_[a].m, cols_[b].m)) v.emplace(index_.at(c.m), x);
      it = iproducts_.emplace(key, std::move(v)).first;
    }
    return it->second;
  }

  const Vec& product(const CoxNormalForm& a, const CoxNormalForm& b) const {
    auto key = std::pair(a, b);
    auto it = products_.find(key);
    if (it == products_.end()) it = products_.emplace(key, vec(hecke.multiply(a, b))).first;
    return it->second;
  }

  /// (b_u - beta_1) w_1 (b_u - beta_2) ... w_{d-1} (b_u - beta_d) on strand 1, of top degree <= k.
  std::vector<Vec> relations(int k) const {
    std::vector<Vec> out;
    for (int u = 1; u <= params.g; ++u) {
      const int du = params.d[u - 1];
      std::vector<int> others;
      for (int v = 1; v <= params.g; ++v)
        if (v != u) others.push_back(v);
      std::vector<std::vector<int>> fill(du - 1);
      std::function<void(int, int)> rec = [&](int slot, int budget) {
        if (slot == du - 1) {
          Vec r;
          for (unsigned mask = 0; mask < (1u << du); ++mask) {
            ScalarPoly c(1);
            CoxNormalForm m = CoxNormalForm::identity(n);
            Codes word;
            for (int j = 0; j < du; ++j) {
              if (mask >> j & 1) word.push_back(letter(u));
              else c = c * (-params.beta(u, j + 1));
              if (j + 1 < du)
                for (int v : fill[j]) word.push_back(letter(v));
            }
            m.strand[0] = FreeWord(word);
            add(r, m, field.from(c));
          }
          out.push_back(r);
          return;
        }
        rec(slot + 1, budget);
        if (budget == 0 || others.empty()) return;
        for (int v : others) {
          fill[slot].push_back(v);
          rec(slot, budget - 1);
          fill[slot].pop_back();
        }
      };
      if (du <= k) rec(0, k - du);
    }
    return out;
  }

  void ensure(int deg) const {
    if (deg <= built_) return;
    const int k = std::max(deg, max_degree_ + 1);
    build_columns(k);
    Echelon<F, int> ech(field);
    std::vector<int> gens;
    for (int u = 1; u <= params.g; ++u) {
      CoxNormalForm m = CoxNormalForm::identity(n);
      m.strand[0] = FreeWord::gen(u);
      gens.push_back(index_.at(m));
    }
    for (int i = 1; i < n; ++i) {
      CoxNormalForm m = CoxNormalForm::identity(n);
      m.w = Perm::s(n, i);
      gens.push_back(index_.at(m));
    }
    std::vector<IVec> queue;
    for (auto& r : relations(k)) {
      IVec v;
      for (auto& [c, a] : r) v.emplace(index_.at(c.m), a);
      queue.push_back(std::move(v));
    }
    while (!queue.empty()) {
      IVec v = ech.reduce(std::move(queue.back()));
      queue.pop_back();
      if (v.empty()) continue;
      ech.insert(v);
      const int top = -cols_[v.begin()->first].neg_degree;
      for (int g : gens) {
        if (top - cols_[g].neg_degree > k) continue;
        IVec left, right;
        for (auto& [c, a] : v) {
          ech.axpy(left, a, iproduct(g, c));
          ech.axpy(right, a, iproduct(c, g));
        }
        queue.push_back(std::move(left));
        queue.push_back(std::move(right));
      }
    }
    ideal_ = std::move(ech);
    built_ = k;
  }
};

// ---------------------------------------------------------------------------
// Rendering and oracles

inline std::string hecke_perm_str(const Perm& w) {
  if (w.is_identity()) return "id";
  std::string s;
  for (int k : w.reduced_word()) s += (s.empty() ? "H" : " H") + std::to_string(k);
  return s;
}

inline std::string hecke_monomial_str(const CoxNormalForm& m) {
  std::string s;
  for (auto [u, i, a] : m.factors()) {
    s += "L(" + std::to_string(u) + "," + std::to_string(i) + ")";
    if (a != 1) s += "^" + std::to_string(a);
    s += " * ";
  }
  return s + hecke_perm_str(m.w);
}

/// Terms `coef * L(u,i)^a ... * H_w`, largest key first.
inline std::string hecke_str(const HeckeElem& x) {
  if (x.empty()) return "0";
  std::string s;
  for (auto it = x.rbegin(); it != x.rend(); ++it) {
    if (!s.empty()) s += " + ";
    std::string c = it->second.str();
    bool simple = c.find_first_of("+ ") == std::string::npos || (c[0] == '-' && c.find_first_of("+ ", 1) == std::string::npos);
    s += (simple ? c : "(" + c + ")") + " * " + hecke_monomial_str(it->first);
  }
  return s;
}

/// Image in the type A Hecke algebra on g+n strands:
/// tau_u -> T_g ... T_{u+1} T_u^2 T_{u+1} ... T_g, beta_i -> T_{g+i}.
inline H0 hecke_to_type_a(const HeckeElem& x, int g, int n, const ScalarPoly& delta = delta_poly()) {
  const int N = g + n;
  auto apply = [&](H0 acc, const BraidWord& w) {
    for (auto& [k, inv] : embed_in_classical(w, g)) {
      H0 t = h0_mul_s_right(acc, k, delta);
      if (inv) add_into(t, acc, -delta);
      acc = std::move(t);
    }
    return acc;
  };
  H0 r;
  for (auto& [m, c] : x) {
    H0 acc = h0_one(N);
    for (auto& l : HeckeEngine::letters(m)) acc = apply(acc, jm_element(l.u, l.j, l.inv));
    BraidWord ws;
    for (int k : m.w.reduced_word()) ws = ws * BraidWord::beta(k);
    acc = apply(acc, ws);
    add_into(r, acc, c);
  }
  return r;
}

/// Specialization q -> 1 read as an element of the group algebra of W_{g,n}.
inline std::map<CoxNormalForm, Rational> hecke_at_q1(const HeckeElem& x, int g, int n) {
  std::map<CoxNormalForm, Rational> r;
  for (auto& [m, c] : x) {
    ScalarPoly v = specialize(c, {{Symbol::q(), Rational(1)}});
    if (!v.is_constant()) throw std::invalid_argument("unbound symbols in " + v.str());
    Rational& slot = r[cox_normal_form(m.to_word(), g, n)];
    slot += v.constant();
  }
  for (auto it = r.begin(); it != r.end();)
    it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

}  // namespace hb
