#pragma once
// Handlebody braid and Coxeter groups: words, Jucys-Murphy elements,
// the polynomial action, Coxeter normal forms and the classical embedding.

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "hb/freegroup.hpp"
#include "hb/perm.hpp"

namespace hb {

/// tau_idx (coil) or beta_idx (crossing), possibly inverted.
struct BraidGen {
  bool tau = false;
  int idx = 0;
  bool inv = false;
  BraidGen inverse() const { return {tau, idx, !inv}; }
  friend bool operator==(const BraidGen& a, const BraidGen& b) {
    return a.tau == b.tau && a.idx == b.idx && a.inv == b.inv;
  }
};

struct BraidWord {
  std::vector<BraidGen> gens;

  static BraidWord tau(int u, bool inv = false) { return {{{true, u, inv}}}; }
  static BraidWord beta(int i, bool inv = false) { return {{{false, i, inv}}}; }

  /// Whitespace-separated tokens t3 T3 b1 B1; "e" or empty is the identity.
  static BraidWord parse(const std::string& s) {
    BraidWord w;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
      if (tok == "e") continue;
      if (tok.size() < 2 || std::string("tTbB").find(tok[0]) == std::string::npos)
        throw std::invalid_argument("bad braid token '" + tok + "'");
      std::size_t used = 0;
      int idx = 0;
      try {
        idx = std::stoi(tok.substr(1), &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad braid token '" + tok + "'");
      }
      if (used != tok.size() - 1 || idx < 1) throw std::invalid_argument("bad braid token '" + tok + "'");
      w.gens.push_back({tok[0] == 't' || tok[0] == 'T', idx, tok[0] == 'T' || tok[0] == 'B'});
    }
    return w;
  }
  std::string str() const {
    if (gens.empty()) return "e";
    std::string s;
    for (auto& g : gens) {
      if (!s.empty()) s += ' ';
      s += g.tau ? (g.inv ? 'T' : 't') : (g.inv ? 'B' : 'b');
      s += std::to_string(g.idx);
    }
    return s;
  }
  void check(int g, int n) const {
    for (auto& x : gens)
      if (x.tau ? (x.idx > g) : (x.idx > n - 1))
        throw std::out_of_range("generator " + BraidWord{{x}}.str() + " out of range");
  }
  BraidWord inverse() const {
    BraidWord r;
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) r.gens.push_back(it->inverse());
    return r;
  }
  friend BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    BraidWord r = a;
    r.gens.insert(r.gens.end(), b.gens.begin(), b.gens.end());
    return r;
  }
};

/// L_{u,i}^{+-1} = beta_{i-1}^{+-1} ... beta_1^{+-1} tau_u^{+-1} beta_1^{+-1} ... beta_{i-1}^{+-1}.
inline BraidWord jm_element(int u, int i, bool inv = false) {
  BraidWord w;
  for (int k = i - 1; k >= 1; --k) w.gens.push_back({false, k, inv});
  w.gens.push_back({true, u, inv});
  for (int k = 1; k <= i - 1; ++k) w.gens.push_back({false, k, inv});
  return w;
}

/// Coils of the alternative presentation: tilde tau_u = tau_u tau_{u+1}^{-1},
/// tilde tau_g = tau_g, so tau_u = tilde tau_u ... tilde tau_g.
inline BraidWord tilde_tau(int u, int g, bool inv = false) {
  BraidWord w = u < g ? BraidWord::tau(u) * BraidWord::tau(u + 1, true) : BraidWord::tau(u);
  return inv ? w.inverse() : w;
}

// ---------------------------------------------------------------------------
// Polynomial action

/// Variables of Z[z^{+-1}, Y_1..Y_g][X_1..X_n].
struct ActVar {
  enum Kind : int { Z = 0, Y = 1, X = 2 };
  Kind kind = Z;
  int idx = 0;
  bool laurent() const { return kind == Z; }
  std::string str() const {
    if (kind == Z) return "z";
    return (kind == Y ? "Y" : "X") + std::to_string(idx);
  }
  friend bool operator<(const ActVar& a, const ActVar& b) { return std::pair(a.kind, a.idx) < std::pair(b.kind, b.idx); }
  friend bool operator==(const ActVar& a, const ActVar& b) { return a.kind == b.kind && a.idx == b.idx; }
};

using ActionPoly = Poly<ActVar>;

inline ActionPoly X(int i) { return ActionPoly::var({ActVar::X, i}); }
inline ActionPoly Y(int u) { return ActionPoly::var({ActVar::Y, u}); }
inline ActionPoly Zpow(int e) { return ActionPoly::var({ActVar::Z, 0}, e); }

/// p acted on by one generator: s_i swaps X_i and X_{i+1}; t_u sends
/// X_1 to z^u X_1 + Y_u and t_u^{-1} sends X_1 to z^{-u} X_1 - z^{-u} Y_u.
inline ActionPoly act(const ActionPoly& p, const BraidGen& g) {
  std::map<ActVar, ActionPoly> sub;
  if (g.tau) {
    const int u = g.idx;
    sub[{ActVar::X, 1}] = g.inv ? Zpow(-u) * X(1) - Zpow(-u) * Y(u) : Zpow(u) * X(1) + Y(u);
  } else {
    sub[{ActVar::X, g.idx}] = X(g.idx + 1);
    sub[{ActVar::X, g.idx + 1}] = X(g.idx);
  }
  return p.substitute(sub);
}

/// Right action: p acted on by w = g_1 ... g_k is ((p g_1) g_2) ... g_k.
inline ActionPoly act(ActionPoly p, const BraidWord& w) {
  for (auto& g : w.gens) p = act(p, g);
  return p;
}

/// Images of X_1..X_n, which determine the action.
inline std::vector<ActionPoly> action_images(const BraidWord& w, int n) {
  std::vector<ActionPoly> r;
  for (int i = 1; i <= n; ++i) r.push_back(act(X(i), w));
  return r;
}

inline bool act_equal(const BraidWord& a, const BraidWord& b, int n) {
  return action_images(a, n) == action_images(b, n);
}

// ---------------------------------------------------------------------------
// Coxeter normal form

/// prod_i word_i(L_{-,i}) * w: a free group word in the Jucys-Murphy elements
/// of each strand (strands commute in the Coxeter group) followed by a permutation.
struct CoxNormalForm {
  std::vector<FreeWord> strand;  // strand[i-1] is the word on strand i
  Perm w;

  static CoxNormalForm identity(int n) { return {std::vector<FreeWord>(n), Perm::identity(n)}; }
  int n() const { return w.size(); }

  /// Right multiplication by a generator; w L_{u,j} = L_{u, j w^{-1}} w.
  void mul(const BraidGen& g) {
    if (!g.tau) {
      w = w * Perm::s(n(), g.idx);
      return;
    }
    int j = w.inverse().p[0];
    strand[j] = strand[j] * FreeWord::gen(g.idx, g.inv);
  }

  /// JM factors (u, i, exponent) in order, adjacent equal letters merged.
  std::vector<std::tuple<int, int, int>> factors() const {
    std::vector<std::tuple<int, int, int>> f;
    for (int i = 1; i <= n(); ++i)
      for (int c : strand[i - 1].w) {
        int u = core_of(c), a = is_inverse(c) ? -1 : 1;
        if (!f.empty() && std::get<0>(f.back()) == u && std::get<1>(f.back()) == i) std::get<2>(f.back()) += a;
        else f.push_back({u, i, a});
      }
    return f;
  }

  BraidWord to_word() const {
    BraidWord r;
    for (int i = 1; i <= n(); ++i)
      for (int c : strand[i - 1].w) r = r * jm_element(core_of(c), i, is_inverse(c));
    for (int k : w.reduced_word()) r = r * BraidWord::beta(k);
    return r;
  }

  std::string str() const {
    std::string s;
    for (auto [u, i, a] : factors()) {
      if (!s.empty()) s += ' ';
      s += "L(" + std::to_string(u) + "," + std::to_string(i) + ")";
      if (a != 1) s += "^" + std::to_string(a);
    }
    if (!s.empty()) s += " * ";
    return s + (w.is_identity() ? "id" : w.str());
  }

  friend bool operator==(const CoxNormalForm& a, const CoxNormalForm& b) {
    return a.w == b.w && a.strand == b.strand;
  }
  friend bool operator<(const CoxNormalForm& a, const CoxNormalForm& b) {
    if (!(a.w == b.w)) return a.w < b.w;
    return a.strand < b.strand;
  }
};

inline CoxNormalForm cox_normal_form(const BraidWord& word, int g, int n) {
  word.check(g, n);
  CoxNormalForm nf = CoxNormalForm::identity(n);
  for (auto& x : word.gens) nf.mul(x);
  return nf;
}

inline bool cox_equal(const BraidWord& a, const BraidWord& b, int g, int n) {
  return cox_normal_form(a, g, n) == cox_normal_form(b, g, n);
}

// ---------------------------------------------------------------------------
// Classical embedding and the Artin action

/// sigma_i^{+-1} on g+n strands.
using ClassicalBraid = std::vector<std::pair<int, bool>>;

/// tau_u to sigma_g ... sigma_{u+1} sigma_u^2 sigma_{u+1} ... sigma_g,
/// beta_i to sigma_{g+i}.
inline ClassicalBraid embed_in_classical(const BraidWord& w, int g) {
  ClassicalBraid r;
  for (auto& x : w.gens) {
    if (!x.tau) {
      r.push_back({g + x.idx, x.inv});
      continue;
    }
    ClassicalBraid t;
    for (int k = g; k > x.idx; --k) t.push_back({k, false});
    t.push_back({x.idx, false});
    t.push_back({x.idx, false});
    for (int k = x.idx + 1; k <= g; ++k) t.push_back({k, false});
    if (x.inv) {
      std::reverse(t.begin(), t.end());
      for (auto& y : t) y.second = !y.second;
    }
    r.insert(r.end(), t.begin(), t.end());
  }
  return r;
}

/// Images of the free generators x_1..x_N under the Artin action, with
/// sigma_i: x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i applied letter by letter.
inline std::vector<FreeWord> artin_images(const ClassicalBraid& b, int N) {
  std::vector<FreeWord> img;
  for (int j = 1; j <= N; ++j) img.push_back(FreeWord::gen(j));
  for (auto [i, inv] : b) {
    FreeWord xi = FreeWord::gen(i), xj = FreeWord::gen(i + 1);
    FreeWord a = inv ? xj : xi * xj * xi.inverse();
    FreeWord c = inv ? xj.inverse() * xi * xj : xi;
    for (auto& w : img) {
      FreeWord out;
      for (int code : w.w) {
        int k = core_of(code);
        FreeWord piece = k == i ? a : k == i + 1 ? c : FreeWord::gen(k);
        out = out * (is_inverse(code) ? piece.inverse() : piece);
      }
      w = out;
    }
  }
  return img;
}

/// Equality in the handlebody braid group, decided through the faithful
/// classical embedding and the faithful Artin action.
inline bool braid_equal_via_embedding(const BraidWord& a, const BraidWord& b, int g, int n) {
  return artin_images(embed_in_classical(a, g), g + n) == artin_images(embed_in_classical(b, g), g + n);
}

}  // namespace hb
