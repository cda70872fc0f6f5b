#pragma once
// Handlebody Temperley-Lieb and cyclotomic handlebody blob algebras.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hb/diagram.hpp"
#include "hb/element.hpp"

namespace hb {

using TLDiagram = Diagram<FreeWord>;
using BlobDiagram = Diagram<MonoidWord>;

inline mpz_class binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline mpz_class catalan(int n) { return binomial(2 * n, n) / (n + 1); }

/// Number of monoid words with fewer than d_u letters u for every core u.
inline mpz_class blob_number(int g, const std::vector<int>& d) {
  if (static_cast<int>(d.size()) != g) throw std::invalid_argument("degree vector length must equal g");
  for (int x : d)
    if (x < 1) throw std::invalid_argument("degrees must be positive");
  // sum over exponent vectors k_u < d_u of the multinomial (k_1 + ... + k_g)!/prod k_u!
  mpz_class total = 0;
  std::vector<int> k(g, 0);
  std::function<void(int)> rec = [&](int u) {
    if (u == g) {
      int s = 0;
      mpz_class m = 1;
      for (int x : k) {
        s += x;
        m *= binomial(s, x);
      }
      total += m;
      return;
    }
    for (k[u] = 0; k[u] < d[u]; ++k[u]) rec(u + 1);
  };
  rec(0);
  return total;
}

/// dim(n) = BN * sum_{k=1..n} C_{k-1} dim(n-k), dim(0) = 1.
inline mpz_class blob_dim(int g, const std::vector<int>& d, int n) {
  mpz_class bn = blob_number(g, d);
  std::vector<mpz_class> dim(n + 1);
  dim[0] = 1;
  for (int m = 1; m <= n; ++m) {
    dim[m] = 0;
    for (int k = 1; k <= m; ++k) dim[m] += catalan(k - 1) * dim[m - k];
    dim[m] *= bn;
  }
  return dim[n];
}

/// Non-crossing perfect matchings of the clapped line of a (nb, nt) diagram.
template <class Word>
std::vector<Diagram<Word>> planar_matchings(int nb, int nt) {
  int N = nb + nt;
  std::vector<Diagram<Word>> out;
  if (N % 2) return out;
  auto label = [&](int pos) { return pos < nb ? pos : nb + (nt - 1 - (pos - nb)); };
  std::vector<int> partner(N, -1);
  std::function<void(int)> rec = [&](int lo) {
    while (lo < N && partner[lo] != -1) ++lo;
    if (lo == N) {
      Diagram<Word> d(nb, nt);
      for (int p = 0; p < N; ++p)
        if (p < partner[p]) d.join(label(p), label(partner[p]));
      out.push_back(d);
      return;
    }
    // partner at odd distance keeps the enclosed block even
    for (int hi = lo + 1; hi < N; hi += 2) {
      bool free = true;
      for (int x = lo + 1; x < hi && free; ++x) free = partner[x] == -1;
      if (!free || partner[hi] != -1) continue;
      partner[lo] = hi;
      partner[hi] = lo;
      rec(lo + 1);
      partner[lo] = partner[hi] = -1;
    }
  };
  rec(0);
  return out;
}

/// Whether only non-nested strands of a planar diagram carry words.
template <class Word>
bool decorations_reachable(const Diagram<Word>& d) {
  for (int p = 0; p < d.size(); ++p)
    if (d.is_origin(p) && !d.word[p].is_one() && d.is_nested(p)) return false;
  return true;
}

/// Expand a diagram template over word choices on the given strands.
template <class Word>
std::vector<Diagram<Word>> decorate(const Diagram<Word>& d, const std::vector<int>& strands,
                                    const std::vector<Word>& words) {
  std::vector<Diagram<Word>> out;
  Diagram<Word> cur = d;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == strands.size()) {
      out.push_back(cur);
      return;
    }
    for (auto& w : words) {
      cur.word[strands[k]] = w;
      rec(k + 1);
    }
    cur.word[strands[k]] = Word::one();
  };
  rec(0);
  return out;
}

template <class Word>
std::vector<int> outer_strands(const Diagram<Word>& d) {
  std::vector<int> s;
  for (int p = 0; p < d.size(); ++p)
    if (d.is_origin(p) && !d.is_nested(p)) s.push_back(p);
  return s;
}

// ---------------------------------------------------------------------------
// Temperley-Lieb

/// Reduced free group words of length at most len.
inline std::vector<FreeWord> free_words_upto(int g, int len) {
  std::vector<FreeWord> out{FreeWord::one()};
  std::vector<FreeWord> layer{FreeWord::one()};
  for (int l = 1; l <= len; ++l) {
    std::vector<FreeWord> next;
    for (auto& w : layer)
      for (int u = 1; u <= g; ++u)
        for (bool inv : {false, true}) {
          int c = letter(u, inv);
          if (!w.w.empty() && w.w.back() == inverse_letter(c)) continue;
          FreeWord x = w;
          x.w.push_back(c);
          next.push_back(x);
        }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

/// Handlebody TL algebra TL_{g,n} with circle parameters c[key].
struct TLAlgebra {
  int g = 0, n = 0;
  std::map<Codes, ScalarPoly> circle;  // overrides; missing keys stay symbolic

  ScalarPoly circle_value(const ConjKey& k) const {
    auto it = circle.find(k.w);
    return it == circle.end() ? circle_poly(k.w) : it->second;
  }

  bool is_basis(const TLDiagram& d) const {
    if (d.nb != n || d.nt != n || !d.is_planar()) return false;
    for (int p = 0; p < d.size(); ++p)
      if (d.is_origin(p)) check_range(d.word[p].w, g);
    return decorations_reachable(d);
  }

  Element<TLDiagram> multiply(const TLDiagram& x, const TLDiagram& y) const {
    auto comp = compose(x, y);
    ScalarPoly c(1);
    for (auto& w : comp.loops) c = c * circle_value(conj_key(w));
    Element<TLDiagram> r;
    add_term(r, comp.diagram, c);
    return r;
  }
  Element<TLDiagram> multiply(const Element<TLDiagram>& x, const Element<TLDiagram>& y) const {
    return hb::multiply(x, y, [&](auto& a, auto& b) { return multiply(a, b); });
  }

  TLDiagram identity() const { return TLDiagram::identity(n); }
  /// Cup-cap generator on strands i, i+1 (1-based).
  TLDiagram e(int i) const {
    TLDiagram d(n, n);
    for (int k = 0; k < n; ++k)
      if (k != i - 1 && k != i) d.join(k, n + k);
    d.join(i - 1, i);
    d.join(n + i - 1, n + i);
    return d;
  }
  /// Coil around core u on the first strand.
  TLDiagram coil(int u, bool inverse = false) const {
    TLDiagram d = identity();
    d.word[0] = FreeWord::gen(u, inverse);
    return d;
  }

  std::vector<TLDiagram> enumerate(int max_len) const {
    std::vector<TLDiagram> out;
    auto words = free_words_upto(g, max_len);
    for (auto& m : planar_matchings<FreeWord>(n, n)) {
      auto s = outer_strands(m);
      if (g == 0) s.clear();
      for (auto& d : decorate(m, s, words)) {
        int total = 0;
        for (int p : s) total += static_cast<int>(d.word[p].length());
        if (total <= max_len) out.push_back(d);
      }
    }
    return out;
  }

  ScalarPoly star_scalar(const ScalarPoly& c) const {
    return c.map_vars([](const Symbol& s) {
      if (s.kind != Symbol::Circle) return s;
      FreeWord w;
      w.w = s.key;
      return Symbol::circle(conj_key(w.reversed()).w);
    });
  }
  Element<TLDiagram> star(const Element<TLDiagram>& x) const {
    Element<TLDiagram> r;
    for (auto& [d, c] : x) add_term(r, d.star(), star_scalar(c));
    return r;
  }
};

// ---------------------------------------------------------------------------
// Cyclotomic parameters and blob words

/// Degree vector, cyclotomic scalars b[u,i] and circle scalars.
struct CycloParams {
  int g = 0;
  std::vector<int> d;
  std::map<std::pair<int, int>, ScalarPoly> b;  // overrides; default symbol b[u,i]
  std::map<Codes, ScalarPoly> circle;           // overrides; default symbol c[key]

  CycloParams() = default;
  CycloParams(int g_, std::vector<int> d_) : g(g_), d(std::move(d_)) {
    if (static_cast<int>(d.size()) != g) throw std::invalid_argument("degree vector length must equal g");
    for (int x : d)
      if (x < 1) throw std::invalid_argument("degrees must be positive");
  }

  ScalarPoly beta(int u, int i) const {
    auto it = b.find({u, i});
    return it == b.end() ? cyclo_poly(u, i) : it->second;
  }
  ScalarPoly circle_value(const ConjKey& k) const {
    auto it = circle.find(k.w);
    return it == circle.end() ? circle_poly(k.w) : it->second;
  }
  bool bounded(const MonoidWord& w) const {
    for (int u = 1; u <= g; ++u)
      if (w.count(u) >= d[u - 1]) return false;
    return true;
  }
  void set_b(const std::vector<std::vector<Rational>>& vals) {
    for (int u = 1; u <= static_cast<int>(vals.size()); ++u)
      for (int i = 1; i <= static_cast<int>(vals[u - 1].size()); ++i) b[{u, i}] = ScalarPoly(vals[u - 1][i - 1]);
  }
};

/// All bounded words (the one-strand basis), ordered by length then letters.
inline std::vector<MonoidWord> bounded_words(const CycloParams& p) {
  std::vector<MonoidWord> out{MonoidWord::one()};
  std::vector<MonoidWord> layer{MonoidWord::one()};
  while (!layer.empty()) {
    std::vector<MonoidWord> next;
    for (auto& w : layer)
      for (int u = 1; u <= p.g; ++u) {
        if (w.count(u) + 1 >= p.d[u - 1]) continue;
        next.push_back(w * MonoidWord::gen(u));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

/// (b_u - beta_1) w_1 (b_u - beta_2) ... (b_u - beta_d) = 0, solved for the
/// full word: w = -sum over proper subsets S kept of prod_{j not in S}(-beta_j) w_S.
inline void expand_window(const MonoidWord& w, const CycloParams& p, int u, const std::vector<std::size_t>& pos,
                          LinComb<MonoidWord>& out) {
  const int d = static_cast<int>(pos.size());
  for (unsigned mask = 0; mask + 1 < (1u << d); ++mask) {
    ScalarPoly c(-1);
    std::vector<char> drop(w.length(), 0);
    for (int j = 0; j < d; ++j)
      if (!(mask >> j & 1)) {
        c = c * (-p.beta(u, j + 1));
        drop[pos[j]] = 1;
      }
    MonoidWord v;
    for (std::size_t k = 0; k < w.length(); ++k)
      if (!drop[k]) v.w.push_back(w.w[k]);
    if (!c.is_zero()) out.push_back({v, c});
  }
}

/// One rewriting step: the window of the first d_u letters u whose last
/// letter comes earliest. Returns false if w is bounded.
inline bool cyclo_step(const MonoidWord& w, const CycloParams& p, LinComb<MonoidWord>& out) {
  int best_u = -1;
  std::size_t best_end = w.length();
  std::vector<std::size_t> best_pos;
  for (int u = 1; u <= p.g; ++u) {
    std::vector<std::size_t> pos;
    for (std::size_t k = 0; k < w.length() && static_cast<int>(pos.size()) < p.d[u - 1]; ++k)
      if (w.w[k] == letter(u)) pos.push_back(k);
    if (static_cast<int>(pos.size()) == p.d[u - 1] && pos.back() < best_end) {
      best_end = pos.back();
      best_u = u;
      best_pos = pos;
    }
  }
  if (best_u < 0) return false;
  expand_window(w, p, best_u, best_pos, out);
  return true;
}

/// Normal form of a strand word in the one-strand cyclotomic algebra.
class CycloReducer {
 public:
  explicit CycloReducer(const CycloParams& p) : p_(p) {}

  const std::map<MonoidWord, ScalarPoly>& reduce(const MonoidWord& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    std::map<MonoidWord, ScalarPoly> res;
    LinComb<MonoidWord> step;
    if (!cyclo_step(w, p_, step)) {
      res.emplace(w, ScalarPoly(1));
    } else {
      for (auto& [v, c] : step)
        for (auto& [x, cx] : reduce(v)) add_term(res, x, c * cx);
    }
    return memo_.emplace(w, std::move(res)).first->second;
  }

  /// Value of a closed loop carrying w.
  ScalarPoly loop_value(const MonoidWord& w) {
    MonoidWord r;
    r.w = min_rotation(w.w);
    ScalarPoly v;
    for (auto& [x, c] : reduce(r)) v += c * p_.circle_value(conj_key(x));
    return v;
  }

  const CycloParams& params() const { return p_; }

 private:
  CycloParams p_;
  std::map<MonoidWord, std::map<MonoidWord, ScalarPoly>> memo_;
};

/// Multiply out loop values and expand every decorated strand into normal form.
inline Element<BlobDiagram> cyclo_normalize(const Composite<MonoidWord>& comp, CycloReducer& red) {
  ScalarPoly c(1);
  for (auto& w : comp.loops) {
    c = c * red.loop_value(w);
    if (c.is_zero()) return {};
  }
  Element<BlobDiagram> cur;
  BlobDiagram base = comp.diagram;
  std::vector<int> strands;
  for (int p = 0; p < base.size(); ++p)
    if (base.is_origin(p) && !base.word[p].is_one()) {
      strands.push_back(p);
      base.word[p] = MonoidWord::one();
    }
  add_term(cur, base, c);
  for (int p : strands) {
    const auto& nf = red.reduce(comp.diagram.word[p]);
    Element<BlobDiagram> next;
    for (auto& [d, cd] : cur)
      for (auto& [w, cw] : nf) {
        BlobDiagram e = d;
        e.word[p] = w;
        add_term(next, e, cd * cw);
      }
    cur = std::move(next);
  }
  return cur;
}

/// Mirroring reverses every word, so circle keys reverse and the
/// cyclotomic scalars of each core are read in the opposite order.
inline ScalarPoly mirror_scalar(const CycloParams& p, const ScalarPoly& c) {
  return c.map_vars([&p](const Symbol& s) {
    if (s.kind == Symbol::Circle) return Symbol::circle(min_rotation(Codes(s.key.rbegin(), s.key.rend())));
    if (s.kind == Symbol::Cyclo && s.u >= 1 && s.u <= p.g) return Symbol::cyclo(s.u, p.d[s.u - 1] + 1 - s.i);
    return s;
  });
}

// ---------------------------------------------------------------------------
// Blob algebra

struct BlobAlgebra {
  int n = 0;
  CycloParams params;
  mutable std::shared_ptr<CycloReducer> red;

  BlobAlgebra(int n_, CycloParams p) : n(n_), params(std::move(p)), red(std::make_shared<CycloReducer>(params)) {}

  int g() const { return params.g; }

  bool is_basis(const BlobDiagram& d) const {
    if (d.nb != n || d.nt != n || !d.is_planar()) return false;
    for (int p = 0; p < d.size(); ++p)
      if (d.is_origin(p)) {
        check_range(d.word[p].w, g());
        if (!params.bounded(d.word[p])) return false;
      }
    return decorations_reachable(d);
  }

  Element<BlobDiagram> multiply(const BlobDiagram& x, const BlobDiagram& y) const {
    return cyclo_normalize(compose(x, y), *red);
  }
  Element<BlobDiagram> multiply(const Element<BlobDiagram>& x, const Element<BlobDiagram>& y) const {
    return hb::multiply(x, y, [&](auto& a, auto& b) { return multiply(a, b); });
  }
  /// Normal form of an arbitrary (possibly unbounded) decorated diagram.
  Element<BlobDiagram> normalize(const BlobDiagram& x) const { return cyclo_normalize({x, {}}, *red); }

  BlobDiagram identity() const { return BlobDiagram::identity(n); }
  BlobDiagram e(int i) const {
    BlobDiagram d(n, n);
    for (int k = 0; k < n; ++k)
      if (k != i - 1 && k != i) d.join(k, n + k);
    d.join(i - 1, i);
    d.join(n + i - 1, n + i);
    return d;
  }
  /// Blob of type u on the first strand (unnormalized diagram).
  BlobDiagram blob(int u) const {
    BlobDiagram d = identity();
    d.word[0] = MonoidWord::gen(u);
    return d;
  }

  std::vector<BlobDiagram> enumerate() const {
    std::vector<BlobDiagram> out;
    auto words = bounded_words(params);
    for (auto& m : planar_matchings<MonoidWord>(n, n)) {
      auto s = outer_strands(m);
      for (auto& d : decorate(m, s, words)) out.push_back(d);
    }
    return out;
  }

  ScalarPoly star_scalar(const ScalarPoly& c) const { return mirror_scalar(params, c); }
  Element<BlobDiagram> star(const Element<BlobDiagram>& x) const {
    Element<BlobDiagram> r;
    for (auto& [d, c] : x) add_term(r, d.star(), star_scalar(c));
    return r;
  }
};

inline std::vector<BlobDiagram> enumerate_blob_basis(int g, const std::vector<int>& d, int n) {
  return BlobAlgebra(n, CycloParams(g, d)).enumerate();
}

}  // namespace hb
