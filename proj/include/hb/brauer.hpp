#pragma once
// Brauer algebras: classical, handlebody with free decorations, and cyclotomic.

#include <functional>
#include <vector>

#include "hb/linalg.hpp"
#include "hb/tl_blob.hpp"

namespace hb {

using BrauerDiagram = Diagram<MonoidWord>;

inline mpz_class double_factorial(int k) {
  mpz_class r = 1;
  for (int x = k; x > 1; x -= 2) r *= x;
  return r;
}

/// (BN)^n (2n-1)!!
inline mpz_class brauer_dim(int g, const std::vector<int>& d, int n) {
  mpz_class bn = blob_number(g, d), r = 1;
  for (int i = 0; i < n; ++i) r *= bn;
  return r * double_factorial(2 * n - 1);
}

template <class Word>
std::vector<Diagram<Word>> perfect_matchings(int nb, int nt) {
  std::vector<Diagram<Word>> out;
  int N = nb + nt;
  if (N % 2) return out;
  Diagram<Word> cur(nb, nt);
  std::function<void()> rec = [&]() {
    int a = 0;
    while (a < N && cur.mate[a] != -1) ++a;
    if (a == N) {
      out.push_back(cur);
      return;
    }
    for (int b = a + 1; b < N; ++b) {
      if (cur.mate[b] != -1) continue;
      cur.mate[a] = b;
      cur.mate[b] = a;
      rec();
      cur.mate[a] = cur.mate[b] = -1;
    }
  };
  rec();
  return out;
}

/// Brauer algebra of genus g in the perfect-matching model; g = 0 gives Br_n(c).
struct BrauerAlgebra {
  int n = 0;
  CycloParams params;
  mutable std::shared_ptr<CycloReducer> red;

  BrauerAlgebra(int n_, CycloParams p) : n(n_), params(std::move(p)), red(std::make_shared<CycloReducer>(params)) {}
  /// Classical Brauer algebra with circle value c.
  static BrauerAlgebra classical(int n, const ScalarPoly& c) {
    CycloParams p(0, {});
    p.circle[{}] = c;
    return BrauerAlgebra(n, p);
  }
  /// Classical Brauer algebra with the symbolic circle c[e].
  static BrauerAlgebra classical(int n) { return BrauerAlgebra(n, CycloParams(0, {})); }

  int g() const { return params.g; }

  bool is_basis(const BrauerDiagram& d) const {
    if (d.nb != n || d.nt != n) return false;
    for (int p = 0; p < d.size(); ++p)
      if (d.is_origin(p)) {
        check_range(d.word[p].w, g());
        if (!params.bounded(d.word[p])) return false;
      }
    return true;
  }

  Element<BrauerDiagram> multiply(const BrauerDiagram& x, const BrauerDiagram& y) const {
    return cyclo_normalize(compose(x, y), *red);
  }
  Element<BrauerDiagram> multiply(const Element<BrauerDiagram>& x, const Element<BrauerDiagram>& y) const {
    return hb::multiply(x, y, [&](auto& a, auto& b) { return multiply(a, b); });
  }
  Element<BrauerDiagram> normalize(const BrauerDiagram& x) const { return cyclo_normalize({x, {}}, *red); }

  BrauerDiagram identity() const { return BrauerDiagram::identity(n); }
  BrauerDiagram e(int i) const {
    BrauerDiagram d(n, n);
    for (int k = 0; k < n; ++k)
      if (k != i - 1 && k != i) d.join(k, n + k);
    d.join(i - 1, i);
    d.join(n + i - 1, n + i);
    return d;
  }
  /// Crossing of strands i and i+1.
  BrauerDiagram s(int i) const {
    BrauerDiagram d(n, n);
    for (int k = 0; k < n; ++k)
      if (k != i - 1 && k != i) d.join(k, n + k);
    d.join(i - 1, n + i);
    d.join(i, n + i - 1);
    return d;
  }
  /// Blob of type u on strand i (1-based).
  BrauerDiagram blob(int u, int i = 1) const {
    BrauerDiagram d = identity();
    d.word[i - 1] = MonoidWord::gen(u);
    return d;
  }

  /// Clapped blobbed perfect matchings: any bounded word on any strand.
  std::vector<BrauerDiagram> enumerate() const {
    std::vector<BrauerDiagram> out;
    auto words = bounded_words(params);
    for (auto& m : perfect_matchings<MonoidWord>(n, n)) {
      std::vector<int> s;
      for (int p = 0; p < m.size(); ++p)
        if (m.is_origin(p)) s.push_back(p);
      for (auto& d : decorate(m, s, words)) out.push_back(d);
    }
    return out;
  }

  ScalarPoly star_scalar(const ScalarPoly& c) const { return mirror_scalar(params, c); }
  Element<BrauerDiagram> star(const Element<BrauerDiagram>& x) const {
    Element<BrauerDiagram> r;
    for (auto& [d, c] : x) add_term(r, d.star(), star_scalar(c));
    return r;
  }
};

inline std::vector<BrauerDiagram> enumerate_clapped_basis(int g, const std::vector<int>& d, int n) {
  return BrauerAlgebra(n, CycloParams(g, d)).enumerate();
}

/// Value of the loop formed by a cap carrying w1 on top of a cup carrying w2.
inline ScalarPoly cap_cup_value(const MonoidWord& w1, const MonoidWord& w2, CycloReducer& red) {
  BrauerDiagram cap(2, 0), cup(0, 2);
  cap.join(0, 1, w1);
  cup.join(0, 1, w2);
  ScalarPoly v(1);
  for (auto& w : compose(cup, cap).loops) v = v * red.loop_value(w);
  return v;
}

/// Block diagonal pairing matrix: for each core u, the cap/cup loop values
/// over the words u^0, ..., u^(d_u - 1).
inline std::vector<std::vector<ScalarPoly>> pairing_matrix(const CycloParams& p) {
  CycloReducer red(p);
  std::size_t total = 0;
  for (int x : p.d) total += x;
  std::vector<std::vector<ScalarPoly>> m(total, std::vector<ScalarPoly>(total));
  std::size_t off = 0;
  for (int u = 1; u <= p.g; ++u) {
    const int du = p.d[u - 1];
    for (int i = 0; i < du; ++i)
      for (int j = 0; j < du; ++j)
        m[off + i][off + j] =
            cap_cup_value(MonoidWord::from_cores(std::vector<int>(i, u)), MonoidWord::from_cores(std::vector<int>(j, u)), red);
    off += du;
  }
  return m;
}

/// Cap/cup loop values over all bounded words at once.
inline std::vector<std::vector<ScalarPoly>> joint_pairing_matrix(const CycloParams& p) {
  CycloReducer red(p);
  auto words = bounded_words(p);
  std::vector<std::vector<ScalarPoly>> m(words.size(), std::vector<ScalarPoly>(words.size()));
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j) m[i][j] = cap_cup_value(words[i], words[j], red);
  return m;
}

inline QMatrix specialize_matrix(const std::vector<std::vector<ScalarPoly>>& m, const Bindings& b) {
  QMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto& x : m[i]) {
      ScalarPoly v = specialize(x, b);
      if (!v.is_constant()) throw std::invalid_argument("unbound symbols in " + v.str());
      r[i].push_back(v.constant());
    }
  return r;
}

/// Full rank of the specialized pairing matrix over Q.
inline bool is_admissible(const CycloParams& p, const Bindings& b) {
  auto m = specialize_matrix(pairing_matrix(p), b);
  return rank(m) == m.size();
}

}  // namespace hb
