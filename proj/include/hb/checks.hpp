#pragma once
// Verification suites shared by the acceptance runner and `hb verify`.

#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hb/braid_coxeter.hpp"
#include "hb/brauer.hpp"
#include "hb/cell_data.hpp"
#include "hb/hecke.hpp"
#include "hb/murphy.hpp"
#include "hb/tl_blob.hpp"

namespace hb {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

namespace detail {

/// Collects failures; the detail keeps the first few.
struct Tally {
  std::size_t checked = 0, failed = 0;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    ++failed;
    if (notes.size() < 6) notes.push_back(what);
  }
  CheckResult result(const std::string& name, const std::string& extra = "") const {
    std::ostringstream os;
    os << checked << " checks, " << failed << " failed";
    if (!extra.empty()) os << "; " << extra;
    for (auto& n : notes) os << "; " << n;
    return {name, failed == 0, os.str()};
  }
};

inline std::string dvec_str(const std::vector<int>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

/// F_p with q = 2 and distinct cyclotomic parameters 35, 42, 57, ...
inline PrimeField generic_prime_field(int g, const std::vector<int>& d) {
  PrimeField f;
  f.vals[Symbol::q()] = 2;
  const std::uint64_t vals[] = {35, 42, 57, 71, 83, 97, 101, 113, 127};
  int k = 0;
  for (int u = 1; u <= g; ++u)
    for (int i = 1; i <= d[u - 1]; ++i) f.vals[Symbol::cyclo(u, i)] = vals[k++ % 9] + 200 * (k / 9);
  return f;
}

/// Binds every circle symbol that a loop of length <= len can produce.
inline void bind_free_circles(RationalField& f, int g, int len, const Rational& v) {
  for (auto& w : free_words_upto(g, len)) f.bind[Symbol::circle(conj_key(w).w)] = v;
}
inline void bind_bounded_circles(RationalField& f, const CycloParams& p, const Rational& v) {
  for (auto& w : bounded_words(p)) f.bind[Symbol::circle(conj_key(w).w)] = v;
}

template <class A, class K>
std::size_t count_nonassociative(const A& alg, const std::vector<K>& basis) {
  std::size_t bad = 0;
  std::vector<Element<K>> e;
  for (auto& x : basis) e.push_back(basis_element(x));
  std::map<std::pair<std::size_t, std::size_t>, Element<K>> prod;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j) prod[{i, j}] = alg.multiply(e[i], e[j]);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j)
      for (std::size_t k = 0; k < e.size(); ++k)
        if (alg.multiply(prod[{i, j}], e[k]) != alg.multiply(e[i], prod[{j, k}])) ++bad;
  return bad;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Counting

inline CheckResult check_blob_numbers() {
  detail::Tally t;
  t.expect(blob_number(0, {}) == 1, "BN_0 != 1");
  for (int d = 1; d <= 6; ++d) t.expect(blob_number(1, {d}) == d, "BN_1,(" + std::to_string(d) + ") != d");
  t.expect(blob_number(2, {2, 3}) == 9, "BN_2,(2,3) != 9");
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b)
      t.expect(blob_number(2, {a, b}) == binomial(a + b, a) - 1,
               "BN_2," + detail::dvec_str({a, b}) + " = " + blob_number(2, {a, b}).get_str());
  return t.result("blob numbers");
}

inline CheckResult check_blob_dims() {
  detail::Tally t;
  for (int n = 1; n <= 10; ++n) t.expect(blob_dim(0, {}, n) == catalan(n), "g=0 n=" + std::to_string(n));
  for (int n = 1; n <= 8; ++n) t.expect(blob_dim(1, {2}, n) == binomial(2 * n, n), "g=1 d=(2) n=" + std::to_string(n));
  std::vector<std::vector<int>> ds{{}};
  for (int a = 1; a <= 3; ++a) ds.push_back({a});
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) ds.push_back({a, b});
  for (auto& d : ds)
    for (int n = 1; n <= 4; ++n) {
      const int g = static_cast<int>(d.size());
      auto f = blob_dim(g, d, n);
      auto e = enumerate_blob_basis(g, d, n).size();
      t.expect(f == e, detail::dvec_str(d) + " n=" + std::to_string(n) + ": formula " + f.get_str() + " vs " +
                           std::to_string(e));
    }
  return t.result("blob dimensions");
}

inline CheckResult check_brauer_dims() {
  detail::Tally t;
  struct Case {
    int g;
    std::vector<int> d;
    int nmax;
  };
  for (auto& c : {Case{0, {}, 4}, Case{1, {2}, 3}, Case{2, {2, 2}, 2}})
    for (int n = 1; n <= c.nmax; ++n) {
      auto f = brauer_dim(c.g, c.d, n);
      auto e = enumerate_clapped_basis(c.g, c.d, n).size();
      t.expect(f == e, "g=" + std::to_string(c.g) + " " + detail::dvec_str(c.d) + " n=" + std::to_string(n) +
                           ": formula " + f.get_str() + " vs " + std::to_string(e));
    }
  return t.result("cyclotomic Brauer dimensions");
}

/// Formula (BN)^n n! against the normal-form basis, which must also span the
/// quotient and be linearly independent in it (checked over F_p).
inline CheckResult check_hecke_dims() {
  detail::Tally t;
  struct Case {
    int g;
    std::vector<int> d;
    int nmax;
  };
  std::string table;
  for (auto& c : {Case{0, {}, 4}, Case{1, {2}, 3}, Case{2, {2, 2}, 2}})
    for (int n = 1; n <= c.nmax; ++n) {
      mpz_class f = 1;
      for (int k = 0; k < n; ++k) f *= blob_number(c.g, c.d) * (k + 1);
      CycloParams p(c.g, c.d);
      CycloHecke<PrimeField> A(n, p, detail::generic_prime_field(c.g, c.d));
      const std::size_t count = A.basis().size();
      const bool spans = A.spans(), indep = A.basis_independent();
      std::string tag = "g=" + std::to_string(c.g) + " " + detail::dvec_str(c.d) + " n=" + std::to_string(n);
      t.expect(f == count, tag + ": formula " + f.get_str() + " vs " + std::to_string(count));
      t.expect(spans, tag + ": basis does not span");
      t.expect(indep, tag + ": " + std::to_string(A.basis_relations().size()) + " relations among basis elements");
    }
  return t.result("cyclotomic Hecke dimensions");
}

// ---------------------------------------------------------------------------
// Brauer worked example

inline BrauerDiagram brauer_example_x(bool second) {
  BrauerDiagram d(4, 4);
  d.join(1, 3);          // b2 - b4
  d.join(4 + 0, 4 + 1);  // t1 - t2
  d.join(0, 4 + (second ? 2 : 3));
  d.join(2, 4 + (second ? 3 : 2));
  return d;
}

inline CheckResult check_brauer_example() {
  detail::Tally t;
  const BrauerDiagram x1 = brauer_example_x(false), x2 = brauer_example_x(true);
  std::vector<ScalarPoly> cs{circle_poly({}), ScalarPoly(0), ScalarPoly(1), ScalarPoly(5)};
  for (auto& c : cs) {
    auto A = BrauerAlgebra::classical(4, c);
    auto is = [&](const BrauerDiagram& a, const BrauerDiagram& b, const BrauerDiagram& r) {
      return A.multiply(basis_element(a), basis_element(b)) == basis_element(r);
    };
    const std::string tag = "c=" + c.str() + ": ";
    t.expect(is(x1, x1, x1), tag + "x1 x1 != x1");
    t.expect(is(x2, x1, x2), tag + "x2 x1 != x2");
    t.expect(is(x1, x2, x2), tag + "x1 x2 != x2");
    t.expect(is(x2, x2, x1), tag + "x2 x2 != x1");
  }
  RationalField f;
  f.bind[Symbol::circle({})] = 1;
  auto d = brauer_cell_datum(BrauerAlgebra::classical(4), f);
  const int lam = 2;
  t.expect(d.bottoms[lam].size() == 6 && d.tops[lam].size() == 6, "cell grid is not 6x6");
  t.expect(d.sandwich[lam].size() == 2, "H-cells do not have size 2");
  auto p1 = split_diagram(x1), p2 = split_diagram(x2);
  t.expect(p1.lambda == lam && p2.lambda == lam, "example elements not in cell 2");
  t.expect(p1.D == p2.D && p1.U == p2.U && !(p1.b == p2.b), "example elements not in one H-cell");
  t.expect(assemble(p1.D, p1.b, p1.U) == x1 && assemble(p2.D, p2.b, p2.U) == x2, "split and assemble disagree");
  return t.result("Brauer worked example");
}

// ---------------------------------------------------------------------------
// Apexes and simples

template <class F>
std::string apex_row(const CellDatum<F>& d) {
  std::string s;
  for (auto& g : apex_report(d)) s += g.name + (g.apex ? "+" : "-") + " ";
  return s;
}

inline CheckResult check_apex_tables() {
  detail::Tally t;
  auto expect_table = [&](const auto& d, bool c_zero, const std::string& tag) {
    for (auto& g : apex_report(d)) {
      const bool want = !(c_zero && g.lambda == 0);
      t.expect(g.apex == want, tag + " lambda=" + g.name + (g.apex ? " is" : " is not") + " an apex");
    }
  };
  for (int n = 1; n <= 4; ++n)
    for (int c : {0, 1, 5}) {
      RationalField f;
      f.bind[Symbol::circle({})] = c;
      const std::string tag = " n=" + std::to_string(n) + " c=" + std::to_string(c);
      expect_table(brauer_cell_datum(BrauerAlgebra::classical(n), f), c == 0, "brauer" + tag);
      TLAlgebra tl;
      tl.n = n;
      expect_table(tl_cell_datum(tl, 0, f), c == 0, "tl g=0" + tag);
      BlobAlgebra bl0(n, CycloParams(0, {}));
      expect_table(blob_cell_datum(bl0, f), c == 0, "blob g=0" + tag);

      RationalField f1;
      detail::bind_free_circles(f1, 1, 2 * n, c);
      TLAlgebra tl1;
      tl1.g = 1;
      tl1.n = n;
      expect_table(tl_cell_datum(tl1, 1, f1), c == 0, "tl g=1" + tag);

      CycloParams p(1, {2});
      RationalField f2;
      f2.bind[Symbol::cyclo(1, 1)] = 3;
      f2.bind[Symbol::cyclo(1, 2)] = -2;
      detail::bind_bounded_circles(f2, p, c);
      expect_table(blob_cell_datum(BlobAlgebra(n, p), f2), c == 0, "blob g=1" + tag);
    }
  return t.result("apex tables");
}

inline CheckResult check_simple_counts() {
  detail::Tally t;
  for (auto [b1, b2, want] : {std::tuple{1, 0, "2"}, std::tuple{0, 0, "1"}})
    for (int n = 1; n <= 4; ++n) {
      CycloParams p(1, {2});
      RationalField f;
      f.bind[Symbol::cyclo(1, 1)] = b1;
      f.bind[Symbol::cyclo(1, 2)] = b2;
      detail::bind_bounded_circles(f, p, 1);
      auto d = blob_cell_datum(BlobAlgebra(n, p), f);
      for (auto& g : apex_report(d)) {
        const std::string tag = "b=(" + std::to_string(b1) + "," + std::to_string(b2) + ") n=" + std::to_string(n) +
                                " lambda=" + g.name;
        t.expect(g.apex, tag + " not an apex");
        t.expect(g.simples == (g.lambda == 0 ? "1" : want), tag + " reports " + g.simples + " simples");
      }
    }
  return t.result("simple counts");
}

// ---------------------------------------------------------------------------
// Relations

inline CheckResult check_braid_relations(int g = 3, int n = 4) {
  detail::Tally t;
  using BW = BraidWord;
  auto T = [](int u, bool i = false) { return BW::tau(u, i); };
  auto B = [](int i, bool v = false) { return BW::beta(i, v); };
  auto rel = [&](const BW& a, const BW& b, const std::string& what) {
    t.expect(braid_equal_via_embedding(a, b, g, n), what + ": " + a.str() + " = " + b.str());
  };
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      if (std::abs(i - j) > 1) rel(B(i) * B(j), B(j) * B(i), "far commutation");
      if (std::abs(i - j) == 1) rel(B(i) * B(j) * B(i), B(j) * B(i) * B(j), "braid relation");
    }
  for (int u = 1; u <= g; ++u)
    for (int i = 2; i < n; ++i) rel(T(u) * B(i), B(i) * T(u), "coil commutation");
  for (int u = 1; u <= g; ++u)
    for (int v = u; v <= g; ++v) rel(T(v) * B(1) * T(u) * B(1), B(1) * T(u) * B(1) * T(v), "coil relation");
  for (int u = 1; u <= g; ++u) {
    auto tu = tilde_tau(u, g);
    for (int i = 2; i < n; ++i) rel(tu * B(i), B(i) * tu, "tilded commutation");
    if (n > 1) rel(tu * B(1) * tu * B(1), B(1) * tu * B(1) * tu, "tilded four-term");
    for (int v = u + 1; v <= g; ++v) {
      auto tv = tilde_tau(v, g);
      auto m = B(1) * tu * B(1, true);
      if (n > 1) rel(tv * m, m * tv, "tilded u<v");
    }
  }
  return t.result("braid relations");
}

inline CheckResult check_coxeter_relations(int g = 3, int n = 4) {
  detail::Tally t;
  using BW = BraidWord;
  auto T = [](int u) { return BW::tau(u); };
  auto S = [](int i) { return BW::beta(i); };
  auto rel = [&](const BW& a, const BW& b, const std::string& what) {
    t.expect(cox_equal(a, b, g, n) && act_equal(a, b, n), what + ": " + a.str() + " = " + b.str());
  };
  for (int i = 1; i < n; ++i) {
    rel(S(i) * S(i), BW{}, "involution");
    for (int j = 1; j < n; ++j) {
      if (std::abs(i - j) > 1) rel(S(i) * S(j), S(j) * S(i), "far commutation");
      if (std::abs(i - j) == 1) rel(S(i) * S(j) * S(i), S(j) * S(i) * S(j), "braid relation");
    }
  }
  for (int u = 1; u <= g; ++u) {
    for (int i = 2; i < n; ++i) rel(T(u) * S(i), S(i) * T(u), "coil commutation");
    for (int v = 1; v <= g; ++v)
      if (n > 1) rel(T(v) * S(1) * T(u) * S(1), S(1) * T(u) * S(1) * T(v), "coil relation");
  }
  return t.result("Coxeter relations");
}

inline CheckResult check_jm_relations(int g = 3, int n = 4) {
  detail::Tally t;
  using BW = BraidWord;
  auto B = [](int i, bool v = false) { return BW::beta(i, v); };
  auto rel = [&](const BW& a, const BW& b, const std::string& what) {
    t.expect(braid_equal_via_embedding(a, b, g, n) && cox_equal(a, b, g, n) && act_equal(a, b, n),
             what + ": " + a.str() + " = " + b.str());
  };
  for (int u = 1; u <= g; ++u)
    for (int i = 1; i <= n; ++i)
      for (bool s : {false, true}) {
        auto L = jm_element(u, i, s);
        rel(L * jm_element(u, i, !s), BW{}, "inverse");
        for (int j = 1; j < n; ++j)
          if (j != i - 1 && j != i)
            for (bool v : {false, true}) rel(B(j, v) * L, L * B(j, v), "far commutation");
        if (i > 1 && !s) rel(B(i - 1, true) * L, jm_element(u, i - 1) * B(i - 1), "pull down");
        if (i < n && !s) rel(B(i) * L, jm_element(u, i + 1) * B(i, true), "pull up");
        if (i > 1 && s) rel(B(i - 1) * L, jm_element(u, i - 1, true) * B(i - 1, true), "pull down inverse");
        if (i < n && s) rel(B(i, true) * L, jm_element(u, i + 1, true) * B(i), "pull up inverse");
        for (int v = u; v <= g; ++v)
          for (int j = 1; j < i; ++j)
            for (bool w : {false, true}) {
              auto M = jm_element(v, j, w);
              rel(L * M, M * L, "ordered commutation");
            }
      }
  return t.result("JM relations");
}

/// The four rewriting rules of H_k past JM elements, which are also the
/// blob slides of the Hecke algebra.
inline CheckResult check_hecke_pull(int g = 3, int n = 4) {
  detail::Tally t;
  HeckeAlgebra A(g, n);
  const ScalarPoly d = A.delta();
  auto sum = [](HeckeElem a, const HeckeElem& b, const ScalarPoly& c) {
    add_into(a, b, c);
    return a;
  };
  for (int u = 1; u <= g; ++u)
    for (int i = 1; i <= n; ++i) {
      const std::string tag = " u=" + std::to_string(u) + " i=" + std::to_string(i);
      if (i > 1) {
        t.expect(A.multiply(A.H(i - 1), A.L(u, i)) ==
                     sum(A.multiply(A.L(u, i - 1), A.H(i - 1)), A.L(u, i), d),
                 "H_{i-1} L_{u,i}" + tag);
      }
      if (i < n) {
        t.expect(A.multiply(A.H(i), A.L(u, i)) == sum(A.multiply(A.L(u, i + 1), A.H(i)), A.L(u, i + 1), -d),
                 "H_i L_{u,i}" + tag);
        t.expect(A.multiply(A.H(i), A.L(u, i + 1, true)) ==
                     sum(A.multiply(A.L(u, i, true), A.H(i)), A.L(u, i, true), -d),
                 "H_i L^-1_{u,i+1}" + tag);
        t.expect(A.multiply(A.H(i), A.L(u, i, true)) ==
                     sum(A.multiply(A.L(u, i + 1, true), A.H(i)), A.L(u, i, true), d),
                 "H_i L^-1_{u,i}" + tag);
        t.expect(A.multiply(A.multiply(A.H(i), A.L(u, i)), A.H(i)) == A.L(u, i + 1), "H_i L_{u,i} H_i" + tag);
      }
    }
  for (int k = 1; k < n; ++k) {
    HeckeElem sq = A.H(k);
    for (auto& [m, c] : sq) c = d;
    add_term(sq, CoxNormalForm::identity(n), ScalarPoly(1));
    t.expect(A.multiply(A.H(k), A.H(k)) == sq, "quadratic relation k=" + std::to_string(k));
  }
  return t.result("Hecke pull relations");
}

/// Blob slides through crossings, height switches, cap/cup cancellation and
/// free movement of Brauer blobs.
inline CheckResult check_blob_slides(int g = 3, int n = 4) {
  detail::Tally t;
  using BW = BraidWord;
  auto rel = [&](const BW& a, const BW& b, const std::string& what) {
    t.expect(braid_equal_via_embedding(a, b, g, n), what + ": " + a.str() + " = " + b.str());
  };
  for (int u = 1; u <= g; ++u)
    for (int i = 1; i < n; ++i) {
      rel(BW::beta(i) * jm_element(u, i) * BW::beta(i), jm_element(u, i + 1), "slide");
      rel(BW::beta(i, true) * jm_element(u, i, true) * BW::beta(i, true), jm_element(u, i + 1, true), "slide inverse");
      for (int v = 1; v <= g; ++v) {
        auto lhs = jm_element(v, i) * jm_element(u, i + 1);
        if (u <= v) rel(lhs, jm_element(u, i + 1) * jm_element(v, i), "height switch u<=v");
        if (u >= v) rel(lhs, BW::beta(i, true) * jm_element(u, i) * jm_element(v, i + 1) * BW::beta(i), "height switch u>=v");
      }
    }
  for (int u = 1; u <= g; ++u)
    for (int i = 1; i < n; ++i) {
      TLDiagram e(n, n);
      for (int k = 0; k < n; ++k)
        if (k != i - 1 && k != i) e.join(k, n + k);
      e.join(i - 1, i);
      e.join(n + i - 1, n + i);
      TLDiagram dots = TLDiagram::identity(n);
      dots.word[i - 1] = FreeWord::gen(u);
      dots.word[i] = FreeWord::gen(u, true);
      auto below = compose(dots, e), above = compose(e, dots);
      t.expect(below.diagram == e && below.loops.empty(), "dots under a cup u=" + std::to_string(u));
      t.expect(above.diagram == e && above.loops.empty(), "dots over a cap u=" + std::to_string(u));
    }
  std::vector<int> d(g, 2);
  BrauerAlgebra Br(n, CycloParams(g, d));
  for (int u = 1; u <= g; ++u)
    for (int i = 1; i < n; ++i) {
      auto b = [&](int k) { return basis_element(Br.blob(u, k)); };
      auto s = basis_element(Br.s(i)), e = basis_element(Br.e(i));
      const std::string tag = " u=" + std::to_string(u) + " i=" + std::to_string(i);
      t.expect(Br.multiply(b(i), s) == Br.multiply(s, b(i + 1)), "Brauer blob through a crossing" + tag);
      t.expect(Br.multiply(b(i + 1), s) == Br.multiply(s, b(i)), "Brauer blob through a crossing" + tag);
      t.expect(Br.multiply(b(i), e) == Br.multiply(b(i + 1), e), "Brauer blob around a cup" + tag);
      t.expect(Br.multiply(e, b(i)) == Br.multiply(e, b(i + 1)), "Brauer blob around a cap" + tag);
      for (int v = 1; v <= g; ++v) {
        auto c = basis_element(Br.blob(v, i + 1));
        t.expect(Br.multiply(b(i), c) == Br.multiply(c, b(i)), "Brauer blob heights" + tag);
      }
    }
  return t.result("blob slides");
}

inline CheckResult check_relations() {
  std::vector<CheckResult> parts{check_braid_relations(), check_coxeter_relations(), check_jm_relations(),
                                 check_hecke_pull(), check_blob_slides()};
  CheckResult r{"relation suites", true, ""};
  for (auto& p : parts) {
    r.pass = r.pass && p.pass;
    r.detail += (r.detail.empty() ? "" : " | ") + p.name + ": " + p.detail;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Faithfulness of the polynomial action

/// Coxeter normal forms with at most max_factors JM factors of exponent
/// 0 < |a| <= max_exp, times every permutation.
inline std::vector<CoxNormalForm> small_cox_normal_forms(int g, int n, int max_factors, int max_exp) {
  std::vector<CoxNormalForm> out;
  std::vector<FreeWord> strands(n);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      for (auto& w : all_perms(n)) out.push_back({strands, w});
      return;
    }
    rec(i + 1, left);
    if (left == 0) return;
    FreeWord saved = strands[i];
    for (int u = 1; u <= g; ++u) {
      if (!saved.w.empty() && core_of(saved.w.back()) == u) continue;
      for (int a = -max_exp; a <= max_exp; ++a) {
        if (a == 0) continue;
        FreeWord w = saved;
        for (int k = 0; k < std::abs(a); ++k) w.w.push_back(letter(u, a < 0));
        strands[i] = w;
        // same strand again or move on
        std::function<void(int)> more = [&](int l) { rec(i + 1, l); };
        more(left - 1);
        if (left > 1) {
          FreeWord keep = strands[i];
          for (int u2 = 1; u2 <= g; ++u2) {
            if (u2 == u) continue;
            for (int b = -max_exp; b <= max_exp; ++b) {
              if (b == 0) continue;
              FreeWord w2 = keep;
              for (int k = 0; k < std::abs(b); ++k) w2.w.push_back(letter(u2, b < 0));
              strands[i] = w2;
              rec(i + 1, left - 2);
              if (left > 2)
                for (int u3 = 1; u3 <= g; ++u3) {
                  if (u3 == u2) continue;
                  for (int c = -max_exp; c <= max_exp; ++c) {
                    if (c == 0) continue;
                    FreeWord w3 = w2;
                    for (int k = 0; k < std::abs(c); ++k) w3.w.push_back(letter(u3, c < 0));
                    strands[i] = w3;
                    rec(i + 1, left - 3);
                  }
                }
            }
          }
        }
      }
    }
    strands[i] = saved;
  };
  rec(0, max_factors);
  return out;
}

inline CheckResult check_faithfulness() {
  detail::Tally t;
  std::size_t total = 0;
  for (int g = 0; g <= 2; ++g)
    for (int n = 1; n <= 3; ++n) {
      auto forms = small_cox_normal_forms(g, n, 3, 2);
      total += forms.size();
      std::map<std::vector<ActionPoly>, CoxNormalForm> seen;
      for (auto& m : forms) {
        auto [it, fresh] = seen.emplace(action_images(m.to_word(), n), m);
        t.expect(fresh, "g=" + std::to_string(g) + " n=" + std::to_string(n) + ": " + m.str() + " and " +
                            it->second.str() + " act equally");
      }
    }
  return t.result("faithfulness", std::to_string(total) + " normal forms");
}

// ---------------------------------------------------------------------------
// Cell axioms and associativity

inline CheckResult check_cell_axioms() {
  detail::Tally t;
  std::string extra;
  auto run = [&](const auto& d, const std::string& tag) {
    auto r = verify_cell_axioms(d);
    t.expect(r.ok(), tag + ": " + std::to_string(r.violations.size()) + " violations" +
                         (r.ok() ? "" : " (first: " + r.violations[0].generator + " " + r.violations[0].side + " " +
                                            r.violations[0].what + ")"));
  };
  for (int n = 1; n <= 3; ++n)
    for (int c : {0, 5}) {
      RationalField f;
      f.bind[Symbol::circle({})] = c;
      run(brauer_cell_datum(BrauerAlgebra::classical(n), f), "brauer n=" + std::to_string(n) + " c=" + std::to_string(c));
    }
  for (int n = 1; n <= 2; ++n) {
    CycloParams p(1, {2});
    RationalField f;
    f.bind[Symbol::cyclo(1, 1)] = 3;
    f.bind[Symbol::cyclo(1, 2)] = -2;
    detail::bind_bounded_circles(f, p, 7);
    run(blob_cell_datum(BlobAlgebra(n, p), f), "blob g=1 d=(2) n=" + std::to_string(n));
  }
  for (int n = 1; n <= 3; ++n) {
    auto A = std::make_shared<const CycloHecke<PrimeField>>(n, CycloParams(1, {2}), detail::generic_prime_field(1, {2}));
    run(murphy_cell_datum(A), "cyclotomic Hecke g=1 d=(2) n=" + std::to_string(n));
  }
  return t.result("cell axioms");
}

inline CheckResult check_associativity() {
  detail::Tally t;
  auto tag = [](const std::string& k, int g, int n) { return k + " g=" + std::to_string(g) + " n=" + std::to_string(n); };
  for (int g = 0; g <= 2; ++g)
    for (int n = 1; n <= 3; ++n) {
      TLAlgebra A;
      A.g = g;
      A.n = n;
      auto bad = detail::count_nonassociative(A, A.enumerate(g == 0 ? 0 : 1));
      t.expect(bad == 0, tag("tl", g, n) + ": " + std::to_string(bad) + " bad triples");
    }
  for (auto [g, d, nmax] : {std::tuple{0, std::vector<int>{}, 3}, std::tuple{1, std::vector<int>{2}, 3},
                            std::tuple{2, std::vector<int>{2, 2}, 2}})
    for (int n = 1; n <= nmax; ++n) {
      BlobAlgebra A(n, CycloParams(g, d));
      auto bad = detail::count_nonassociative(A, A.enumerate());
      t.expect(bad == 0, tag("blob", g, n) + ": " + std::to_string(bad) + " bad triples");
    }
  for (auto [g, d, nmax] : {std::tuple{0, std::vector<int>{}, 3}, std::tuple{1, std::vector<int>{2}, 2}})
    for (int n = 1; n <= nmax; ++n) {
      BrauerAlgebra A(n, CycloParams(g, d));
      auto bad = detail::count_nonassociative(A, A.enumerate());
      t.expect(bad == 0, tag("brauer", g, n) + ": " + std::to_string(bad) + " bad triples");
    }
  {
    // random triples of JM length <= 2 in H_{g,n}
    std::mt19937 rng(11);
    for (int g = 0; g <= 2; ++g)
      for (int n = 1; n <= 3; ++n) {
        HeckeAlgebra A(g, n);
        auto rand_elem = [&]() {
          BraidWord w;
          int jm = 0;
          const int len = static_cast<int>(rng() % 4);
          for (int k = 0; k < len; ++k) {
            if (g > 0 && jm < 2 && rng() % 2) {
              w.gens.push_back({true, static_cast<int>(rng() % g) + 1, static_cast<bool>(rng() % 2)});
              ++jm;
            } else if (n > 1) {
              w.gens.push_back({false, static_cast<int>(rng() % (n - 1)) + 1, static_cast<bool>(rng() % 2)});
            }
          }
          return A.from_braid(w);
        };
        std::size_t bad = 0;
        for (int trial = 0; trial < 6; ++trial) {
          auto x = rand_elem(), y = rand_elem(), z = rand_elem();
          if (A.multiply(A.multiply(x, y), z) != A.multiply(x, A.multiply(y, z))) ++bad;
        }
        t.expect(bad == 0, tag("hecke", g, n) + ": " + std::to_string(bad) + " bad triples");
      }
  }
  for (int n = 1; n <= 2; ++n) {
    CycloHecke<PrimeField> A(n, CycloParams(1, {2}), detail::generic_prime_field(1, {2}));
    std::size_t bad = 0;
    for (auto& a : A.basis())
      for (auto& b : A.basis())
        for (auto& c : A.basis()) {
          auto va = A.basis_vec(a), vb = A.basis_vec(b), vc = A.basis_vec(c);
          if (A.multiply(A.multiply(va, vb), vc) != A.multiply(va, A.multiply(vb, vc))) ++bad;
        }
    t.expect(bad == 0, tag("cyclotomic hecke", 1, n) + ": " + std::to_string(bad) + " bad triples");
  }
  return t.result("associativity");
}

// ---------------------------------------------------------------------------
// Registries

struct NamedCheck {
  std::string name;
  std::function<CheckResult()> run;
};

/// The eleven acceptance criteria in order.
inline std::vector<NamedCheck> acceptance_checks() {
  return {{"blob-numbers", check_blob_numbers},   {"blob-dims", check_blob_dims},
          {"brauer-dims", check_brauer_dims},     {"hecke-dims", check_hecke_dims},
          {"brauer-example", check_brauer_example}, {"apex-tables", check_apex_tables},
          {"simple-counts", check_simple_counts}, {"relations", check_relations},
          {"faithfulness", check_faithfulness},   {"cell-axioms", check_cell_axioms},
          {"assoc-small", check_associativity}};
}

/// Suites reachable from `hb verify`.
inline std::vector<NamedCheck> verify_suites() {
  auto v = acceptance_checks();
  v.push_back({"braid-relations", [] { return check_braid_relations(); }});
  v.push_back({"coxeter-relations", [] { return check_coxeter_relations(); }});
  v.push_back({"jm-relations", [] { return check_jm_relations(); }});
  v.push_back({"hecke-pull", [] { return check_hecke_pull(); }});
  v.push_back({"blob-slides", [] { return check_blob_slides(); }});
  return v;
}

}  // namespace hb
