#pragma once
// Partitions, tableaux and the Murphy cell datum of cyclotomic Hecke algebras.

#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hb/cellular.hpp"
#include "hb/hecke.hpp"

namespace hb {

using Partition = std::vector<int>;
using Tableau = std::vector<std::vector<int>>;  // rows of 0-based entries

/// Partitions of n, most dominant first in reverse lexicographic order.
inline std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int max) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, max); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// Whether a dominates b (partial sums of a are at least those of b).
inline bool dominates(const Partition& a, const Partition& b) {
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

inline std::string partition_str(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

/// lambda_i - lambda_{i+1} < e for all i; e <= 0 stands for infinity.
inline bool e_restricted(const Partition& p, int e) {
  if (e <= 0) return true;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] - (i + 1 < p.size() ? p[i + 1] : 0) >= e) return false;
  return true;
}

inline Tableau canonical_tableau(const Partition& p) {
  Tableau t;
  int k = 0;
  for (int r : p) {
    t.emplace_back();
    for (int j = 0; j < r; ++j) t.back().push_back(k++);
  }
  return t;
}

inline std::vector<Tableau> standard_tableaux(const Partition& p) {
  std::vector<Tableau> out;
  const int n = std::accumulate(p.begin(), p.end(), 0);
  Tableau cur(p.size());
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t r = 0; r < p.size(); ++r) {
      const int len = static_cast<int>(cur[r].size());
      if (len == p[r]) continue;
      if (r > 0 && static_cast<int>(cur[r - 1].size()) <= len) continue;
      cur[r].push_back(k);
      rec(k + 1);
      cur[r].pop_back();
    }
  };
  rec(0);
  return out;
}

/// Permutations preserving the rows of the canonical tableau.
inline std::vector<Perm> row_stabilizer(const Partition& p) {
  const int n = std::accumulate(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  auto t = canonical_tableau(p);
  std::vector<int> row(n);
  for (std::size_t r = 0; r < t.size(); ++r)
    for (int x : t[r]) row[x] = static_cast<int>(r);
  for (auto& w : all_perms(n)) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = row[w.p[i]] == row[i];
    if (ok) out.push_back(w);
  }
  return out;
}

/// d(T): the permutation sending each entry of the canonical tableau to the
/// entry of T in the same box; it is the shortest element of its coset.
inline Perm tableau_perm(const Tableau& t, const Partition& p) {
  auto c = canonical_tableau(p);
  const int n = std::accumulate(p.begin(), p.end(), 0);
  Perm d = Perm::identity(n);
  for (std::size_t r = 0; r < t.size(); ++r)
    for (std::size_t j = 0; j < t[r].size(); ++j) d.p[c[r][j]] = t[r][j];
  for (std::size_t r = 0; r < c.size(); ++r)
    for (std::size_t j = 0; j + 1 < c[r].size(); ++j)
      if (d.left_descent(c[r][j] + 1)) throw std::logic_error("tableau permutation is not distinguished");
  return d;
}

/// Murphy datum c^lambda_{S,M,T} = H_{d(S)^-1} M x_lambda H_{d(T)} on a cyclotomic
/// Hecke algebra, with M running over the bounded JM monomials and
/// x_lambda = sum over the row stabilizer of q^{l(w)} H_w. Cells of more
/// dominant shape lie below.
template <class F>
CellDatum<F> murphy_cell_datum(std::shared_ptr<const CycloHecke<F>> A) {
  using T = typename F::T;
  using Vec = typename CycloHecke<F>::Vec;
  const int n = A->n;
  const F& f = A->field;
  const auto parts = partitions(n);

  std::vector<CoxNormalForm> monos;
  for (auto& m : A->basis())
    if (m.w.is_identity()) monos.push_back(m);
  std::stable_partition(monos.begin(), monos.end(), [](const CoxNormalForm& m) {
    for (auto& s : m.strand)
      if (!s.w.empty()) return false;
    return true;
  });

  auto hw = [&](const Perm& w) {
    CoxNormalForm m = CoxNormalForm::identity(n);
    m.w = w;
    return A->basis_vec(m);
  };
  const T q = f.from(q_poly());

  struct Row {
    CellLabel label;
    Vec v;
  };
  std::vector<Row> rows;
  CellDatum<F> d{f};
  for (std::size_t li = 0; li < parts.size(); ++li) {
    const auto& lam = parts[li];
    d.lambda_names.push_back(partition_str(lam));
    Vec x;
    for (auto& w : row_stabilizer(lam)) {
      T c = f.one();
      for (int k = 0; k < w.length(); ++k) c = f.mul(c, q);
      for (auto& [col, a] : hw(w)) x[col] = f.add(x.count(col) ? x[col] : f.zero(), f.mul(a, c));
    }
    auto tabs = standard_tableaux(lam);
    std::vector<Vec> downs, ups;
    for (auto& t : tabs) {
      Perm dt = tableau_perm(t, lam);
      downs.push_back(hw(dt.inverse()));
      ups.push_back(hw(dt));
    }
    d.bottoms.emplace_back();
    d.tops.emplace_back();
    d.sandwich.emplace_back();
    d.sandwich_finite.push_back(true);
    for (std::size_t i = 0; i < tabs.size(); ++i) {
      d.bottoms.back().push_back({static_cast<std::int32_t>(i)});
      d.tops.back().push_back({static_cast<std::int32_t>(i)});
    }
    for (std::size_t m = 0; m < monos.size(); ++m) {
      d.sandwich.back().push_back({static_cast<std::int32_t>(m)});
      Vec mx = A->multiply(A->basis_vec(monos[m]), x);
      for (std::size_t i = 0; i < tabs.size(); ++i) {
        Vec left = A->multiply(downs[i], mx);
        for (std::size_t j = 0; j < tabs.size(); ++j) {
          CellLabel l{static_cast<int>(li), {static_cast<std::int32_t>(i)}, {static_cast<std::int32_t>(m)},
                      {static_cast<std::int32_t>(j)}};
          rows.push_back({l, A->multiply(left, ups[j])});
        }
      }
    }
  }

  const auto& basis = A->basis();
  if (rows.size() != basis.size()) throw std::runtime_error("Murphy labels do not match the basis size");
  std::map<CoxNormalForm, std::size_t> col;
  for (std::size_t i = 0; i < basis.size(); ++i) col.emplace(basis[i], i);
  std::vector<std::vector<T>> C(rows.size(), std::vector<T>(basis.size(), f.zero()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (auto& [c, a] : rows[r].v) C[r][col.at(c.m)] = a;
  auto inv = std::make_shared<std::vector<std::vector<T>>>(inverse_over(f, C));
  if (inv->empty()) throw std::runtime_error("Murphy elements are not linearly independent");

  auto labels = std::make_shared<std::vector<CellLabel>>();
  auto vecs = std::make_shared<std::map<CellLabel, Vec>>();
  for (auto& r : rows) {
    labels->push_back(r.label);
    vecs->emplace(r.label, r.v);
  }
  auto col_ptr = std::make_shared<std::map<CoxNormalForm, std::size_t>>(std::move(col));
  auto coords = [f, inv, labels, col_ptr](const Vec& v) {
    std::vector<T> y(labels->size(), f.zero());
    for (auto& [c, a] : v) {
      const auto& row = (*inv)[col_ptr->at(c.m)];
      for (std::size_t k = 0; k < y.size(); ++k) y[k] = f.add(y[k], f.mul(a, row[k]));
    }
    CellVec<F> out;
    for (std::size_t k = 0; k < y.size(); ++k)
      if (!f.is_zero(y[k])) out.emplace((*labels)[k], y[k]);
    return out;
  };

  std::vector<Vec> gens;
  for (int u = 1; u <= A->params.g; ++u) {
    CoxNormalForm m = CoxNormalForm::identity(n);
    m.strand[0] = FreeWord::gen(u);
    gens.push_back(A->basis_vec(m));
    d.generator_names.push_back("tau" + std::to_string(u));
  }
  for (int k = 1; k < n; ++k) {
    gens.push_back(hw(Perm::s(n, k)));
    d.generator_names.push_back("H" + std::to_string(k));
  }

  d.sweep = *labels;
  d.below = [parts](int a, int b) { return a != b && dominates(parts[a], parts[b]); };
  d.left = [A, gens, vecs, coords](int x, const CellLabel& l) { return coords(A->multiply(gens[x], vecs->at(l))); };
  d.right = [A, gens, vecs, coords](int x, const CellLabel& l) { return coords(A->multiply(vecs->at(l), gens[x])); };
  d.mul = [A, vecs, coords](const CellLabel& a, const CellLabel& b) {
    return coords(A->multiply(vecs->at(a), vecs->at(b)));
  };
  const int g = A->params.g;
  d.simples = [g](int) -> std::string { return g == 0 ? "1" : "simple modules of L_{g,n} H_lambda"; };
  return d;
}

/// Partitions of n that are apexes of the Hecke algebra H_n at [e]_q = 0, by
/// Murphy Gram ranks over F_p with q a primitive 2e-th root of unity.
inline std::vector<Partition> hecke_apexes(int n, int e) {
  PrimeField f;
  if (e >= 2) f = root_of_unity_field(e);
  else f.vals[Symbol::q()] = 2;
  auto A = std::make_shared<const CycloHecke<PrimeField>>(n, CycloParams(0, {}), f);
  auto d = murphy_cell_datum(A);
  auto parts = partitions(n);
  std::vector<Partition> out;
  for (auto& g : apex_report(d))
    if (g.apex) out.push_back(parts[g.lambda]);
  return out;
}

}  // namespace hb
