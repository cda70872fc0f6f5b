#pragma once
// Sandwich cell data: axiom sweeps, pairing matrices, apexes and simple counts.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "hb/diagram.hpp"
#include "hb/element.hpp"
#include "hb/field.hpp"

namespace hb {

using CellKey = std::vector<std::int32_t>;

/// c^lambda_{D,b,U}; the pieces are opaque keys owned by the datum.
struct CellLabel {
  int lambda = 0;
  CellKey D, b, U;
  auto operator<=>(const CellLabel&) const = default;
};

template <class F>
using CellVec = std::map<CellLabel, typename F::T>;

template <class F>
struct CellDatum {
  using T = typename F::T;
  F field;
  std::vector<std::string> lambda_names;
  std::function<bool(int, int)> below;        // strictly below in the cell order
  std::vector<std::vector<CellKey>> bottoms;  // M_lambda
  std::vector<std::vector<CellKey>> tops;     // N_lambda
  std::vector<std::vector<CellKey>> sandwich; // basis of the sandwiched algebra, identity first
  std::vector<bool> sandwich_finite;
  std::vector<CellLabel> sweep;               // labels visited by the axiom sweep
  std::vector<std::string> generator_names;
  std::function<CellVec<F>(int, const CellLabel&)> left, right;
  std::function<CellVec<F>(const CellLabel&, const CellLabel&)> mul;
  std::function<std::map<CellKey, T>(int, const CellKey&, const CellKey&)> sandwich_mul;  // optional
  std::function<std::string(int)> simples;
};

struct CellViolation {
  std::string generator, side, what;
  CellLabel label;
};

struct CellReport {
  std::size_t checked = 0;
  std::vector<CellViolation> violations;
  bool ok() const { return violations.empty(); }
};

namespace detail {

template <class F>
using Proj = std::map<std::pair<CellKey, CellKey>, typename F::T>;

template <class F>
void proj_add(const F& f, Proj<F>& p, const std::pair<CellKey, CellKey>& k, const typename F::T& a) {
  if (f.is_zero(a)) return;
  auto [it, fresh] = p.emplace(k, a);
  if (!fresh) {
    it->second = f.add(it->second, a);
    if (f.is_zero(it->second)) p.erase(it);
  }
}

}  // namespace detail

/// Checks the cell multiplication rule for every generator on both sides:
/// x c_{D,b,U} stays in cell lambda or below, keeps U, and its lambda part does
/// not depend on U (mirrored for the right action). With a sandwich product it
/// also checks that the lambda part for (D,b) is the one for (D,1) times b.
template <class F>
CellReport verify_cell_axioms(const CellDatum<F>& d) {
  using T = typename F::T;
  const F& f = d.field;
  CellReport rep;
  const int ng = static_cast<int>(d.generator_names.size());

  for (int side = 0; side < 2; ++side) {
    const bool left = side == 0;
    const std::string side_name = left ? "left" : "right";
    for (int x = 0; x < ng; ++x) {
      std::map<CellLabel, detail::Proj<F>> projs;
      auto project = [&](const CellLabel& c) -> const detail::Proj<F>& {
        auto it = projs.find(c);
        if (it != projs.end()) return it->second;
        detail::Proj<F> p;
        CellVec<F> v = left ? d.left(x, c) : d.right(x, c);
        for (auto& [l, a] : v) {
          if (l.lambda == c.lambda) {
            if (left ? l.U != c.U : l.D != c.D)
              rep.violations.push_back({d.generator_names[x], side_name, left ? "changes U" : "changes D", c});
            detail::proj_add(f, p, left ? std::pair(l.D, l.b) : std::pair(l.b, l.U), a);
          } else if (!d.below(l.lambda, c.lambda)) {
            rep.violations.push_back({d.generator_names[x], side_name, "leaves the ideal below", c});
          }
        }
        return projs.emplace(c, std::move(p)).first->second;
      };

      // outer piece (U for left, D for right) must not matter
      std::map<std::tuple<int, CellKey, CellKey>, std::pair<CellLabel, detail::Proj<F>>> seen;
      for (auto& c : d.sweep) {
        ++rep.checked;
        const auto& p = project(c);
        auto key = left ? std::tuple(c.lambda, c.D, c.b) : std::tuple(c.lambda, c.b, c.U);
        auto it = seen.find(key);
        if (it == seen.end()) seen.emplace(key, std::pair(c, p));
        else if (it->second.second != p)
          rep.violations.push_back({d.generator_names[x], side_name, left ? "depends on U" : "depends on D", c});

        if (!d.sandwich_mul) continue;
        const CellKey& one = d.sandwich[c.lambda].front();
        if (c.b == one) continue;
        CellLabel base = c;
        base.b = one;
        detail::Proj<F> expect;
        for (auto& [k, a] : project(base)) {
          auto prod = left ? d.sandwich_mul(c.lambda, k.second, c.b) : d.sandwich_mul(c.lambda, c.b, k.first);
          for (auto& [m, s] : prod)
            detail::proj_add(f, expect, left ? std::pair(k.first, m) : std::pair(m, k.second), f.mul(a, s));
        }
        if (expect != project(c))
          rep.violations.push_back({d.generator_names[x], side_name, "not compatible with the sandwich product", c});
      }
    }
  }
  return rep;
}

struct GramReport {
  int lambda = 0;
  std::string name;
  std::size_t m = 0;
  std::string sandwich_dim;
  std::size_t rank = 0;
  bool apex = false;
  std::string simples;
  bool consistent = true;  // all lambda terms landed on (D0, ., U0)
  std::vector<std::vector<std::string>> matrix;  // rows U, columns (D, sandwich key)
};

/// Sandwich element as "a + a*b3 + ...", indices into the sandwich basis.
template <class F>
std::string sandwich_str(const CellDatum<F>& d, int lambda, const std::map<CellKey, typename F::T>& x) {
  const auto& basis = d.sandwich[lambda];
  std::string s;
  for (auto& [k, a] : x) {
    auto pos = std::find(basis.begin(), basis.end(), k) - basis.begin();
    if (!s.empty()) s += " + ";
    s += d.field.str(a);
    if (pos != 0) s += "*b" + std::to_string(pos);
  }
  return s.empty() ? "0" : s;
}

/// Pairing of tops against bottoms through c_{D0,1,U} c_{D,1,U0}; the matrix
/// records the sandwich coefficients of each product.
template <class F>
GramReport gram(const CellDatum<F>& d, int lambda) {
  using T = typename F::T;
  const F& f = d.field;
  GramReport g;
  g.lambda = lambda;
  g.name = d.lambda_names[lambda];
  const auto& bots = d.bottoms[lambda];
  const auto& tps = d.tops[lambda];
  g.m = bots.size();
  g.sandwich_dim = d.sandwich_finite[lambda] ? std::to_string(d.sandwich[lambda].size()) : "inf";
  if (bots.empty() || tps.empty()) return g;
  const CellKey& one = d.sandwich[lambda].front();
  const CellKey &D0 = bots.front(), &U0 = tps.front();

  std::vector<std::vector<std::map<CellKey, T>>> phi(tps.size(), std::vector<std::map<CellKey, T>>(bots.size()));
  std::set<CellKey> cols;
  for (std::size_t i = 0; i < tps.size(); ++i)
    for (std::size_t j = 0; j < bots.size(); ++j) {
      auto v = d.mul({lambda, D0, one, tps[i]}, {lambda, bots[j], one, U0});
      for (auto& [l, a] : v) {
        if (l.lambda != lambda) continue;
        if (l.D != D0 || l.U != U0) g.consistent = false;
        phi[i][j][l.b] = a;
        cols.insert(l.b);
      }
    }
  std::vector<std::vector<T>> mat(tps.size());
  for (std::size_t i = 0; i < tps.size(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < bots.size(); ++j) {
      for (auto& c : cols) {
        auto it = phi[i][j].find(c);
        mat[i].push_back(it == phi[i][j].end() ? f.zero() : it->second);
      }
      row.push_back(sandwich_str(d, lambda, phi[i][j]));
    }
    g.matrix.push_back(std::move(row));
  }
  g.rank = cols.empty() ? 0 : rank_over(f, mat);
  g.apex = g.rank > 0;
  g.simples = g.apex && d.simples ? d.simples(lambda) : "-";
  return g;
}

template <class F>
std::vector<GramReport> apex_report(const CellDatum<F>& d) {
  std::vector<GramReport> out;
  for (int l = 0; l < static_cast<int>(d.lambda_names.size()); ++l)
    if (!d.bottoms[l].empty()) out.push_back(gram(d, l));
  return out;
}

/// A copy of the datum whose bottom pieces are relabelled (first two swapped)
/// for cells with a single chosen top, which breaks the U-independence.
template <class F>
CellDatum<F> corrupt_datum(const CellDatum<F>& d) {
  CellDatum<F> c = d;
  auto fix = [d](CellLabel l) {
    const auto& bots = d.bottoms[l.lambda];
    if (bots.size() < 2 || d.tops[l.lambda].empty() || l.U != d.tops[l.lambda].front()) return l;
    if (l.D == bots[0]) l.D = bots[1];
    else if (l.D == bots[1]) l.D = bots[0];
    return l;
  };
  auto relabel = [fix](const CellVec<F>& v) {
    CellVec<F> r;
    for (auto& [l, a] : v) r.emplace(fix(l), a);
    return r;
  };
  c.left = [d, fix, relabel](int x, const CellLabel& l) { return relabel(d.left(x, fix(l))); };
  c.right = [d, fix, relabel](int x, const CellLabel& l) { return relabel(d.right(x, fix(l))); };
  c.mul = [d, fix, relabel](const CellLabel& a, const CellLabel& b) { return relabel(d.mul(fix(a), fix(b))); };
  return c;
}

// ---------------------------------------------------------------------------
// Diagram algebras: D = bottom half, b = through strands, U = top half

template <class Word>
struct CellPieces {
  int lambda = 0;
  Diagram<Word> D, b, U;
};

template <class Word>
CellPieces<Word> split_diagram(const Diagram<Word>& d) {
  std::vector<int> bots, tops;
  for (int i = 0; i < d.nb; ++i)
    if (d.is_through(i)) bots.push_back(i);
  for (int j = 0; j < d.nt; ++j)
    if (d.is_through(d.nb + j)) tops.push_back(j);
  const int t = static_cast<int>(bots.size());
  CellPieces<Word> c{t, Diagram<Word>(d.nb, t), Diagram<Word>(t, t), Diagram<Word>(t, d.nt)};
  for (int p = 0; p < d.nb; ++p)
    if (!d.is_through(p) && d.is_origin(p)) c.D.join(p, d.mate[p], d.word[p]);
  for (int j = 0; j < d.nt; ++j) {
    int p = d.nb + j;
    if (!d.is_through(p) && d.is_origin(p)) c.U.join(t + j, t + (d.mate[p] - d.nb), d.word[p]);
  }
  for (int k = 0; k < t; ++k) {
    int j = d.mate[bots[k]] - d.nb;
    int m = static_cast<int>(std::find(tops.begin(), tops.end(), j) - tops.begin());
    c.D.join(bots[k], d.nb + k);
    c.b.join(k, t + m, d.read_from(bots[k]));
    c.U.join(m, t + j);
  }
  return c;
}

template <class Word>
Diagram<Word> assemble(const Diagram<Word>& D, const Diagram<Word>& b, const Diagram<Word>& U) {
  return compose(compose(D, b).diagram, U).diagram;
}

/// Inputs for a diagram algebra datum: products, a normal form for middle
/// pieces, generators, and a (possibly truncated) basis to sweep.
template <class Word>
struct DiagramCellSource {
  int n = 0;
  std::function<Element<Diagram<Word>>(const Diagram<Word>&, const Diagram<Word>&)> multiply;
  std::function<Element<Diagram<Word>>(const Diagram<Word>&)> normalize;
  std::vector<std::pair<std::string, Element<Diagram<Word>>>> generators;
  std::vector<Diagram<Word>> basis;
  std::function<bool(int)> sandwich_finite;
  std::function<std::string(int)> simples;  // indexed by the number of through strands
};

template <class F, class Word>
CellDatum<F> diagram_cell_datum(const DiagramCellSource<Word>& src, F field) {
  using T = typename F::T;
  using Dg = Diagram<Word>;
  auto pieces = std::make_shared<std::map<CellKey, Dg>>();
  const int n = src.n;

  auto label_of = [pieces](const Dg& x) {
    auto c = split_diagram(x);
    CellLabel l{c.lambda, c.D.key(), c.b.key(), c.U.key()};
    pieces->emplace(l.D, c.D);
    pieces->emplace(l.b, c.b);
    pieces->emplace(l.U, c.U);
    return l;
  };
  auto build = [pieces](const CellLabel& l) { return assemble(pieces->at(l.D), pieces->at(l.b), pieces->at(l.U)); };
  auto convert = [label_of, field](const Element<Dg>& e, const T& scale, CellVec<F>& out) {
    for (auto& [x, c] : e) {
      T a = field.mul(scale, field.from(c));
      if (field.is_zero(a)) continue;
      auto [it, fresh] = out.emplace(label_of(x), a);
      if (!fresh) {
        it->second = field.add(it->second, a);
        if (field.is_zero(it->second)) out.erase(it);
      }
    }
  };

  CellDatum<F> d{field};
  for (int t = 0; t <= n; ++t) d.lambda_names.push_back(std::to_string(t));
  d.below = [](int a, int b) { return a < b; };
  d.bottoms.resize(n + 1);
  d.tops.resize(n + 1);
  d.sandwich.resize(n + 1);
  d.sandwich_finite.resize(n + 1);
  std::vector<std::set<CellKey>> sb(n + 1), st(n + 1), ss(n + 1);
  for (auto& x : src.basis) {
    CellLabel l = label_of(x);
    d.sweep.push_back(l);
    if (sb[l.lambda].insert(l.D).second) d.bottoms[l.lambda].push_back(l.D);
    if (st[l.lambda].insert(l.U).second) d.tops[l.lambda].push_back(l.U);
    ss[l.lambda].insert(l.b);
  }
  for (int t = 0; t <= n; ++t) {
    CellKey one = Dg::identity(t).key();
    if (ss[t].empty()) continue;
    d.sandwich[t].push_back(one);
    for (auto& k : ss[t])
      if (k != one) d.sandwich[t].push_back(k);
    d.sandwich_finite[t] = src.sandwich_finite ? src.sandwich_finite(t) : true;
  }
  for (auto& [name, x] : src.generators) d.generator_names.push_back(name);

  auto gens = src.generators;
  auto mulf = src.multiply;
  d.left = [=](int x, const CellLabel& l) {
    CellVec<F> out;
    Dg c = build(l);
    for (auto& [g, a] : gens[x].second) convert(mulf(g, c), field.from(a), out);
    return out;
  };
  d.right = [=](int x, const CellLabel& l) {
    CellVec<F> out;
    Dg c = build(l);
    for (auto& [g, a] : gens[x].second) convert(mulf(c, g), field.from(a), out);
    return out;
  };
  d.mul = [=](const CellLabel& a, const CellLabel& b) {
    CellVec<F> out;
    convert(mulf(build(a), build(b)), field.one(), out);
    return out;
  };
  if (src.normalize) {
    auto norm = src.normalize;
    d.sandwich_mul = [=](int, const CellKey& a, const CellKey& b) {
      std::map<CellKey, T> out;
      for (auto& [x, c] : norm(compose(pieces->at(a), pieces->at(b)).diagram)) {
        T v = field.from(c);
        if (field.is_zero(v)) continue;
        pieces->emplace(x.key(), x);
        out[x.key()] = v;
      }
      return out;
    };
  }
  d.simples = src.simples;
  return d;
}

/// Number of partitions of k.
inline long partition_count(int k) {
  std::vector<long> p(k + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= k; ++part)
    for (int s = part; s <= k; ++s) p[s] += p[s - part];
  return p[k];
}

}  // namespace hb
