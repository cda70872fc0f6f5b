#pragma once
// Decorated matchings: composition with loop extraction and canonical keys.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hb/freegroup.hpp"

namespace hb {

/// A matching of nb bottom and nt top points whose strands carry words.
///
/// Points are labelled 0..nb-1 (bottom, left to right) followed by
/// nb..nb+nt-1 (top, left to right). Each strand is read from its origin,
/// the endpoint coming first on the clapped line b1..bn, tm..t1: bottom to
/// top for through strands, left to right for caps, right to left for cups.
/// The word is stored at the origin.
template <class Word>
struct Diagram {
  int nb = 0, nt = 0;
  std::vector<int> mate;
  std::vector<Word> word;

  Diagram() = default;
  Diagram(int b, int t) : nb(b), nt(t), mate(b + t, -1), word(b + t) {}

  static Diagram identity(int n) {
    Diagram d(n, n);
    for (int i = 0; i < n; ++i) d.join(i, n + i);
    return d;
  }

  int size() const { return nb + nt; }
  int bot(int i) const { return i; }
  int top(int j) const { return nb + j; }
  bool is_bottom(int p) const { return p < nb; }
  bool is_through(int p) const { return is_bottom(p) != is_bottom(mate[p]); }

  /// Position on the line b1..bn, tm..t1 obtained by unfolding the top row.
  int clapped_pos(int p) const { return p < nb ? p : nb + (nt - 1 - (p - nb)); }
  bool is_origin(int p) const { return clapped_pos(p) < clapped_pos(mate[p]); }

  /// Match a and b; w is read starting from a.
  void join(int a, int b, Word w = Word::one()) {
    if (a == b || mate[a] != -1 || mate[b] != -1) throw std::invalid_argument("point already matched");
    mate[a] = b;
    mate[b] = a;
    if (is_origin(a)) word[a] = std::move(w);
    else word[b] = std::move(w).reversed();
  }

  /// Word read starting from endpoint p.
  Word read_from(int p) const { return is_origin(p) ? word[p] : word[mate[p]].reversed(); }
  void set_from(int p, const Word& w) {
    if (is_origin(p)) word[p] = w;
    else word[mate[p]] = w.reversed();
  }

  int through_count() const {
    int t = 0;
    for (int i = 0; i < nb; ++i) t += is_through(i);
    return t;
  }

  void validate() const {
    if ((nb + nt) % 2 != 0) throw std::invalid_argument("odd number of points");
    for (int p = 0; p < size(); ++p) {
      int o = mate[p];
      if (o < 0 || o >= size() || o == p || mate[o] != p) throw std::invalid_argument("not a perfect matching");
      if (!is_origin(p) && !word[p].is_one()) throw std::invalid_argument("word stored at non-origin endpoint");
    }
  }

  bool is_planar() const {
    std::vector<std::pair<int, int>> arcs;
    for (int p = 0; p < size(); ++p)
      if (p < mate[p]) {
        int a = clapped_pos(p), b = clapped_pos(mate[p]);
        arcs.push_back({std::min(a, b), std::max(a, b)});
      }
    for (auto& [a, b] : arcs)
      for (auto& [c, d] : arcs)
        if (a < c && c < b && b < d) return false;
    return true;
  }

  /// Whether the strand through p is nested inside another arc on the clapped line.
  bool is_nested(int p) const {
    int a = clapped_pos(p), b = clapped_pos(mate[p]);
    if (a > b) std::swap(a, b);
    for (int r = 0; r < size(); ++r) {
      int c = clapped_pos(r), d = clapped_pos(mate[r]);
      if (c < d && c < a && b < d) return true;
    }
    return false;
  }

  /// Vertical mirror: bottom and top swap, every word keeps its letters in
  /// place, so it is read backwards from the new origin.
  Diagram star() const {
    Diagram s(nt, nb);
    auto img = [&](int p) { return p < nb ? nt + p : p - nb; };
    for (int p = 0; p < size(); ++p)
      if (is_origin(p)) s.join(img(p), img(mate[p]), word[p]);
    return s;
  }

  /// Canonical byte key; injective on diagrams.
  std::vector<std::int32_t> key() const {
    std::vector<std::int32_t> k{nb, nt};
    for (int p = 0; p < size(); ++p) {
      k.push_back(mate[p]);
      if (is_origin(p)) {
        k.push_back(static_cast<std::int32_t>(word[p].w.size()));
        k.insert(k.end(), word[p].w.begin(), word[p].w.end());
      }
    }
    return k;
  }

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.nb == b.nb && a.nt == b.nt && a.mate == b.mate && a.word == b.word;
  }
  friend bool operator<(const Diagram& a, const Diagram& b) {
    if (a.nb != b.nb) return a.nb < b.nb;
    if (a.nt != b.nt) return a.nt < b.nt;
    if (a.mate != b.mate) return a.mate < b.mate;
    return a.word < b.word;
  }
};

template <class Word>
struct Composite {
  Diagram<Word> diagram;
  std::vector<Word> loops;  // read along the orientation induced by the origins
};

/// Stack `upper` on top of `lower`; words concatenate along strands.
template <class Word>
Composite<Word> compose(const Diagram<Word>& lower, const Diagram<Word>& upper) {
  if (lower.nt != upper.nb) throw std::invalid_argument("boundary mismatch in composition");
  const int nb = lower.nb, m = lower.nt, nt = upper.nt;
  Composite<Word> out{Diagram<Word>(nb, nt), {}};
  std::vector<char> mid_seen(m, 0);

  // Walk from (in_lower, point) until an outer boundary point is reached.
  auto walk = [&](bool in_lower, int p, Word& acc) -> std::pair<bool, int> {
    for (;;) {
      const Diagram<Word>& d = in_lower ? lower : upper;
      acc = acc * d.read_from(p);
      int o = d.mate[p];
      if (in_lower) {
        if (o < nb) return {true, o};
        int k = o - nb;
        mid_seen[k] = 1;
        in_lower = false;
        p = k;
      } else {
        if (o >= m) return {false, o};
        mid_seen[o] = 1;
        in_lower = true;
        p = nb + o;
      }
    }
  };

  std::vector<char> done(nb + nt, 0);
  for (int c = 0; c < nb + nt; ++c) {
    if (done[c]) continue;
    bool in_lower = c < nb;
    int p = in_lower ? c : m + (c - nb);
    Word acc = Word::one();
    auto [end_lower, q] = walk(in_lower, p, acc);
    int e = end_lower ? q : nb + (q - m);
    done[c] = done[e] = 1;
    out.diagram.join(c, e, acc);
  }

  for (int k = m - 1; k >= 0; --k) {
    if (mid_seen[k]) continue;
    // start at the rightmost unvisited middle point and go down first
    const bool along = (lower.clapped_pos(nb + k) % 2) == 0;
    Word acc = Word::one();
    bool in_lower = true;
    int p = nb + k;
    for (;;) {
      const Diagram<Word>& d = in_lower ? lower : upper;
      acc = acc * d.read_from(p);
      int o = d.mate[p];
      int mid = in_lower ? o - nb : o;
      mid_seen[mid] = 1;
      if (mid == k) break;
      in_lower = !in_lower;
      p = in_lower ? nb + mid : mid;
    }
    out.loops.push_back(along ? acc : acc.reversed());
  }
  return out;
}

/// Multiset of canonical loop keys, sorted.
template <class Word>
std::vector<ConjKey> loop_bag(const std::vector<Word>& loops) {
  std::vector<ConjKey> bag;
  for (auto& w : loops) bag.push_back(conj_key(w));
  std::sort(bag.begin(), bag.end());
  return bag;
}

}  // namespace hb
