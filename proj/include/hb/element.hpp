#pragma once
// Finite linear combinations over the scalar ring.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hb/scalar.hpp"

namespace hb {

template <class K>
using Element = std::map<K, ScalarPoly>;

template <class K>
void add_term(Element<K>& e, const K& k, const ScalarPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = e.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

template <class K>
void add_into(Element<K>& acc, const Element<K>& x, const ScalarPoly& scale = ScalarPoly(1)) {
  for (auto& [k, c] : x) add_term(acc, k, c * scale);
}

template <class K>
Element<K> basis_element(const K& k) {
  Element<K> e;
  e.emplace(k, ScalarPoly(1));
  return e;
}

template <class K>
Element<K> operator-(const Element<K>& a, const Element<K>& b) {
  Element<K> r = a;
  add_into(r, b, ScalarPoly(-1));
  return r;
}

template <class K>
Element<K> specialize(const Element<K>& e, const Bindings& b) {
  Element<K> r;
  for (auto& [k, c] : e) add_term(r, k, specialize(c, b));
  return r;
}

/// Bilinear extension of a product on basis keys.
template <class K, class BasisMul>
Element<K> multiply(const Element<K>& x, const Element<K>& y, BasisMul&& mul) {
  Element<K> r;
  for (auto& [a, ca] : x)
    for (auto& [b, cb] : y) add_into(r, mul(a, b), ca * cb);
  return r;
}

/// Linear combination of words, used for cyclotomic expansions.
template <class W>
using LinComb = std::vector<std::pair<W, ScalarPoly>>;

}  // namespace hb
