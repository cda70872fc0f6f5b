#pragma once
// Cell data for the Temperley-Lieb, blob and Brauer families.

#include <set>
#include <string>
#include <vector>

#include "hb/brauer.hpp"
#include "hb/cellular.hpp"
#include "hb/tl_blob.hpp"

namespace hb {

/// TL_{g,n}; only decorations of total length <= max_len are swept.
template <class F>
CellDatum<F> tl_cell_datum(const TLAlgebra& A, int max_len, F field) {
  DiagramCellSource<FreeWord> src;
  src.n = A.n;
  src.multiply = [A](const TLDiagram& x, const TLDiagram& y) { return A.multiply(x, y); };
  src.normalize = [](const TLDiagram& x) { return basis_element(x); };
  for (int i = 1; i < A.n; ++i) src.generators.push_back({"e" + std::to_string(i), basis_element(A.e(i))});
  for (int u = 1; u <= A.g; ++u) {
    src.generators.push_back({"tau" + std::to_string(u), basis_element(A.coil(u))});
    src.generators.push_back({"tau" + std::to_string(u) + "^-1", basis_element(A.coil(u, true))});
  }
  src.basis = A.enumerate(max_len);
  const int g = A.g;
  src.sandwich_finite = [g](int t) { return g == 0 || t == 0; };
  src.simples = [g](int t) -> std::string {
    if (g == 0 || t == 0) return "1";
    return "simple modules of K[F_" + std::to_string(g) + "]";
  };
  return diagram_cell_datum(src, field);
}

template <class F>
CellDatum<F> blob_cell_datum(const BlobAlgebra& A, F field) {
  DiagramCellSource<MonoidWord> src;
  src.n = A.n;
  src.multiply = [A](const BlobDiagram& x, const BlobDiagram& y) { return A.multiply(x, y); };
  src.normalize = [A](const BlobDiagram& x) { return A.normalize(x); };
  for (int i = 1; i < A.n; ++i) src.generators.push_back({"e" + std::to_string(i), basis_element(A.e(i))});
  for (int u = 1; u <= A.g(); ++u) src.generators.push_back({"b" + std::to_string(u), A.normalize(A.blob(u))});
  src.basis = A.enumerate();
  const int g = A.g();
  std::string one_strand = "1";
  if (g == 1) {
    std::set<typename F::T> betas;
    for (int i = 1; i <= A.params.d[0]; ++i) betas.insert(field.from(A.params.beta(1, i)));
    one_strand = std::to_string(betas.size());
  } else if (g > 1) {
    one_strand = "simple modules of K[B_" + std::to_string(g) + ",1]";
  }
  src.simples = [one_strand](int t) -> std::string { return t == 0 ? "1" : one_strand; };
  return diagram_cell_datum(src, field);
}

/// Brauer and cyclotomic Brauer algebras; the sandwich of lambda holds the
/// permutation of the through strands together with their blob words.
template <class F>
CellDatum<F> brauer_cell_datum(const BrauerAlgebra& A, F field) {
  DiagramCellSource<MonoidWord> src;
  src.n = A.n;
  src.multiply = [A](const BrauerDiagram& x, const BrauerDiagram& y) { return A.multiply(x, y); };
  src.normalize = [A](const BrauerDiagram& x) { return A.normalize(x); };
  for (int i = 1; i < A.n; ++i) src.generators.push_back({"e" + std::to_string(i), basis_element(A.e(i))});
  for (int i = 1; i < A.n; ++i) src.generators.push_back({"s" + std::to_string(i), basis_element(A.s(i))});
  for (int u = 1; u <= A.g(); ++u) src.generators.push_back({"b" + std::to_string(u), A.normalize(A.blob(u))});
  src.basis = A.enumerate();
  const int g = A.g();
  src.simples = [g](int t) -> std::string {
    if (g == 0) return std::to_string(partition_count(t));
    return "simple modules of the cyclotomic wreath sandwich at " + std::to_string(t);
  };
  return diagram_cell_datum(src, field);
}

}  // namespace hb
