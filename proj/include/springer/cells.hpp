#pragma once

// The two cell decompositions of a component S_a: arc-forest cells c(J) and
// the product cells indexed by free arcs.

#include <vector>

#include "springer/matching.hpp"
#include "springer/subspace.hpp"

namespace springer {

struct ArcForest {
  std::vector<Arc> vertices;                // arcs of a
  std::vector<std::pair<Arc, Arc>> edges;   // (parent, immediately nested child)
  std::vector<Arc> roots;                   // outermost arcs
};

ArcForest arc_forest(const Matching& a);

// One element of E u M: an edge (outer, inner) or a root (outer only).
struct ForestElement {
  bool root = false;
  Arc outer;
  Arc inner;
  bool operator==(const ForestElement&) const = default;
};

struct ForestCell {
  std::vector<ForestElement> J;
  int dimension = 0;  // 2(k - |J|)
};

std::vector<ForestElement> forest_elements(const ArcForest& f);
std::vector<ForestCell> forest_cells(const Matching& a);
// Closure of c(J) inside S_a.
Subspace cell_closure(const Matching& a, const ForestCell& cell);

struct CartesianCell {
  std::vector<Arc> free_arcs;
  int dimension = 0;  // 2 * |free_arcs|
};

std::vector<CartesianCell> cartesian_cells(const Matching& a);
DottedMatching as_dotted(const Matching& a, const CartesianCell& cell);

// Cells of S_a lying in S_a n S_b for b -> a. Throws NotAnArrowPair.
std::vector<ForestCell> subcomplex_cells(const Matching& a, const Matching& b);

// Coefficient of t^d at index d.
template <class Cell>
std::vector<long long> poincare_polynomial(const std::vector<Cell>& cells) {
  std::vector<long long> p;
  for (const auto& c : cells) {
    if (static_cast<int>(p.size()) <= c.dimension) p.resize(c.dimension + 1, 0);
    ++p[c.dimension];
  }
  return p;
}

}  // namespace springer
