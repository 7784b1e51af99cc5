#include "springer/cells.hpp"

#include "springer/diagram.hpp"
#include "springer/error.hpp"

namespace springer {

ArcForest arc_forest(const Matching& a) {
  ArcForest f;
  f.vertices = a.arcs();
  for (const auto& arc : a.arcs()) {
    if (auto p = a.parent(arc))
      f.edges.emplace_back(*p, arc);
    else
      f.roots.push_back(arc);
  }
  return f;
}

std::vector<ForestElement> forest_elements(const ArcForest& f) {
  std::vector<ForestElement> out;
  for (const auto& [p, c] : f.edges) out.push_back({false, p, c});
  for (const auto& r : f.roots) out.push_back({true, r, {}});
  return out;
}

std::vector<ForestCell> forest_cells(const Matching& a) {
  auto elems = forest_elements(arc_forest(a));
  const int k = static_cast<int>(elems.size());
  std::vector<ForestCell> out;
  for (unsigned mask = 0; mask < (1U << k); ++mask) {
    ForestCell c;
    for (int i = 0; i < k; ++i)
      if ((mask >> i) & 1U) c.J.push_back(elems[i]);
    c.dimension = 2 * (k - static_cast<int>(c.J.size()));
    out.push_back(std::move(c));
  }
  return out;
}

Subspace cell_closure(const Matching& a, const ForestCell& cell) {
  Subspace s = subspace_of(a);
  for (const auto& e : cell.J) {
    if (e.root)
      s.pin(e.outer.left, e.outer.left % 2 ? -1 : 1);
    else
      s.relate(e.outer.left, e.inner.left, 1);
  }
  return s;
}

std::vector<CartesianCell> cartesian_cells(const Matching& a) {
  const auto& arcs = a.arcs();
  const int k = a.k();
  std::vector<CartesianCell> out;
  for (unsigned mask = 0; mask < (1U << k); ++mask) {
    CartesianCell c;
    for (int i = 0; i < k; ++i)
      if ((mask >> i) & 1U) c.free_arcs.push_back(arcs[i]);
    c.dimension = 2 * static_cast<int>(c.free_arcs.size());
    out.push_back(std::move(c));
  }
  return out;
}

DottedMatching as_dotted(const Matching& a, const CartesianCell& cell) {
  std::vector<int> dotted;
  for (const auto& arc : a.arcs()) {
    bool free = false;
    for (const auto& f : cell.free_arcs) free |= f == arc;
    if (!free) dotted.push_back(arc.left);
  }
  return DottedMatching(a, dotted);
}

std::vector<ForestCell> subcomplex_cells(const Matching& a, const Matching& b) {
  auto mv = arrow_between(b, a);
  if (!mv) throw Error(ErrorCode::NotAnArrowPair, "no arrow from the second matching to the first");
  ForestElement designated;
  if (mv->kind == MoveKind::Quadruple)
    designated = {false, {mv->i, mv->l}, {mv->j, mv->k}};
  else
    designated = {true, {mv->i, mv->j}, {}};
  std::vector<ForestCell> out;
  for (auto& c : forest_cells(a))
    for (const auto& e : c.J)
      if (e == designated) {
        out.push_back(c);
        break;
      }
  return out;
}

}  // namespace springer
