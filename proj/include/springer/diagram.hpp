#pragma once

// Gluing of two matchings, the arrow order, distances, minimal move
// sequences and meet elements.

#include <cstdint>
#include <optional>
#include <vector>

#include "springer/matching.hpp"

namespace springer {

// Ends of a line in aw(b): Up is a ray of a, Down a ray of b.
enum class End { Up, Down };

struct Component {
  bool circle = false;
  std::vector<int> vertices;  // ascending
  End first_end = End::Up;    // lines only
  End second_end = End::Up;
};

struct GluedOneManifold {
  int n = 0;
  std::vector<Component> components;
  std::vector<int> component_of;  // vertex -> index into components (slot 0 unused)

  int size() const { return static_cast<int>(components.size()); }
  int circle_count() const;
  int line_count() const { return size() - circle_count(); }
};

GluedOneManifold glue(const Matching& a, const Matching& b);
bool compatible(const Matching& a, const Matching& b);

enum class MoveKind { Quadruple, Triple };

// A single arrow from `source` to `target`. Quadruple: (i,j),(k,l) in the
// source become (i,l),(j,k). Triple: ray i and arc (j,k) become arc (i,j)
// and ray k (l unused).
struct ArrowMove {
  MoveKind kind = MoveKind::Quadruple;
  int i = 0, j = 0, k = 0, l = 0;
};

std::vector<std::pair<Matching, ArrowMove>> arrow_moves_from(const Matching& a);
std::vector<Matching> arrow_successors(const Matching& a);
// The move taking `source` to `target`, if source -> target.
std::optional<ArrowMove> arrow_between(const Matching& source, const Matching& target);

enum class TieBreak { Lex, ReverseLex, Random };

// Arrow graph on B^{n-k,k} with all-pairs undirected distances and the
// reflexive-transitive closure of the arrows. Built once per (n,k).
class ArrowGraph {
 public:
  ArrowGraph(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<Matching>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t index(const Matching& m) const;

  const std::vector<std::size_t>& successors(std::size_t a) const { return succ_[a]; }
  const std::vector<std::size_t>& predecessors(std::size_t a) const { return pred_[a]; }

  // -1 when disconnected.
  int distance(std::size_t a, std::size_t b) const { return dist_[a * size() + b]; }
  // a -> ... -> b, including a == b.
  bool precedes_or_equal(std::size_t a, std::size_t b) const { return reach_[a * size() + b]; }
  std::vector<std::size_t> shortest_path(std::size_t a, std::size_t b) const;

  // Kahn traversal: a -> b puts a first.
  std::vector<Matching> linear_order(TieBreak tie = TieBreak::Lex, std::uint64_t seed = 0) const;

 private:
  int n_, k_;
  std::vector<Matching> nodes_;
  std::vector<std::vector<std::size_t>> succ_, pred_;
  std::vector<int> dist_;
  std::vector<char> reach_;
};

// Shared, lazily built graph for (n,k); thread safe.
const ArrowGraph& arrow_graph(int n, int k);

std::vector<Matching> linear_order(int n, int k, TieBreak tie = TieBreak::Lex, std::uint64_t seed = 0);

// nullopt when disconnected. For compatible pairs, cross-checked against
// n-k-|aw(b)|.
std::optional<int> distance(const Matching& a, const Matching& b);

struct MoveSequence {
  std::vector<Matching> steps;  // a_0 .. a_m
  std::vector<bool> forward;    // forward[t]: a_t -> a_{t+1}; else a_t <- a_{t+1}
  bool certified = true;        // false when produced by plain search

  int length() const { return static_cast<int>(forward.size()); }
};

MoveSequence minimal_sequence(const Matching& a, const Matching& b);

// c with c <= a, c <= b in the arrow order and d(a,b) = d(a,c) + d(c,b).
Matching meet(const Matching& a, const Matching& b);

}  // namespace springer
