#pragma once

// Homology of X_{n-k,k} presented by dotted matchings modulo the Type I, II
// and III relations, reduction to the standard basis, and the cokernel of the
// Mayer-Vietoris map psi^-.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "springer/diagram.hpp"
#include "springer/linalg.hpp"
#include "springer/matching.hpp"

namespace springer {

using linalg::Rational;

// Formal sum of dotted matchings of one type (n-k,k).
class HomClass {
 public:
  HomClass(int n = 0, int k = 0) : n_(n), k_(k) {}
  static HomClass of(const DottedMatching& m, const Rational& c = 1);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::map<DottedMatching, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const DottedMatching& m) const;

  // Throws InhomogeneousClass when terms of different grading are present;
  // nullopt for the zero class.
  std::optional<int> grading() const;
  bool is_integral() const;

  HomClass& add(const DottedMatching& m, const Rational& c);
  HomClass& operator+=(const HomClass& o);
  HomClass& operator-=(const HomClass& o);
  HomClass operator+(const HomClass& o) const { return HomClass(*this) += o; }
  HomClass operator-(const HomClass& o) const { return HomClass(*this) -= o; }
  HomClass operator*(const Rational& c) const;
  bool operator==(const HomClass& o) const { return n_ == o.n_ && k_ == o.k_ && terms_ == o.terms_; }

  // "1·(4: u1-2 u3-4) + 1·(4: u1-4 u2-3)"; "0" for the zero class.
  std::string to_string() const;

 private:
  int n_, k_;
  std::map<DottedMatching, Rational> terms_;
};

HomClass parse_class(const std::string& text);

enum class RelationType { I, II, III };

struct RelationInstance {
  RelationType type;
  HomClass value;
};

std::vector<RelationInstance> typed_relation_instances(int n, int k, int m);
std::vector<HomClass> relation_instances(int n, int k, int m);

// Expresses classes of grading m in the standard basis via row reduction of
// the relation span. Built once per (n,k,m).
class Reducer {
 public:
  Reducer(int n, int k, int m);

  const std::vector<DottedMatching>& basis() const { return basis_; }
  std::vector<Rational> coordinates(const HomClass& x) const;
  // Rank of the relation span inside the space of all dotted matchings.
  std::size_t relation_rank() const { return pivot_rows_.size(); }
  std::size_t generator_count() const { return columns_.size(); }

 private:
  int n_, k_, m_;
  std::vector<DottedMatching> basis_;
  std::vector<DottedMatching> columns_;  // nonstandard first, then basis_
  std::map<DottedMatching, std::size_t> column_of_;
  std::map<std::size_t, linalg::SparseRow> pivot_rows_;  // nonstandard column -> standard expansion
};

const Reducer& reducer(int n, int k, int m);

// Coordinates over standard_basis(n,k,m); the row-reduction answer, checked
// against the rewriting pass.
std::vector<Rational> reduce(const HomClass& x);
HomClass reduce_to_class(const HomClass& x);
// Rewriting with Type I/II on nested dots, then Type III on rays; redexes are
// picked in an order drawn from `seed`.
HomClass reduce_by_rewriting(const HomClass& x, std::uint64_t seed = 0);

// Ranks of H_{2m}, m = 0..k, from the standard basis.
std::vector<long long> betti(int n, int k);

// Image in H_*(S_a) of the class of S_a n S_b whose free circles are the
// circles of aw(b) selected by `free_circles` (bit t = t-th circle by
// smallest vertex). Requires an arrow between a and b in either direction;
// throws NotAnArrowPair.
HomClass pushforward_inclusion(const Matching& a, const Matching& b, std::uint64_t free_circles);

// psi^- images of grading m over all arrow pairs.
std::vector<HomClass> psi_minus_image(int n, int k, int m);

// Cokernel ranks of psi^-, assembled stage by stage along `order` (a linear
// extension of the arrow order); stage t holds the ranks for the union of the
// first t+1 components.
struct Presentation {
  std::vector<long long> ranks;
  std::vector<std::vector<long long>> stages;
};
Presentation presentation(int n, int k, const std::vector<Matching>& order);
std::vector<long long> presentation_betti(int n, int k);

}  // namespace springer
