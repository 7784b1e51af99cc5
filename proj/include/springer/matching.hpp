#pragma once

// Noncrossing matchings of type (n-k, k), their dotted decorations, the
// completion/restriction pair and the bijection with standard tableaux.
// Vertices are 1-indexed throughout.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace springer {

struct Arc {
  int left = 0;
  int right = 0;
  auto operator<=>(const Arc&) const = default;
};

class Matching {
 public:
  Matching() = default;

  // Validating constructor; throws Error with the violated invariant.
  static Matching from_parts(int n, std::vector<Arc> arcs, std::vector<int> rays);
  // All-rays matching on n vertices.
  static Matching rays_only(int n);

  int n() const { return n_; }
  int k() const { return static_cast<int>(arcs_.size()); }
  int ray_count() const { return n_ - 2 * k(); }

  // 0 when v carries a ray.
  int partner(int v) const { return partner_[v - 1]; }
  bool is_ray(int v) const { return partner_[v - 1] == 0; }
  bool has_arc(int i, int j) const { return i != j && partner(i) == j; }

  const std::vector<Arc>& arcs() const { return arcs_; }  // sorted by left endpoint
  std::vector<int> rays() const;                          // ascending
  // Arc containing vertex v (v must not be a ray).
  Arc arc_at(int v) const;
  // Number of arcs strictly covering the given arc.
  int depth(const Arc& a) const;
  // Innermost arc strictly covering `a`, if any.
  std::optional<Arc> parent(const Arc& a) const;

  std::string key() const;  // codec text with every arc undotted

  bool operator==(const Matching& o) const { return n_ == o.n_ && arcs_ == o.arcs_; }
  std::strong_ordering operator<=>(const Matching& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    return arcs_ <=> o.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<int> partner_;
  std::vector<Arc> arcs_;
};

class DottedMatching {
 public:
  DottedMatching() = default;
  // `dotted` lists arcs by their left endpoints; throws DotOnNonArc.
  DottedMatching(Matching base, const std::vector<int>& dotted_left_endpoints);
  static DottedMatching all_dotted(const Matching& base);
  static DottedMatching all_undotted(const Matching& base);

  const Matching& base() const { return base_; }
  int n() const { return base_.n(); }
  int k() const { return base_.k(); }

  bool is_dotted(const Arc& a) const { return (dotted_ >> (a.left - 1)) & 1U; }
  bool is_dotted_at(int v) const;  // rays count as dotted
  std::vector<Arc> dotted_arcs() const;
  std::vector<Arc> undotted_arcs() const;

  // Number of undotted arcs; the class lives in homological degree 2m.
  int grading() const;

  DottedMatching with_dot(const Arc& a, bool dotted) const;

  bool is_standard() const;

  bool operator==(const DottedMatching& o) const = default;
  std::strong_ordering operator<=>(const DottedMatching& o) const {
    if (auto c = base_ <=> o.base_; c != 0) return c;
    return dotted_ <=> o.dotted_;
  }

 private:
  Matching base_;
  std::uint64_t dotted_ = 0;  // bit (left - 1) set for dotted arcs
};

// Unchecked input as read from a user or a file.
struct RawMatching {
  int n = 0;
  std::vector<std::pair<int, int>> undotted;
  std::vector<std::pair<int, int>> dotted;
  std::vector<int> rays;
};

DottedMatching validate(const RawMatching& raw);

// B^{n-k,k} in lexicographic order of sorted arc lists. Throws DomainError
// unless 0 <= k <= n/2.
std::vector<Matching> enumerate(int n, int k);

// Completion: rays become arcs to n-2k new vertices on the left.
Matching complete(const Matching& a);
DottedMatching complete(const DottedMatching& m);  // new arcs dotted
// Restriction of a matching on 2(n-k) vertices back to n vertices with k arcs.
// Throws NotInRestrictableSet if an arc lies inside the first n-2k vertices.
Matching restrict_to(const Matching& completed, int k_target);

struct StandardTableau {
  std::vector<int> top;
  std::vector<int> bottom;

  int n() const { return static_cast<int>(top.size() + bottom.size()); }
  int m() const { return static_cast<int>(bottom.size()); }
  // Rows increasing, columns increasing, shape (n-m, m) with n-m >= m.
  bool is_valid() const;
  auto operator<=>(const StandardTableau&) const = default;
};

// SYT(n-m, m) ordered lexicographically by bottom row.
std::vector<StandardTableau> standard_tableaux(int n, int m);
long long syt_count(int n, int m);  // C(n,m) - C(n,m-1)
long long binomial(int n, int r);

StandardTableau tableau_of(const DottedMatching& standard);
DottedMatching matching_of(const StandardTableau& t, int k);
DottedMatching standard_layout(const std::vector<Arc>& undotted, int n, int k);

// Standard dotted matchings of type (n-k,k) with m undotted arcs, ordered by
// their tableaux.
std::vector<DottedMatching> standard_basis(int n, int k, int m);
// Every dotted matching of type (n-k,k) with m undotted arcs.
std::vector<DottedMatching> all_dotted_matchings(int n, int k, int m);

// Matching grammar: "<n>: item+" with items u<i>-<j>, d<i>-<j>, r<i>.
DottedMatching parse_matching(std::string_view text);
std::string format(const DottedMatching& m);

}  // namespace springer
