#pragma once

// Skein evaluation of the action: a flattened braid glued on top of a dotted
// matching, crossings resolved by a local convention, circles evaluated.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "springer/homology.hpp"
#include "springer/permutation.hpp"

namespace springer {

// Layers bottom to top; each is a crossing at position i (1..n-1).
struct FlatTangle {
  int n = 0;
  std::vector<int> crossings;
};

// Word s_{w1} ... s_{wr} acts on M by s_{wr} first, so it sits lowest.
FlatTangle flatten(int n, const std::vector<int>& word);

enum class DotPlacement { None, UpperArc, LowerArc, Both };

struct ResolutionConvention {
  int identity = 1;
  int turnback = 1;
  DotPlacement placement = DotPlacement::None;
  // Drop result terms whose grading differs from the input's.
  bool graded_projection = false;
  // Multiply each resolved diagram D of input M by zeta_sign(M) zeta_sign(D).
  bool orientation_twist = false;
  std::string label() const;
  auto operator<=>(const ResolutionConvention&) const = default;
};

// Coefficients -2..2 for both smoothings, every placement, projection and
// twist off/on.
std::vector<ResolutionConvention> convention_family();

// Resolved diagrams before reduction.
std::map<DottedMatching, Rational> resolve_terms(const DottedMatching& m, const FlatTangle& t,
                                                const ResolutionConvention& c, std::uint64_t seed = 0);
// `seed` shuffles the order in which components are evaluated.
HomClass resolve_evaluate(const DottedMatching& m, const FlatTangle& t, const ResolutionConvention& c,
                          std::uint64_t seed = 0);

struct SkeinCalibration {
  ResolutionConvention convention;
  std::vector<ResolutionConvention> fitting;
  int n_max = 0;
  bool ambiguous() const { return fitting.size() > 1; }
};

// Searches convention_family() for skein_act = act on every standard
// generator and adjacent transposition, n <= n_max. Sets the winner active.
// Throws NoConventionFits.
SkeinCalibration calibrate(int n_max);

void set_active_convention(const ResolutionConvention& c);
void clear_active_convention();
// Throws UncalibratedConvention until calibrate or set_active_convention ran.
ResolutionConvention active_convention();

HomClass skein_act(const Permutation& sigma, const DottedMatching& m);
HomClass skein_act(const std::vector<int>& word, const DottedMatching& m);

}  // namespace springer
