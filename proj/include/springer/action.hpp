#pragma once

// The graded S_n action on H_*(X_{n-k,k}) through zeta, its cross-check
// through line diagrams in H_*((S^2)^n), representation matrices and the
// local action chart.

#include <map>
#include <string>
#include <vector>

#include "springer/homology.hpp"
#include "springer/linalg.hpp"
#include "springer/permutation.hpp"
#include "springer/specht.hpp"

namespace springer {

// sigma . x = zeta^{-1}(sigma zeta(x)), returned over the standard basis.
HomClass act(const Permutation& sigma, const HomClass& x);

// Column j holds the coordinates of act(sigma, standard_basis(n,k,m)[j]).
linalg::Matrix rep_matrix(const Permutation& sigma, int n, int k, int m);

// Sign attached to the free position of one endpoint of an undotted arc in
// gamma_*. Parity: `sign` on the odd end. Endpoint: `sign` on the left end.
struct GammaConvention {
  enum class Key { Parity, Endpoint };
  Key key = Key::Parity;
  int sign = -1;
  std::string label() const;
  auto operator<=>(const GammaConvention&) const = default;
};

// Classes of H_*((S^2)^n): free-position sets (as tabloid keys) to coefficients.
struct LineDiagramClass {
  int n = 0;
  std::map<TabloidKey, Rational> terms;
  bool operator==(const LineDiagramClass&) const = default;
};

LineDiagramClass gamma_push(const DottedMatching& m, const GammaConvention& c);
LineDiagramClass permute(const Permutation& sigma, const LineDiagramClass& x);

struct GammaCalibration {
  GammaConvention convention;
  std::vector<GammaConvention> fitting;
  int n_max = 0;
};

// Tries both keys and both signs against act on standard generators and
// adjacent transpositions, n <= n_max. Throws NoConventionFits.
GammaCalibration calibrate_gamma(int n_max);
// calibrate_gamma(4), computed once.
const GammaCalibration& gamma_calibration();

// Throws PullbackFailed if the permuted class leaves the image of gamma_*.
HomClass act_via_gamma(const Permutation& sigma, const DottedMatching& standard);
HomClass act_via_gamma(const Permutation& sigma, const DottedMatching& standard, const GammaConvention& c);

enum class ChartCase {
  BothDottedArcs = 1,
  UndottedArc = 2,
  DottedUndottedPair = 3,
  BothUndottedPair = 4,
  BothRays = 5,
  RayDottedArc = 6,
  RayUndottedArc = 7,
};

std::string_view case_description(ChartCase c);
ChartCase classify(const DottedMatching& m, int i);

struct ChartEntry {
  ChartCase kind;
  int i;
  DottedMatching input;
  HomClass output;
};

struct Chart {
  int n = 0, k = 0;
  std::vector<ChartEntry> entries;
  std::vector<std::string> failures;  // violated anchors
  bool ok() const { return failures.empty(); }
};

// s_i on every standard generator of type (n-k,k), classified by the local
// configuration at i, i+1.
Chart derive_chart(int n, int k);

struct CharacterReport {
  int n = 0, k = 0;
  // traces[m][c]: trace over conjugacy class partitions_of(n)[c].
  std::vector<std::vector<long long>> traces;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

CharacterReport character_table_check(int n, int k);

}  // namespace springer
