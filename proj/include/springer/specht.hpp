#pragma once

// Two-row tabloid module U_{n-m,m}: tabloids keyed by their bottom-row set,
// polytabloids e_T, matching vectors e_M, the map zeta and the shift f.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "springer/homology.hpp"
#include "springer/linalg.hpp"
#include "springer/matching.hpp"
#include "springer/permutation.hpp"

namespace springer {

// Bit i-1 stands for vertex i.
using TabloidKey = std::uint64_t;

TabloidKey tabloid_key(const std::vector<int>& bottom);
std::vector<int> tabloid_set(TabloidKey key);

class TabloidVector {
 public:
  TabloidVector(int n = 0, int m = 0) : n_(n), m_(m) {}
  static TabloidVector single(int n, const std::vector<int>& bottom);

  int n() const { return n_; }
  int m() const { return m_; }
  const std::map<TabloidKey, Rational>& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  Rational coefficient(const std::vector<int>& bottom) const;

  TabloidVector& add(TabloidKey key, const Rational& c);
  TabloidVector& operator+=(const TabloidVector& o);
  TabloidVector& operator-=(const TabloidVector& o);
  TabloidVector operator+(const TabloidVector& o) const { return TabloidVector(*this) += o; }
  TabloidVector operator-(const TabloidVector& o) const { return TabloidVector(*this) -= o; }
  TabloidVector operator*(const Rational& c) const;
  // Zero vectors compare equal regardless of m.
  bool operator==(const TabloidVector& o) const;

  // Dense row over tabloid_keys(n, m).
  linalg::Row dense() const;
  std::string to_string() const;  // "v{2,4} - v{1,4}"

 private:
  int n_, m_;
  std::map<TabloidKey, Rational> coords_;
};

// All m-subsets of {1..n} in increasing key order.
const std::vector<TabloidKey>& tabloid_keys(int n, int m);

TabloidVector permute(const Permutation& sigma, const TabloidVector& v);
TabloidVector polytabloid(const StandardTableau& t);
TabloidVector matching_vector(const DottedMatching& m);
// zeta(M) = zeta_sign(M) e_M: every undotted arc is read from its even end.
// Plain e_M does not kill Type I relations.
int zeta_sign(const DottedMatching& m);
TabloidVector zeta(const HomClass& x);
TabloidVector f_embed(const TabloidVector& v, int padding);

struct ModuleComparison {
  bool equal = false;
  std::size_t rank_tableaux = 0;
  std::size_t rank_matchings = 0;
  linalg::Matrix matchings_in_tableaux;  // row i: e_{M_i} over {e_T}
  linalg::Matrix tableaux_in_matchings;  // row i: e_{T_i} over {e_M}
};

ModuleComparison modules_equal(int n, int m, int k);

// Irreducible character of S_n by Murnaghan-Nakayama.
long long irr_character(const std::vector<int>& shape, const std::vector<int>& cycle_type);

}  // namespace springer
