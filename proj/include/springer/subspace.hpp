#pragma once

// Subspaces of (S^2)^n cut out by relations x_i = +-x_j and pins x_i = +-p.
// Stored as a union-find over slots with a sign to the parent and an optional
// pin on each root.

#include <string>
#include <vector>

#include "springer/matching.hpp"

namespace springer {

class Subspace {
 public:
  explicit Subspace(int n = 0);

  int n() const { return n_; }
  bool empty() const { return empty_; }

  // x_i = sign * x_j; sign is +1 or -1.
  void relate(int i, int j, int sign);
  // x_i = value * p; value is +1 or -1.
  void pin(int i, int value);

  int free_classes() const;
  int dimension() const { return empty_ ? -1 : 2 * free_classes(); }

  Subspace intersect(const Subspace& other) const;
  // other is a subset of *this.
  bool contains(const Subspace& other) const;

  Subspace gamma() const;
  Subspace eta(int target_n) const;
  Subspace iota(int target_n) const;

  // Per slot: pin value (+1/-1) or 0 with the smallest slot of the class and
  // the relative sign. Unique for a given point set.
  struct Slot {
    int pin = 0;
    int rep = 0;
    int sign = 1;
    bool operator==(const Slot&) const = default;
  };
  std::vector<Slot> canonical() const;

  bool operator==(const Subspace& o) const;
  std::string to_string() const;  // e.g. "(x1, x1, -p, p)"

 private:
  // Root of i and the sign s with x_i = s * x_root.
  std::pair<int, int> find(int i) const;
  // Image under y_{dest[i]} = scale[i] * x_i with the given pins on new slots.
  Subspace transport(int target_n, const std::vector<int>& dest, const std::vector<int>& scale,
                     const std::vector<std::pair<int, int>>& new_pins) const;

  int n_;
  bool empty_ = false;
  std::vector<int> parent_;
  std::vector<int> sign_;  // x_i = sign_[i] * x_parent
  std::vector<int> pin_;   // on roots: 0 free, +-1 pinned
};

enum class Variant { Plain, Primed };

Subspace subspace_of(const Matching& a, Variant v = Variant::Plain);

}  // namespace springer
