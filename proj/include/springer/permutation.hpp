#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace springer {

// A permutation of {1..n}, stored by images: image(i) = sigma(i).
// Composition follows function composition: (a * b)(i) = a(b(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);
  explicit Permutation(std::vector<int> images);

  static Permutation transposition(int n, int i, int j);
  static Permutation adjacent(int n, int i) { return transposition(n, i, i + 1); }
  // Product s_{w_1} * s_{w_2} * ... * s_{w_r}.
  static Permutation from_word(int n, const std::vector<int>& word);
  // Canonical representative of a cycle type (consecutive cycles).
  static Permutation of_cycle_type(const std::vector<int>& cycle_type);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  int sign() const;
  std::vector<int> cycle_type() const;  // weakly decreasing

  // A reduced word w with *this == from_word(n, w).
  std::vector<int> reduced_word() const;

  // "2-1-3-4": image notation, used as a cache key.
  std::string key() const;
  std::string cycle_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// Accepts cycle notation "(1 2 3)(4 5)" or adjacent-transposition words
// "s1 s2"; whitespace-insensitive. Throws Error(SyntaxError) or
// Error(SizeMismatch) when a letter exceeds n.
Permutation parse_permutation(std::string_view text, int n);

// All partitions of n, each weakly decreasing, in lexicographic order
// (1^n first, (n) last).
std::vector<std::vector<int>> partitions_of(int n);

}  // namespace springer
