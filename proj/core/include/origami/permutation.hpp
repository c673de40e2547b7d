#pragma once

#include <cstdint>
#include <vector>

namespace origami {

// Permutation of {0, ..., m-1}, stored as the image array.
class Permutation {
public:
  Permutation() = default;
  // Throws InvalidPermutation unless `images` is a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int m);
  // Product of disjoint cycles given as index lists, e.g. {{0,1},{2,3}}.
  static Permutation from_cycles(int m, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  // (a * b)(i) = a(b(i))
  Permutation operator*(const Permutation& other) const;
  // p^e for any integer e (negative powers via the inverse).
  Permutation power(long long e) const;
  // Image of i under p^e without building the power.
  int apply_power(long long e, int i) const;

  int order() const;
  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const { return static_cast<int>(cycles().size()); }

  bool operator==(const Permutation& other) const = default;

private:
  std::vector<int> images_;
};

long long lcm_ll(long long a, long long b);

}  // namespace origami
