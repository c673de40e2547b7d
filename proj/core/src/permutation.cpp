#include "origami/permutation.hpp"

#include <numeric>

#include "origami/error.hpp"

namespace origami {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int m = static_cast<int>(images_.size());
  std::vector<char> seen(m, 0);
  for (int v : images_) {
    if (v < 0 || v >= m || seen[v])
      throw Error(errc::invalid_permutation, "image array is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> img(m);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int m, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(m);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& cyc : cycles) {
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      int from = cyc[j];
      int to = cyc[(j + 1) % cyc.size()];
      if (from < 0 || from >= m || to < 0 || to >= m)
        throw Error(errc::invalid_permutation, "cycle entry out of range");
      img[from] = to;
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation Permutation::operator*(const Permutation& other) const {
  std::vector<int> img(images_.size());
  for (int i = 0; i < size(); ++i) img[i] = images_[other.images_[i]];
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

Permutation Permutation::power(long long e) const {
  Permutation base = e >= 0 ? *this : inverse();
  long long n = e >= 0 ? e : -e;
  Permutation acc = identity(size());
  while (n > 0) {
    if (n & 1) acc = base * acc;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

int Permutation::apply_power(long long e, int i) const {
  if (size() == 0) return i;
  if (e >= 0) {
    for (long long s = 0; s < e; ++s) i = images_[i];
  } else {
    Permutation inv = inverse();
    for (long long s = 0; s < -e; ++s) i = inv.images_[i];
  }
  return i;
}

int Permutation::order() const {
  long long ord = 1;
  for (const auto& cyc : cycles()) ord = lcm_ll(ord, static_cast<long long>(cyc.size()));
  return static_cast<int>(ord);
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      cyc.push_back(j);
      j = images_[j];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

}  // namespace origami
