#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

#include "origami/permutation.hpp"

namespace origami {

// (num, den) -> canonical rational
mpq_class make_rat(long long num, long long den);

// Square-tiled surface datum: m unit squares, left side of square i glued to
// the right side of square sigma(i), top side of i to the bottom side of
// tau(i).  <sigma, tau> must act transitively on {0..m-1}.
struct OrigamiDatum {
  int m = 1;
  Permutation sigma;
  Permutation tau;
};

// Staircase of genus g on 2g-1 squares: sigma = (0 1)(2 3)..., tau = (1 2)(3 4)...
// Throws InvalidGenus if g < 1.
OrigamiDatum staircase(int g);

struct TorusPoint {
  mpq_class x, y;  // in [0,1)
  auto operator<=>(const TorusPoint&) const = default;
};

// Canonical point of the surface: half-open square coordinates; a corner
// (x = y = 0) always carries the minimal square index of its corner class.
struct SurfacePoint {
  int square = 0;
  mpq_class x, y;
  auto operator<=>(const SurfacePoint&) const = default;
  std::string str() const;  // "sq:xnum/xden:ynum/yden"
};

// Grid point at an implicit denominator n: exact coordinates (px/n, py/n).
struct GridPoint {
  int square = 0;
  int px = 0, py = 0;
  auto operator<=>(const GridPoint&) const = default;
};

class Surface {
public:
  // validate_datum: checks the permutations and transitivity, derives the
  // corner classes (union-find over the 4m closed-square corners) and genus.
  explicit Surface(OrigamiDatum datum);

  const OrigamiDatum& datum() const { return datum_; }
  int m() const { return datum_.m; }
  const Permutation& right_step() const { return right_step_; }  // sigma^{-1}
  const Permutation& left_step() const { return left_step_; }    // sigma
  const Permutation& up_step() const { return up_step_; }        // tau
  const Permutation& down_step() const { return down_step_; }    // tau^{-1}

  // Minimal square index of the corner class of square i.
  int corner_rep(int i) const { return corner_rep_[i]; }
  const std::vector<std::vector<int>>& corner_classes() const { return corner_classes_; }
  int corner_class_count() const { return static_cast<int>(corner_classes_.size()); }
  int genus() const { return genus_; }

  // Smallest admissible shear parameter: lcm(ord sigma, ord tau) (1 for m=1).
  long long min_shear() const { return min_shear_; }
  bool k_admissible(long long k) const {
    return k >= 1 && (datum_.m == 1 || k % min_shear_ == 0);
  }

  // Canonical representative; pre: x, y in [0,1).
  SurfacePoint canonical(int square, const mpq_class& x, const mpq_class& y) const;
  // The corner point containing square 0's class (global fixed point of the action).
  SurfacePoint corner_point(int square = 0) const;

  TorusPoint covering_map(const SurfacePoint& p) const;
  // All preimages of q, canonical; size m off (0,0), corner_class_count at it.
  std::vector<SurfacePoint> fibre(const TorusPoint& q) const;

  // All canonical grid points (i, p/n, q/n); count = m n^2 - (m - #classes).
  std::vector<SurfacePoint> grid_points(int n) const;
  std::vector<GridPoint> grid_points_int(int n) const;

  // The <=4 distinct grid neighbours of p at denominator n (p excluded).
  std::vector<SurfacePoint> metric_neighbors(int n, const SurfacePoint& p) const;
  std::vector<GridPoint> grid_neighbors(int n, const GridPoint& p) const;

  GridPoint canonical_grid(int square, int px, int py) const;
  SurfacePoint from_grid(const GridPoint& g, int n) const;
  // Exact conversion; throws if p is not on the denominator-n grid.
  GridPoint to_grid(const SurfacePoint& p, int n) const;

private:
  OrigamiDatum datum_;
  Permutation right_step_, left_step_, up_step_, down_step_;
  std::vector<int> corner_rep_;
  std::vector<std::vector<int>> corner_classes_;
  int genus_ = 1;
  long long min_shear_ = 1;
};

}  // namespace origami
