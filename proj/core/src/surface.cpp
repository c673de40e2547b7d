#include "origami/surface.hpp"

#include <algorithm>
#include <numeric>

#include "origami/error.hpp"

namespace origami {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

mpq_class make_rat(long long num, long long den) {
  mpq_class q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

OrigamiDatum staircase(int g) {
  if (g < 1) throw Error(errc::invalid_genus, "staircase genus must be >= 1");
  const int m = 2 * g - 1;
  std::vector<std::vector<int>> sig, tau;
  for (int i = 0; i + 1 < m; i += 2) sig.push_back({i, i + 1});
  for (int i = 1; i + 1 < m; i += 2) tau.push_back({i, i + 1});
  return OrigamiDatum{m, Permutation::from_cycles(m, sig), Permutation::from_cycles(m, tau)};
}

Surface::Surface(OrigamiDatum datum) : datum_(std::move(datum)) {
  const int m = datum_.m;
  if (m < 1) throw Error(errc::invalid_permutation, "m must be positive");
  if (datum_.sigma.size() != m || datum_.tau.size() != m)
    throw Error(errc::invalid_permutation, "permutation size does not match m");

  // Transitivity of <sigma, tau> on squares.
  {
    UnionFind uf(m);
    for (int i = 0; i < m; ++i) {
      uf.unite(i, datum_.sigma(i));
      uf.unite(i, datum_.tau(i));
    }
    int root = uf.find(0);
    for (int i = 1; i < m; ++i)
      if (uf.find(i) != root)
        throw Error(errc::not_transitive, "<sigma, tau> has more than one orbit");
  }

  right_step_ = datum_.sigma.inverse();
  left_step_ = datum_.sigma;
  up_step_ = datum_.tau;
  down_step_ = datum_.tau.inverse();
  min_shear_ = lcm_ll(datum_.sigma.order(), datum_.tau.order());

  // Corner identifications.  Closed-square corners are indexed 4i + c with
  // c = 0:(0,0), 1:(1,0), 2:(0,1), 3:(1,1).  Gluings:
  //   (i,0,y) ~ (sigma(i),1,y)   and   (i,x,1) ~ (tau(i),x,0).
  UnionFind uf(4 * m);
  for (int i = 0; i < m; ++i) {
    uf.unite(4 * i + 0, 4 * datum_.sigma(i) + 1);
    uf.unite(4 * i + 2, 4 * datum_.sigma(i) + 3);
    uf.unite(4 * i + 2, 4 * datum_.tau(i) + 0);
    uf.unite(4 * i + 3, 4 * datum_.tau(i) + 1);
  }
  corner_rep_.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    int root = uf.find(4 * i);
    for (int j = 0; j <= i; ++j) {
      if (uf.find(4 * j) == root) {
        corner_rep_[i] = j;
        break;
      }
    }
  }
  corner_classes_.clear();
  for (int i = 0; i < m; ++i) {
    if (corner_rep_[i] == i) corner_classes_.push_back({});
  }
  {
    std::vector<int> class_index(m, -1);
    int c = 0;
    for (int i = 0; i < m; ++i)
      if (corner_rep_[i] == i) class_index[i] = c++;
    for (int i = 0; i < m; ++i) corner_classes_[class_index[corner_rep_[i]]].push_back(i);
  }

  const int classes = corner_class_count();
  if ((2 + m - classes) % 2 != 0)
    throw Error(errc::invalid_permutation, "Euler characteristic is odd");
  genus_ = (2 + m - classes) / 2;
}

SurfacePoint Surface::canonical(int square, const mpq_class& x, const mpq_class& y) const {
  SurfacePoint p{square, x, y};
  if (p.x == 0 && p.y == 0) p.square = corner_rep_[p.square];
  return p;
}

SurfacePoint Surface::corner_point(int square) const {
  return SurfacePoint{corner_rep_[square], mpq_class(0), mpq_class(0)};
}

TorusPoint Surface::covering_map(const SurfacePoint& p) const { return TorusPoint{p.x, p.y}; }

std::vector<SurfacePoint> Surface::fibre(const TorusPoint& q) const {
  std::vector<SurfacePoint> out;
  if (q.x == 0 && q.y == 0) {
    for (const auto& cls : corner_classes_)
      out.push_back(SurfacePoint{cls.front(), mpq_class(0), mpq_class(0)});
  } else {
    for (int i = 0; i < datum_.m; ++i) out.push_back(SurfacePoint{i, q.x, q.y});
  }
  return out;
}

std::vector<GridPoint> Surface::grid_points_int(int n) const {
  std::vector<GridPoint> out;
  out.reserve(static_cast<std::size_t>(datum_.m) * n * n);
  for (int i = 0; i < datum_.m; ++i)
    for (int px = 0; px < n; ++px)
      for (int py = 0; py < n; ++py) {
        if (px == 0 && py == 0 && corner_rep_[i] != i) continue;
        out.push_back(GridPoint{i, px, py});
      }
  return out;
}

std::vector<SurfacePoint> Surface::grid_points(int n) const {
  std::vector<SurfacePoint> out;
  for (const auto& g : grid_points_int(n)) out.push_back(from_grid(g, n));
  return out;
}

GridPoint Surface::canonical_grid(int square, int px, int py) const {
  GridPoint g{square, px, py};
  if (px == 0 && py == 0) g.square = corner_rep_[square];
  return g;
}

SurfacePoint Surface::from_grid(const GridPoint& g, int n) const {
  return SurfacePoint{g.square, make_rat(g.px, n), make_rat(g.py, n)};
}

GridPoint Surface::to_grid(const SurfacePoint& p, int n) const {
  mpq_class sx = p.x * n, sy = p.y * n;
  if (sx.get_den() != 1 || sy.get_den() != 1)
    throw Error(errc::vertex_not_found, "point is not on the requested grid");
  return canonical_grid(p.square, static_cast<int>(sx.get_num().get_si()),
                        static_cast<int>(sy.get_num().get_si()));
}

std::vector<GridPoint> Surface::grid_neighbors(int n, const GridPoint& p) const {
  std::vector<GridPoint> raw;
  raw.reserve(4);
  // right / left / up / down, crossing gluings at the square boundary
  raw.push_back(p.px + 1 < n ? GridPoint{p.square, p.px + 1, p.py}
                             : canonical_grid(right_step_(p.square), 0, p.py));
  raw.push_back(p.px - 1 >= 0 ? canonical_grid(p.square, p.px - 1, p.py)
                              : GridPoint{left_step_(p.square), n - 1, p.py});
  raw.push_back(p.py + 1 < n ? GridPoint{p.square, p.px, p.py + 1}
                             : canonical_grid(up_step_(p.square), p.px, 0));
  raw.push_back(p.py - 1 >= 0 ? canonical_grid(p.square, p.px, p.py - 1)
                              : GridPoint{down_step_(p.square), p.px, n - 1});
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::erase(raw, p);
  return raw;
}

std::vector<SurfacePoint> Surface::metric_neighbors(int n, const SurfacePoint& p) const {
  std::vector<SurfacePoint> out;
  for (const auto& g : grid_neighbors(n, to_grid(p, n))) out.push_back(from_grid(g, n));
  return out;
}

std::string SurfacePoint::str() const {
  return std::to_string(square) + ":" + x.get_num().get_str() + "/" + x.get_den().get_str() +
         ":" + y.get_num().get_str() + "/" + y.get_den().get_str();
}

}  // namespace origami
