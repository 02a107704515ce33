#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lorentz/linalg.hpp"
#include "lorentz/polynomial.hpp"
#include "lorentz/rational.hpp"

namespace lorentz {

inline bool lex_less(const Vec& a, const Vec& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

/// Rational polytope in V-representation, ambient dimension <= 4.
/// Canonical storage: the extreme points of the convex hull, sorted
/// lexicographically, so equal polytopes compare equal.
class Polytope {
 public:
  Polytope(int dim, std::vector<Vec> points) : dim_(dim) {
    if (dim < 1 || dim > 4) throw input_error("polytope dimension must be in 1..4");
    if (points.empty()) throw input_error("polytope needs at least one vertex");
    for (const auto& p : points)
      if (p.size() != dim) throw input_error("polytope vertex dimension mismatch");
    vertices_ = canonicalize(points);
  }

  int dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return vertices_; }

  bool operator==(const Polytope& other) const {
    if (dim_ != other.dim_ || vertices_.size() != other.vertices_.size()) return false;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (vertices_[i] != other.vertices_[i]) return false;
    return true;
  }

  Vec vertex_centroid() const {
    Vec c = Vec::Zero(dim_);
    for (const auto& v : vertices_) c += v;
    return c / Rational(static_cast<long>(vertices_.size()));
  }

 private:
  static std::vector<Vec> canonicalize(std::vector<Vec> points);

  int dim_;
  std::vector<Vec> vertices_;
};

inline int affine_rank(const std::vector<Vec>& points) {
  if (points.size() <= 1) return 0;
  Mat diff(static_cast<Eigen::Index>(points.size() - 1), points[0].size());
  for (std::size_t i = 1; i < points.size(); ++i)
    diff.row(static_cast<Eigen::Index>(i - 1)) = (points[i] - points[0]).transpose();
  return rank_of(diff);
}

namespace hull {

struct Facet {
  std::vector<int> vertex_ids;  // sorted, n of them
  Vec normal;                   // outward: normal . x <= offset inside
  Rational offset;
};

/// Hyperplane through the given points, oriented away from `inside`.
inline std::optional<Facet> facet_through(const std::vector<Vec>& pts,
                                          const std::vector<int>& ids, const Vec& inside) {
  const int n = static_cast<int>(pts[0].size());
  Mat diff(n - 1, n);
  for (int i = 1; i < n; ++i) diff.row(i - 1) = (pts[ids[i]] - pts[ids[0]]).transpose();
  Mat ns = nullspace_of(diff);
  if (ns.cols() != 1) return std::nullopt;  // affinely dependent
  Facet f;
  f.vertex_ids = ids;
  std::sort(f.vertex_ids.begin(), f.vertex_ids.end());
  f.normal = ns.col(0);
  f.offset = f.normal.dot(pts[ids[0]]);
  Rational side = f.normal.dot(inside);
  if (side > f.offset) {
    f.normal = -f.normal;
    f.offset = -f.offset;
  } else if (side == f.offset) {
    return std::nullopt;
  }
  return f;
}

inline Rational simplex_volume(const std::vector<Vec>& pts, const std::vector<int>& base,
                               const Vec& apex) {
  const int n = static_cast<int>(apex.size());
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.col(i) = pts[base[i]] - apex;
  Rational det = m.determinant();
  return lorentz::abs(det) / factorial(n);
}

struct Result {
  Rational volume;
  std::vector<Facet> boundary;
};

/// Beneath-beyond over deduplicated lex-sorted full-dimensional points.
/// Lex order makes every genuinely new point an extreme point of the
/// processed prefix, so it is strictly outside the tracked hull and sees
/// at least one facet strictly; points inside or on the boundary are
/// skipped (they are never vertices of the full hull).
inline Result incremental_hull(const std::vector<Vec>& pts, int n) {
  Result out;
  // Greedy affinely independent seed simplex, in lex order.
  std::vector<int> seed{0};
  std::vector<bool> used(pts.size(), false);
  used[0] = true;
  for (std::size_t i = 1; i < pts.size() && static_cast<int>(seed.size()) < n + 1; ++i) {
    std::vector<Vec> trial;
    for (int k : seed) trial.push_back(pts[k]);
    trial.push_back(pts[i]);
    if (affine_rank(trial) == static_cast<int>(seed.size())) {
      seed.push_back(static_cast<int>(i));
      used[i] = true;
    }
  }
  if (static_cast<int>(seed.size()) != n + 1)
    throw internal_error("incremental_hull: input is not full-dimensional");

  Vec interior = Vec::Zero(n);
  for (int k : seed) interior += pts[k];
  interior /= Rational(n + 1);

  out.volume =
      simplex_volume(pts, std::vector<int>(seed.begin(), seed.end() - 1), pts[seed.back()]);
  for (int drop = 0; drop <= n; ++drop) {
    std::vector<int> ids;
    for (int k = 0; k <= n; ++k)
      if (k != drop) ids.push_back(seed[k]);
    auto f = facet_through(pts, ids, interior);
    if (!f) throw internal_error("incremental_hull: degenerate seed facet");
    out.boundary.push_back(*f);
  }

  for (std::size_t pi = 0; pi < pts.size(); ++pi) {
    if (used[pi]) continue;
    const Vec& apex = pts[pi];
    std::vector<std::size_t> visible;
    for (std::size_t fi = 0; fi < out.boundary.size(); ++fi)
      if (out.boundary[fi].normal.dot(apex) > out.boundary[fi].offset) visible.push_back(fi);
    if (visible.empty()) continue;  // inside or on the boundary: not a hull vertex
    std::map<std::vector<int>, int> ridge_count;
    for (std::size_t fi : visible) {
      const auto& ids = out.boundary[fi].vertex_ids;
      out.volume += simplex_volume(pts, ids, apex);
      for (std::size_t drop = 0; drop < ids.size(); ++drop) {
        std::vector<int> ridge;
        for (std::size_t k = 0; k < ids.size(); ++k)
          if (k != drop) ridge.push_back(ids[k]);
        ridge_count[ridge] += 1;
      }
    }
    std::set<std::size_t> visible_set(visible.begin(), visible.end());
    std::vector<Facet> next;
    for (std::size_t fi = 0; fi < out.boundary.size(); ++fi)
      if (!visible_set.count(fi)) next.push_back(out.boundary[fi]);
    for (const auto& [ridge, count] : ridge_count) {
      if (count != 1) continue;  // interior to the visible region
      std::vector<int> ids = ridge;
      ids.push_back(static_cast<int>(pi));
      auto f = facet_through(pts, ids, interior);
      if (!f) throw internal_error("incremental_hull: degenerate horizon facet");
      next.push_back(*f);
    }
    out.boundary = std::move(next);
  }
  return out;
}

}  // namespace hull

/// Exact Lebesgue volume of the hull, by beneath-beyond insertion in
/// lexicographic placing order; 0 for lower-dimensional input.  The
/// final boundary complex is written to `boundary_out` when requested.
inline Rational volume(const Polytope& p, std::vector<hull::Facet>* boundary_out = nullptr) {
  const int n = p.dim();
  const std::vector<Vec>& pts = p.vertices();
  if (static_cast<int>(pts.size()) < n + 1) return 0;
  if (affine_rank(pts) < n) return 0;
  if (n == 1) return pts.back()[0] - pts.front()[0];
  hull::Result result = hull::incremental_hull(pts, n);
  if (boundary_out) *boundary_out = std::move(result.boundary);
  return result.volume;
}

/// Canonical vertex set: for full-dimensional input the hull boundary
/// narrows the candidates, then the exact convex-combination LP keeps
/// the extreme points only; lower-dimensional input is charted onto its
/// affine span first.
inline std::vector<Vec> Polytope::canonicalize(std::vector<Vec> points) {
  const int dim = static_cast<int>(points[0].size());
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end(),
                           [](const Vec& a, const Vec& b) { return a == b; }),
               points.end());
  if (points.size() == 1) return points;

  auto lp_filter = [](const std::vector<Vec>& pts) {
    std::vector<Vec> extreme;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::vector<Vec> others;
      for (std::size_t j = 0; j < pts.size(); ++j)
        if (j != i) others.push_back(pts[j]);
      if (!in_convex_hull(others, pts[i])) extreme.push_back(pts[i]);
    }
    return extreme;
  };

  int rank = affine_rank(points);
  if (rank == 0) return {points[0]};
  if (rank == 1) return {points.front(), points.back()};  // lex endpoints of a segment

  if (rank == dim && static_cast<int>(points.size()) > dim + 1) {
    hull::Result result = hull::incremental_hull(points, dim);
    std::set<int> boundary_ids;
    for (const auto& f : result.boundary)
      for (int id : f.vertex_ids) boundary_ids.insert(id);
    std::vector<Vec> candidates;
    for (int id : boundary_ids) candidates.push_back(points[id]);
    std::vector<Vec> extreme = lp_filter(candidates);
    std::sort(extreme.begin(), extreme.end(), lex_less);
    return extreme;
  }
  if (rank == dim) return lp_filter(points);

  // Lower-dimensional: chart the points onto the affine span and recurse.
  Mat basis(rank, dim);
  int got = 0;
  for (std::size_t i = 1; i < points.size() && got < rank; ++i) {
    Mat trial(got + 1, dim);
    trial.topRows(got) = basis.topRows(got);
    trial.row(got) = (points[i] - points[0]).transpose();
    if (rank_of(trial) == got + 1) basis.row(got++) = (points[i] - points[0]).transpose();
  }
  Mat gram_inv = Mat(basis * basis.transpose()).inverse();
  std::vector<Vec> charted;
  for (const auto& p : points) charted.push_back(gram_inv * (basis * (p - points[0])));
  // The chart is affine and injective on the span, so extreme points
  // correspond one to one.
  std::vector<Vec> chart_extreme = lp_filter(charted);
  std::vector<Vec> extreme;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (const auto& ce : chart_extreme)
      if (charted[i] == ce) {
        extreme.push_back(points[i]);
        break;
      }
  std::sort(extreme.begin(), extreme.end(), lex_less);
  return extreme;
}

/// Exhaustive boundary validation (used by the test suites): every
/// vertex weakly inside every facet, and every ridge shared by exactly
/// two facets.
inline bool hull_invariants_hold(const Polytope& p) {
  std::vector<hull::Facet> boundary;
  if (volume(p, &boundary) == 0) return true;
  for (const auto& f : boundary)
    for (const auto& v : p.vertices())
      if (f.normal.dot(v) > f.offset) return false;
  std::map<std::vector<int>, int> ridge_count;
  for (const auto& f : boundary)
    for (std::size_t drop = 0; drop < f.vertex_ids.size(); ++drop) {
      std::vector<int> ridge;
      for (std::size_t k = 0; k < f.vertex_ids.size(); ++k)
        if (k != drop) ridge.push_back(f.vertex_ids[k]);
      ridge_count[ridge] += 1;
    }
  for (const auto& [ridge, count] : ridge_count)
    if (count != 2) return false;
  return true;
}

inline Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
  if (a.dim() != b.dim()) throw input_error("minkowski_sum: dimension mismatch");
  std::vector<Vec> candidates;
  candidates.reserve(a.vertices().size() * b.vertices().size());
  for (const auto& p : a.vertices())
    for (const auto& q : b.vertices()) candidates.push_back(p + q);
  return Polytope(a.dim(), candidates);
}

inline Polytope scale(const Polytope& p, const Rational& c) {
  if (c < 0) throw input_error("scale: negative factor");
  std::vector<Vec> pts;
  if (c == 0) {
    pts.push_back(Vec::Zero(p.dim()));
  } else {
    for (const auto& v : p.vertices()) pts.push_back(c * v);
  }
  return Polytope(p.dim(), pts);
}

inline Polytope translate(const Polytope& p, const Vec& x) {
  std::vector<Vec> pts;
  for (const auto& v : p.vertices()) pts.push_back(v + x);
  return Polytope(p.dim(), pts);
}

/// s polytopes of common ambient dimension; compiles to the volume
/// polynomial f(t) = vol(t_1 P_1 + ... + t_s P_s) of degree n.
struct BodyFamily {
  std::vector<Polytope> bodies;

  int ambient_dim() const { return bodies.empty() ? 0 : bodies[0].dim(); }

  void validate() const {
    if (bodies.empty()) throw input_error("body family is empty");
    for (const auto& b : bodies)
      if (b.dim() != bodies[0].dim()) throw input_error("body family has mixed dimensions");
  }
};

namespace detail {

inline Rational multinomial(int n, const Exponents& parts) {
  Rational r = factorial(n);
  for (int k : parts) r /= factorial(k);
  return r;
}

}  // namespace detail

/// Exact volume polynomial of the family via inclusion-exclusion
/// polarization over the 2^n slot subsets,
///   V(K_1,..,K_n) = (1/n!) sum_{S != 0} (-1)^{n-|S|} vol(sum_{i in S} K_i),
/// with hull volumes cached per multiplicity vector.
inline VolumePolynomial mixed_volumes(const BodyFamily& family) {
  family.validate();
  const int n = family.ambient_dim();
  const int s = static_cast<int>(family.bodies.size());
  std::map<std::vector<int>, Rational> vol_cache;

  auto vol_of_counts = [&](const std::vector<int>& counts) -> Rational {
    auto it = vol_cache.find(counts);
    if (it != vol_cache.end()) return it->second;
    std::optional<Polytope> sum;
    for (int i = 0; i < s; ++i) {
      if (counts[i] == 0) continue;
      Polytope scaled = scale(family.bodies[i], counts[i]);
      sum = sum ? minkowski_sum(*sum, scaled) : scaled;
    }
    Rational v = sum ? volume(*sum) : Rational(0);
    vol_cache.emplace(counts, v);
    return v;
  };

  // All degree-n exponent vectors over s variables.
  std::vector<Exponents> exponents;
  Exponents cur(s, 0);
  auto rec = [&](auto&& self, int from, int remaining) -> void {
    if (remaining == 0) {
      exponents.push_back(cur);
      return;
    }
    for (int i = from; i < s; ++i) {
      cur[i] += 1;
      self(self, i, remaining - 1);
      cur[i] -= 1;
    }
  };
  rec(rec, 0, n);

  VolumePolynomial f(n, s);
  for (const Exponents& kappa : exponents) {
    // slots: body index repeated kappa[i] times
    std::vector<int> slot_body;
    for (int i = 0; i < s; ++i)
      for (int k = 0; k < kappa[i]; ++k) slot_body.push_back(i);
    Rational v = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> counts(s, 0);
      int size = 0;
      for (int j = 0; j < n; ++j)
        if (mask & (1u << j)) {
          counts[slot_body[j]] += 1;
          ++size;
        }
      Rational term = vol_of_counts(counts);
      v += ((n - size) % 2 == 0) ? term : -term;
    }
    v /= factorial(n);
    f.add_term(kappa, detail::multinomial(n, kappa) * v);
  }
  return f;
}

// --- 2D polygon machinery -------------------------------------------------

/// CCW vertex ring of a 2D polytope, starting at the lex-min vertex.
inline std::vector<Vec> polygon_ccw(const Polytope& p) {
  if (p.dim() != 2) throw input_error("polygon_ccw: 2D only");
  std::vector<Vec> pts = p.vertices();
  if (pts.size() <= 2) return pts;
  Vec center = p.vertex_centroid();
  auto half = [&](const Vec& v) {
    Vec d = v - center;
    return (d[1] > 0 || (d[1] == 0 && d[0] > 0)) ? 0 : 1;
  };
  std::sort(pts.begin(), pts.end(), [&](const Vec& a, const Vec& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Vec da = a - center, db = b - center;
    Rational cross = da[0] * db[1] - da[1] * db[0];
    if (cross != 0) return cross > 0;
    return lex_less(a, b);
  });
  // rotate so the lex-min vertex comes first
  std::size_t start = 0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (lex_less(pts[i], pts[start])) start = i;
  std::rotate(pts.begin(), pts.begin() + static_cast<long>(start), pts.end());
  return pts;
}

inline Rational ring_area(const std::vector<Vec>& ring) {
  if (ring.size() < 3) return 0;
  Rational twice = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Vec& u = ring[i];
    const Vec& v = ring[(i + 1) % ring.size()];
    twice += u[0] * v[1] - u[1] * v[0];
  }
  return twice / 2;
}

/// Sutherland-Hodgman clip of a convex CCW ring by the half-plane on the
/// left of the directed edge (a, b).
inline std::vector<Vec> clip_ring_halfplane(const std::vector<Vec>& ring, const Vec& a,
                                            const Vec& b) {
  std::vector<Vec> out;
  const std::size_t n = ring.size();
  auto side = [&](const Vec& p) {
    return (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Vec& cur = ring[i];
    const Vec& nxt = ring[(i + 1) % n];
    Rational sc = side(cur), sn = side(nxt);
    if (sc >= 0) out.push_back(cur);
    if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) {
      Rational t = sc / (sc - sn);
      out.push_back(cur + t * (nxt - cur));
    }
  }
  return out;
}

/// Exact area of the intersection of two convex 2D polytopes.
inline Rational intersection_area(const Polytope& a, const Polytope& b) {
  std::vector<Vec> ring = polygon_ccw(a);
  std::vector<Vec> clip = polygon_ccw(b);
  if (clip.size() < 3 || ring.size() < 3) return 0;
  for (std::size_t i = 0; i < clip.size() && !ring.empty(); ++i)
    ring = clip_ring_halfplane(ring, clip[i], clip[(i + 1) % clip.size()]);
  return ring_area(ring);
}

/// Relative asymmetry of two 2D bodies with the exact-per-sample grid
/// search: F(A,B) = 1 - sup_x |(x + rA) cap B| / |B|.  Returns an
/// enclosing interval; each sampled translation is an exact polygon
/// clip, and the width combines the Lipschitz covering bound with the
/// rational under-approximation of r.
struct BodyAsymmetry {
  Interval F;
  Vec best_translation;
  Rational best_overlap;
};

inline BodyAsymmetry asymmetry_F_bodies(const Polytope& a_in, const Polytope& b,
                                        unsigned root_bits = 64) {
  if (a_in.dim() != 2 || b.dim() != 2) throw input_error("asymmetry_F_bodies: 2D only");
  Rational va = volume(a_in), vb = volume(b);
  if (va <= 0 || vb <= 0) throw domain_error("asymmetry_F_bodies: degenerate body");

  // Center A so scaling about the origin nests: r~A subset of rA.
  Polytope a = translate(a_in, -a_in.vertex_centroid());
  Interval r = nth_root(vb / va, 2, root_bits);
  Rational r_lo = r.lo;
  Polytope scaled = scale(a, r_lo);
  // Area lost to the rational under-approximation of r.
  Rational scale_gap = (r.hi * r.hi - r_lo * r_lo) * va;

  auto bbox = [](const Polytope& p) {
    Vec lo = p.vertices()[0], hi = p.vertices()[0];
    for (const auto& v : p.vertices())
      for (int i = 0; i < 2; ++i) {
        if (v[i] < lo[i]) lo[i] = v[i];
        if (v[i] > hi[i]) hi[i] = v[i];
      }
    return std::make_pair(lo, hi);
  };
  auto [alo, ahi] = bbox(scaled);
  auto [blo, bhi] = bbox(b);

  Vec dom_lo(2), dom_hi(2), extent(2), lipschitz(2);
  for (int i = 0; i < 2; ++i) {
    dom_lo[i] = blo[i] - ahi[i];
    dom_hi[i] = bhi[i] - alo[i];
    extent[i] = dom_hi[i] - dom_lo[i];
    // moving in coordinate i changes the overlap by at most the smaller
    // extent of the two bodies in the other coordinate
    lipschitz[i] = std::min(ahi[1 - i] - alo[1 - i], bhi[1 - i] - blo[1 - i]);
  }

  // Lipschitz branch-and-bound on the integer lattice dom_lo +
  // (i,j)*extent/512: a full 33x33 coarse grid (spacing 16 units), then
  // two 4x refinements keeping only cells that can still beat the
  // running best.  Every translation is evaluated exactly once.
  const long kFinest = 512;
  std::map<std::pair<long, long>, Rational> memo;
  Rational best = -1;
  std::pair<long, long> best_key{0, 0};
  auto point_of = [&](const std::pair<long, long>& key) {
    Vec x(2);
    x[0] = dom_lo[0] + Rational(key.first) * extent[0] / kFinest;
    x[1] = dom_lo[1] + Rational(key.second) * extent[1] / kFinest;
    return x;
  };
  auto evaluate_key = [&](const std::pair<long, long>& key) {
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Rational v = intersection_area(translate(scaled, point_of(key)), b);
    memo.emplace(key, v);
    if (v > best) {
      best = v;
      best_key = key;
    }
    return v;
  };

  std::vector<std::pair<long, long>> frontier;
  for (long i = 0; i <= kFinest; i += 16)
    for (long j = 0; j <= kFinest; j += 16) {
      evaluate_key({i, j});
      frontier.push_back({i, j});
    }

  Rational dropped_ub = 0;  // max upper bound among cap-pruned cells
  long spacing = 16;
  const int cap = 2500;
  for (int round = 0; round < 2; ++round) {
    Rational bound =
        Rational(spacing) * (extent[0] * lipschitz[0] + extent[1] * lipschitz[1]) / kFinest;
    std::vector<std::pair<long, long>> keep;
    for (const auto& key : frontier)
      if (memo.at(key) + bound >= best) keep.push_back(key);
    std::sort(keep.begin(), keep.end(), [&](const auto& a, const auto& b2) {
      const Rational& va = memo.at(a);
      const Rational& vb2 = memo.at(b2);
      if (va != vb2) return va > vb2;
      return a < b2;
    });
    if (static_cast<int>(keep.size()) > cap) {
      for (std::size_t i = cap; i < keep.size(); ++i) {
        Rational ub = memo.at(keep[i]) + bound;
        if (ub > dropped_ub) dropped_ub = ub;
      }
      keep.resize(cap);
    }
    long fine = spacing / 4;
    std::set<std::pair<long, long>> next;
    for (const auto& key : keep)
      for (long di = -2; di <= 2; ++di)
        for (long dj = -2; dj <= 2; ++dj) {
          long i = key.first + di * fine;
          long j = key.second + dj * fine;
          if (i < 0 || i > kFinest || j < 0 || j > kFinest) continue;
          evaluate_key({i, j});
          next.insert({i, j});
        }
    frontier.assign(next.begin(), next.end());
    spacing = fine;
  }

  Rational final_bound =
      Rational(spacing) * (extent[0] * lipschitz[0] + extent[1] * lipschitz[1]) / kFinest;
  Rational sup_ub = best + final_bound;
  if (dropped_ub > sup_ub) sup_ub = dropped_ub;
  sup_ub += scale_gap;
  if (sup_ub > vb) sup_ub = vb;
  Vec best_x = point_of(best_key);

  BodyAsymmetry out;
  Rational f_hi = 1 - best / vb;
  Rational f_lo = 1 - sup_ub / vb;
  if (f_lo < 0) f_lo = 0;
  out.F = Interval(f_lo, f_hi);
  out.best_translation = best_x;
  out.best_overlap = best;
  return out;
}

/// FMP experiment record for one pair of 2D bodies: the asymmetry F, the
/// size index sigma, the Brunn-Minkowski deficit from exact areas, and
/// the empirical ratio F / sqrt(sigma B).  Not an asserted bound.
struct FmpBodiesRecord {
  Interval F;
  Interval sigma;
  Interval bm_deficit;
  bool bm_zero_exact = false;
  std::optional<Interval> ratio;  // absent when B = 0 (vacuous)
};

inline FmpBodiesRecord fmp_bodies_check(const Polytope& a, const Polytope& b,
                                        unsigned root_bits = 64) {
  FmpBodiesRecord rec;
  Rational va = volume(a), vb = volume(b);
  if (va <= 0 || vb <= 0) throw domain_error("fmp_bodies_check: degenerate body");
  rec.F = asymmetry_F_bodies(a, b, root_bits).F;
  Interval ra = nth_root(va / vb, 2, root_bits);
  Interval rb = nth_root(vb / va, 2, root_bits);
  rec.sigma = Interval(std::max(ra.lo, rb.lo), std::max(ra.hi, rb.hi));

  Rational vsum = volume(minkowski_sum(a, b));
  Rational mixed = (vsum - va - vb) / 2;  // V(A,B) in 2D
  rec.bm_zero_exact = (mixed * mixed == va * vb);
  if (rec.bm_zero_exact) {
    rec.bm_deficit = Interval(Rational(0));
    return rec;  // ratio vacuous
  }
  Interval s = nth_root(vsum, 2, root_bits);
  Interval sa = nth_root(va, 2, root_bits);
  Interval sb = nth_root(vb, 2, root_bits);
  rec.bm_deficit = s / (sa + sb) - Interval(Rational(1));
  Interval product = rec.sigma * rec.bm_deficit;
  if (product.lo > 0) {
    Interval denom = Interval(nth_root(product.lo, 2, root_bits).lo,
                              nth_root(product.hi, 2, root_bits).hi);
    rec.ratio = rec.F / denom;
  }
  return rec;
}

}  // namespace lorentz
