#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lorentz/linalg.hpp"
#include "lorentz/polynomial.hpp"
#include "lorentz/rational.hpp"

namespace lorentz {

/// Deterministic sampling plan: a fixed seed and a sample count drive a
/// low-discrepancy sequence of rational interior points, so identical
/// inputs always produce identical certificates.
struct SamplePlan {
  std::uint64_t seed = 0x10e2025ULL;
  int count = 16;
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

enum class GeneratorTag { Nef, Movable, Divisorial };

inline std::string tag_name(GeneratorTag t) {
  switch (t) {
    case GeneratorTag::Nef: return "nef";
    case GeneratorTag::Movable: return "movable";
    case GeneratorTag::Divisorial: return "divisorial";
  }
  return "nef";
}

/// Finite generator list (and optional facet description) modeling one
/// of the nef / movable / psef cones inside R^s.
struct ConeModel {
  std::string name;
  std::vector<Vec> generators;
  std::vector<Vec> facet_normals;        // every x in the cone has <n, x> >= 0
  std::vector<GeneratorTag> tags;        // optional, parallel to generators

  int dim() const { return generators.empty() ? 0 : static_cast<int>(generators[0].size()); }

  static ConeModel positive_orthant(int s, std::string label = "orthant") {
    ConeModel c;
    c.name = std::move(label);
    for (int i = 0; i < s; ++i) {
      c.generators.push_back(basis_vector(s, i));
      c.facet_normals.push_back(basis_vector(s, i));
    }
    return c;
  }

  void validate() const {
    if (generators.empty()) throw input_error("cone '" + name + "' has no generators");
    for (const auto& g : generators) {
      if (g.size() != generators[0].size())
        throw input_error("cone '" + name + "' has generators of mixed dimension");
      if (g.isZero()) throw input_error("cone '" + name + "' contains a zero generator");
    }
    if (!tags.empty() && tags.size() != generators.size())
      throw input_error("cone '" + name + "': tag list length mismatch");
    for (const auto& normal : facet_normals) {
      if (normal.size() != generators[0].size())
        throw input_error("cone '" + name + "' facet normal dimension mismatch");
      for (const auto& g : generators)
        if (normal.dot(g) < 0)
          throw input_error("cone '" + name + "': generator violates a facet inequality");
    }
  }

  /// A point of the relative interior: the sum of all generators.
  Vec interior_point() const {
    Vec p = Vec::Zero(dim());
    for (const auto& g : generators) p += g;
    return p;
  }

  /// Strictly positive rational combinations of all generators; the
  /// weights come from a splitmix64 stream, so the sequence is fixed by
  /// the plan alone.
  std::vector<Vec> interior_samples(const SamplePlan& plan) const {
    std::vector<Vec> out;
    std::uint64_t state = plan.seed;
    out.reserve(plan.count);
    for (int t = 0; t < plan.count; ++t) {
      Vec p = Vec::Zero(dim());
      for (const auto& g : generators) {
        std::uint64_t r = splitmix64(state);
        p += Rational(1 + static_cast<long>(r % 97), 97) * g;
      }
      out.push_back(std::move(p));
    }
    return out;
  }

  /// Membership test: facet inequalities when a complete facet list is
  /// available would suffice, but a partial normal list only gives a
  /// necessary condition, so the conic-hull LP is the decision.
  bool contains(const Vec& v) const {
    for (const auto& normal : facet_normals)
      if (normal.dot(v) < 0) return false;
    return in_conic_hull(generators, v);
  }

  bool spans_ambient() const {
    Mat g(static_cast<Eigen::Index>(generators.size()), dim());
    for (std::size_t i = 0; i < generators.size(); ++i)
      g.row(static_cast<Eigen::Index>(i)) = generators[i].transpose();
    return rank_of(g) == dim();
  }

  /// Derives facet normals for a simplicial full-rank cone (rows of the
  /// inverse generator matrix).  Returns false when not simplicial.
  bool derive_simplicial_facets() {
    if (!facet_normals.empty()) return true;
    if (static_cast<int>(generators.size()) != dim()) return false;
    Mat g(dim(), dim());
    for (int i = 0; i < dim(); ++i) g.col(i) = generators[i];
    if (rank_of(g) != dim()) return false;
    Mat inv = g.inverse();
    for (int i = 0; i < dim(); ++i) facet_normals.push_back(inv.row(i).transpose());
    return true;
  }
};

}  // namespace lorentz
