#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lorentz/linalg.hpp"
#include "lorentz/polynomial.hpp"

namespace lorentz {

/// Matroid on a ground set {0,..,n} of at most 7 elements, given by its
/// bases (bitmasks).  The exchange axiom is verified on construction.
class Matroid {
 public:
  Matroid(int ground_size, std::vector<std::uint32_t> bases)
      : ground_size_(ground_size), bases_(std::move(bases)) {
    if (ground_size < 1 || ground_size > 7)
      throw input_error("matroid ground set must have 1..7 elements");
    if (bases_.empty()) throw input_error("matroid needs at least one basis");
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    rank_ = __builtin_popcount(bases_[0]);
    for (std::uint32_t b : bases_) {
      if (b >= (1u << ground_size)) throw input_error("basis uses elements outside the ground set");
      if (__builtin_popcount(b) != rank_) throw input_error("bases of unequal size");
    }
    verify_exchange();
  }

  static Matroid uniform(int rank, int ground_size) {
    std::vector<std::uint32_t> bases;
    for (std::uint32_t s = 0; s < (1u << ground_size); ++s)
      if (__builtin_popcount(s) == rank) bases.push_back(s);
    return Matroid(ground_size, std::move(bases));
  }

  /// Graphic matroid of the complete graph K_m; elements are the edges
  /// in lexicographic order, bases the spanning trees.
  static Matroid graphic_complete(int m) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) edges.emplace_back(i, j);
    int ne = static_cast<int>(edges.size());
    if (ne > 7) throw input_error("graphic_complete: too many edges for the ground-set cap");
    std::vector<std::uint32_t> bases;
    for (std::uint32_t s = 0; s < (1u << ne); ++s) {
      if (__builtin_popcount(s) != m - 1) continue;
      // spanning tree test by union-find
      std::vector<int> parent(m);
      for (int v = 0; v < m; ++v) parent[v] = v;
      auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
      };
      bool acyclic = true;
      for (int e = 0; e < ne && acyclic; ++e) {
        if (!(s & (1u << e))) continue;
        int a = find(edges[e].first), c = find(edges[e].second);
        if (a == c)
          acyclic = false;
        else
          parent[a] = c;
      }
      if (acyclic) bases.push_back(s);
    }
    return Matroid(ne, std::move(bases));
  }

  int ground_size() const { return ground_size_; }
  int rank() const { return rank_; }
  const std::vector<std::uint32_t>& bases() const { return bases_; }

  int rank_of(std::uint32_t subset) const {
    int best = 0;
    for (std::uint32_t b : bases_) best = std::max(best, __builtin_popcount(b & subset));
    return best;
  }

  std::uint32_t closure(std::uint32_t subset) const {
    int r = rank_of(subset);
    std::uint32_t cl = subset;
    for (int e = 0; e < ground_size_; ++e)
      if (!(subset & (1u << e)) && rank_of(subset | (1u << e)) == r) cl |= 1u << e;
    return cl;
  }

  bool loopless() const {
    std::uint32_t covered = 0;
    for (std::uint32_t b : bases_) covered |= b;
    return covered == (1u << ground_size_) - 1;
  }

 private:
  void verify_exchange() const {
    for (std::uint32_t b1 : bases_)
      for (std::uint32_t b2 : bases_) {
        std::uint32_t only1 = b1 & ~b2;
        for (int x = 0; x < ground_size_; ++x) {
          if (!(only1 & (1u << x))) continue;
          bool exchanged = false;
          std::uint32_t only2 = b2 & ~b1;
          for (int y = 0; y < ground_size_ && !exchanged; ++y) {
            if (!(only2 & (1u << y))) continue;
            std::uint32_t candidate = (b1 & ~(1u << x)) | (1u << y);
            exchanged = std::binary_search(bases_.begin(), bases_.end(), candidate);
          }
          if (!exchanged) throw input_error("basis-exchange axiom fails");
        }
      }
  }

  int ground_size_;
  int rank_;
  std::vector<std::uint32_t> bases_;
};

/// Flats graded by rank; closed under intersection with the ground set
/// on top.  Index 0..m-1 enumerates the proper nonempty flats in
/// (rank, bitmask) order.
struct FlatLattice {
  std::vector<std::uint32_t> flats;  // proper nonempty, sorted by (rank, mask)
  std::vector<int> flat_rank;
  std::uint32_t ground_mask = 0;

  int count() const { return static_cast<int>(flats.size()); }
};

inline FlatLattice flats(const Matroid& m) {
  FlatLattice lattice;
  lattice.ground_mask = (1u << m.ground_size()) - 1;
  std::vector<std::uint32_t> seen;
  for (std::uint32_t s = 0; s <= lattice.ground_mask; ++s) {
    std::uint32_t cl = m.closure(s);
    if (cl == 0 || cl == lattice.ground_mask) continue;
    seen.push_back(cl);
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  std::sort(seen.begin(), seen.end(), [&](std::uint32_t a, std::uint32_t b) {
    int ra = m.rank_of(a), rb = m.rank_of(b);
    if (ra != rb) return ra < rb;
    return a < b;
  });
  lattice.flats = seen;
  for (std::uint32_t f : seen) lattice.flat_rank.push_back(m.rank_of(f));
  // closure under intersection (the lattice meet), a structural check
  for (std::uint32_t a : seen)
    for (std::uint32_t b : seen) {
      std::uint32_t meet = a & b;
      if (meet == 0) continue;
      if (m.closure(meet) != meet) throw internal_error("flat lattice not meet-closed");
    }
  return lattice;
}

/// Divisor on the Bergman class: rational coefficients per proper flat,
/// together with the positivity tag derived from (strict) submodularity
/// of the defining set function.
struct DivisorSpec {
  std::string label;
  Vec flat_coefficients;  // indexed like FlatLattice::flats
  bool nef = false;
  bool ample = false;
};

namespace matroid_detail {

inline bool comparable(std::uint32_t a, std::uint32_t b) {
  return (a & b) == a || (a & b) == b;
}

/// Chain monomials of a given degree: multisets of flat indices whose
/// distinct supports form a chain.  Monomials with incomparable support
/// are zero in the Chow ring and never enumerated.
inline std::vector<std::vector<int>> chain_monomials(const FlatLattice& lattice, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int i = from; i < lattice.count(); ++i) {
      bool chain = true;
      for (int j : cur)
        if (!comparable(lattice.flats[i], lattice.flats[j])) {
          chain = false;
          break;
        }
      if (!chain) continue;
      cur.push_back(i);
      self(self, i, remaining - 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace matroid_detail

/// Exact model of the Chow ring: per-degree chain-monomial bases with
/// the quotient ranks, and the normalized degree functional on the top
/// graded piece.  Built by generic linear algebra over the monomial
/// spans; no Groebner machinery.
class ChowRingModel {
 public:
  ChowRingModel(const Matroid& m, FlatLattice lattice)
      : matroid_(m), lattice_(std::move(lattice)), top_degree_(m.rank() - 1) {
    if (!m.loopless()) throw input_error("Chow ring requires a loopless matroid");
    if (m.rank() < 2) throw input_error("Chow ring requires rank >= 2");
    if (m.rank() > 5) throw input_error("rank cap exceeded (rank <= 5)");
    for (int e = 0; e < m.ground_size(); ++e) {
      std::uint32_t bit = 1u << e;
      std::vector<int> containing;
      for (int i = 0; i < lattice_.count(); ++i)
        if (lattice_.flats[i] & bit) containing.push_back(i);
      flats_containing_.push_back(std::move(containing));
    }
    for (int k = 0; k <= top_degree_; ++k) {
      monomials_.push_back(matroid_detail::chain_monomials(lattice_, k));
      for (std::size_t i = 0; i < monomials_[k].size(); ++i)
        monomial_index_[k][monomials_[k][i]] = static_cast<int>(i);
    }
    for (int k = 0; k <= top_degree_; ++k) quotient_dims_.push_back(quotient_dimension(k));
    build_degree_functional();
  }

  const Matroid& matroid() const { return matroid_; }
  const FlatLattice& lattice() const { return lattice_; }
  int top_degree() const { return top_degree_; }
  const std::vector<int>& quotient_dims() const { return quotient_dims_; }

  /// Degree of a product of linear divisors (r-1 factors), exact.
  Rational degree_of_product(const std::vector<const DivisorSpec*>& divisors) const {
    if (static_cast<int>(divisors.size()) != top_degree_)
      throw input_error("degree: expected " + std::to_string(top_degree_) + " divisors");
    std::map<std::vector<int>, Rational> expansion;
    expansion[{}] = 1;
    for (const DivisorSpec* d : divisors) {
      std::map<std::vector<int>, Rational> next;
      for (const auto& [mono, coeff] : expansion)
        for (int f = 0; f < lattice_.count(); ++f) {
          if (d->flat_coefficients[f] == 0) continue;
          bool chain = true;
          for (int j : mono)
            if (!matroid_detail::comparable(lattice_.flats[f], lattice_.flats[j])) {
              chain = false;
              break;
            }
          if (!chain) continue;  // product is zero in the ring
          std::vector<int> extended(mono);
          extended.insert(std::upper_bound(extended.begin(), extended.end(), f), f);
          next[extended] += coeff * d->flat_coefficients[f];
        }
      expansion = std::move(next);
    }
    Rational total = 0;
    for (const auto& [mono, coeff] : expansion) total += coeff * degree_functional_[index_of(top_degree_, mono)];
    return total;
  }

  /// Bilinear form (a,b) -> deg(x_F x_G omega^{d-2}) over all flat pairs;
  /// the linear relations lie in its radical, so the quotient form is
  /// nondegenerate exactly when n_zero equals the relation rank.
  Mat ch1_intersection_form(const DivisorSpec& omega) const {
    const int m = lattice_.count();
    std::vector<const DivisorSpec*> slots(top_degree_, &omega);
    Mat q(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        DivisorSpec xi = flat_divisor(i);
        DivisorSpec xj = flat_divisor(j);
        std::vector<const DivisorSpec*> prod{&xi, &xj};
        for (int k = 0; k < top_degree_ - 2; ++k) prod.push_back(&omega);
        Rational v = degree_of_product(prod);
        q(i, j) = v;
        q(j, i) = v;
      }
    return q;
  }

  int ch1_relation_rank() const { return relation_rank_degree1_; }

  DivisorSpec flat_divisor(int flat_index) const {
    DivisorSpec d;
    d.label = "x_F";
    d.flat_coefficients = Vec::Zero(lattice_.count());
    d.flat_coefficients[flat_index] = 1;
    return d;
  }

  /// All complete flags (rank-increasing maximal chains of proper flats).
  std::vector<std::vector<int>> complete_flags() const {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rank) -> void {
      if (rank > top_degree_) {
        out.push_back(cur);
        return;
      }
      for (int i = 0; i < lattice_.count(); ++i) {
        if (lattice_.flat_rank[i] != rank) continue;
        if (!cur.empty()) {
          std::uint32_t prev = lattice_.flats[cur.back()];
          std::uint32_t next = lattice_.flats[i];
          if ((prev & next) != prev || prev == next) continue;
        }
        cur.push_back(i);
        self(self, rank + 1);
        cur.pop_back();
      }
    };
    rec(rec, 1);
    return out;
  }

 private:
  int index_of(int degree, const std::vector<int>& mono) const {
    auto it = monomial_index_[degree].find(mono);
    if (it == monomial_index_[degree].end())
      throw internal_error("chain monomial missing from the basis");
    return it->second;
  }

  /// Kernel rows of C_k -> CH^k: projections of (linear relation) *
  /// (degree k-1 chain monomial); products with incomparable support
  /// project to zero and quadric multiples vanish entirely.
  Mat relation_matrix(int degree) const {
    const auto& columns = monomials_[degree];
    const auto& multipliers = monomials_[degree - 1];
    const int n_rel = matroid_.ground_size() - 1;
    Mat rows = Mat::Zero(static_cast<Eigen::Index>(multipliers.size()) * n_rel,
                         static_cast<Eigen::Index>(columns.size()));
    Eigen::Index row = 0;
    for (int j = 1; j < matroid_.ground_size(); ++j)
      for (const auto& mono : multipliers) {
        auto add = [&](int flat, const Rational& sign) {
          bool chain = true;
          for (int idx : mono)
            if (!matroid_detail::comparable(lattice_.flats[flat], lattice_.flats[idx])) {
              chain = false;
              break;
            }
          if (!chain) return;
          std::vector<int> extended(mono);
          extended.insert(std::upper_bound(extended.begin(), extended.end(), flat), flat);
          rows(row, index_of(degree, extended)) += sign;
        };
        for (int f : flats_containing_[0]) add(f, 1);
        for (int f : flats_containing_[j]) add(f, -1);
        ++row;
      }
    return rows;
  }

  int quotient_dimension(int degree) {
    if (degree == 0) return 1;
    Mat rows = relation_matrix(degree);
    int r = rank_of(rows);
    if (degree == 1) relation_rank_degree1_ = r;
    return static_cast<int>(monomials_[degree].size()) - r;
  }

  void build_degree_functional() {
    const int d = top_degree_;
    if (quotient_dims_[d] != 1)
      throw internal_error("top graded piece has dimension " + std::to_string(quotient_dims_[d]) +
                           ", expected 1");
    Mat rows = relation_matrix(d);
    Mat ns = nullspace_of(rows);
    if (ns.cols() != 1) throw internal_error("degree functional is not unique");
    Vec phi = ns.col(0);
    std::vector<std::vector<int>> flags = complete_flags();
    if (flags.empty()) throw internal_error("no complete flag of flats");
    Rational pivot = phi[index_of(d, flags[0])];
    if (pivot == 0) throw internal_error("degree functional vanishes on a complete flag");
    phi /= pivot;
    for (const auto& flag : flags)
      if (phi[index_of(d, flag)] != 1)
        throw internal_error("inconsistent degree normalization across complete flags");
    degree_functional_ = phi;
  }

  const Matroid matroid_;
  FlatLattice lattice_;
  int top_degree_;
  std::vector<std::vector<int>> flats_containing_;
  std::vector<std::vector<std::vector<int>>> monomials_;  // per degree
  mutable std::map<int, std::map<std::vector<int>, int>> monomial_index_;
  std::vector<int> quotient_dims_;
  Vec degree_functional_;
  int relation_rank_degree1_ = 0;
};

inline ChowRingModel chow_ring(const Matroid& m) { return ChowRingModel(m, flats(m)); }

/// The standard alpha class: sum of x_F over flats containing a fixed
/// element (element 0); modular, hence nef-tagged.
inline DivisorSpec divisor_alpha(const FlatLattice& lattice) {
  DivisorSpec d;
  d.label = "alpha";
  d.flat_coefficients = Vec::Zero(lattice.count());
  for (int i = 0; i < lattice.count(); ++i)
    if (lattice.flats[i] & 1u) d.flat_coefficients[i] = 1;
  d.nef = true;
  return d;
}

/// The complementary beta class: sum over flats avoiding element 0.
inline DivisorSpec divisor_beta(const FlatLattice& lattice) {
  DivisorSpec d;
  d.label = "beta";
  d.flat_coefficients = Vec::Zero(lattice.count());
  for (int i = 0; i < lattice.count(); ++i)
    if (!(lattice.flats[i] & 1u)) d.flat_coefficients[i] = 1;
  d.nef = true;
  return d;
}

/// Divisor from a set function z on 2^E (values for every nonempty
/// proper subset): D_z = sum z(F) x_F over proper flats.  Submodularity
/// gives the nef tag, strict submodularity on incomparable pairs the
/// ample tag.
inline DivisorSpec divisor_from_set_function(const FlatLattice& lattice,
                                             const std::vector<Rational>& values,
                                             const std::string& label = "z") {
  std::uint32_t ground = lattice.ground_mask;
  auto z = [&](std::uint32_t s) -> Rational {
    if (s == 0 || s == ground) return 0;
    return values.at(s);
  };
  bool submodular = true, strict = true;
  for (std::uint32_t a = 1; a < ground; ++a)
    for (std::uint32_t b = a + 1; b < ground; ++b) {
      if (a == (a & b) || b == (a & b)) {
        if (z(a) + z(b) < z(a | b) + z(a & b)) submodular = false;
        continue;
      }
      Rational gap = z(a) + z(b) - z(a | b) - z(a & b);
      if (gap < 0) submodular = false;
      if (gap <= 0) strict = false;
    }
  DivisorSpec d;
  d.label = label;
  d.flat_coefficients = Vec::Zero(lattice.count());
  for (int i = 0; i < lattice.count(); ++i) d.flat_coefficients[i] = z(lattice.flats[i]);
  d.nef = submodular;
  d.ample = submodular && strict;
  return d;
}

/// z(S) = g(|S|) for a concave profile g with g(0) = 0: always
/// submodular, strictly so when g is strictly concave.
inline DivisorSpec divisor_concave_cardinality(const FlatLattice& lattice,
                                               const std::vector<Rational>& profile,
                                               const std::string& label = "w") {
  int n = __builtin_popcount(lattice.ground_mask);
  if (static_cast<int>(profile.size()) < n)
    throw input_error("concave cardinality profile needs a value per cardinality 1..ground size");
  std::vector<Rational> values(1u << n, Rational(0));
  for (std::uint32_t s = 1; s < (1u << n) - 1u; ++s)
    values[s] = profile[__builtin_popcount(s) - 1];
  return divisor_from_set_function(lattice, values, label);
}

inline Rational degree(const ChowRingModel& model, const std::vector<DivisorSpec>& divisors) {
  std::vector<const DivisorSpec*> ptrs;
  for (const auto& d : divisors) ptrs.push_back(&d);
  return model.degree_of_product(ptrs);
}

/// Volume polynomial of the Bergman class against s nef divisor
/// directions: f(t) = deg((t_1 D_1 + ... + t_s D_s)^{r-1}), exactly.
/// The accompanying cone model is the positive orthant in divisor
/// coordinates.
inline VolumePolynomial bergman_volume_polynomial(const ChowRingModel& model,
                                                  const std::vector<DivisorSpec>& divisors) {
  if (divisors.empty()) throw input_error("bergman_volume_polynomial: no divisors");
  for (const auto& d : divisors)
    if (!d.nef)
      throw input_error("bergman_volume_polynomial: divisor '" + d.label + "' is not nef-tagged");
  const int s = static_cast<int>(divisors.size());
  const int d = model.top_degree();
  VolumePolynomial f(d, s);
  std::vector<Exponents> exps;
  Exponents cur(s, 0);
  auto rec = [&](auto&& self, int from, int remaining) -> void {
    if (remaining == 0) {
      exps.push_back(cur);
      return;
    }
    for (int i = from; i < s; ++i) {
      cur[i] += 1;
      self(self, i, remaining - 1);
      cur[i] -= 1;
    }
  };
  rec(rec, 0, d);
  for (const Exponents& kappa : exps) {
    std::vector<const DivisorSpec*> slots;
    for (int i = 0; i < s; ++i)
      for (int k = 0; k < kappa[i]; ++k) slots.push_back(&divisors[i]);
    Rational deg = model.degree_of_product(slots);
    Rational multinomial = factorial(d);
    for (int k : kappa) multinomial /= factorial(k);
    f.add_term(kappa, multinomial * deg);
  }
  return f;
}

/// Intrinsic Hodge-Riemann check in degree <= 1: signature of the CH^1
/// intersection form against an ample divisor, with the relation radical
/// accounted for.
struct IntrinsicHR {
  Inertia inertia;     // of the full flat-coordinate form
  int ch1_dim = 0;     // quotient dimension
  int radical_rank = 0;  // contribution of the linear relations
  bool hr_holds = false;        // n_plus == 1
  bool nondegenerate = false;   // quotient form nondegenerate
};

inline IntrinsicHR intrinsic_hr_check(const ChowRingModel& model, const DivisorSpec& omega) {
  IntrinsicHR out;
  Mat q = model.ch1_intersection_form(omega);
  out.inertia = inertia_of(q);
  out.radical_rank = model.ch1_relation_rank();
  out.ch1_dim = static_cast<int>(q.rows()) - out.radical_rank;
  out.hr_holds = (out.inertia.n_plus == 1);
  out.nondegenerate = (out.inertia.n_zero == out.radical_rank);
  return out;
}

/// Independent oracle: the reduced characteristic polynomial via the
/// Moebius / subset-sign sum, chi(t)/(t-1), returned as the absolute
/// coefficient sequence (mu_0, .., mu_{r-1}).
inline std::vector<Rational> reduced_characteristic_coefficients(const Matroid& m) {
  const int r = m.rank();
  std::vector<Rational> chi(r + 1, Rational(0));  // coefficient of t^k
  std::uint32_t ground = (1u << m.ground_size()) - 1;
  for (std::uint32_t s = 0; s <= ground; ++s) {
    int k = r - m.rank_of(s);
    chi[k] += (__builtin_popcount(s) % 2 == 0) ? 1 : -1;
  }
  // synthetic division by (t - 1)
  std::vector<Rational> reduced(r, Rational(0));
  Rational carry = 0;
  for (int k = r; k >= 1; --k) {
    carry += chi[k];
    reduced[k - 1] = carry;
  }
  if (carry + chi[0] != 0) throw internal_error("characteristic polynomial not divisible by t-1");
  std::vector<Rational> mu;
  for (int k = r - 1; k >= 0; --k) mu.push_back(lorentz::abs(reduced[k]));
  return mu;  // mu[k] = |coefficient of t^{r-1-k}|
}

}  // namespace lorentz
