#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lorentz/cone.hpp"
#include "lorentz/polynomial.hpp"

namespace lorentz {

/// Collection of nef classes L_1..L_m with a reference interior point
/// used for nd computations.
struct NefCollection {
  std::vector<Vec> classes;
  Vec reference_omega;
};

/// nd_Omega(L) = max{ k : L^k . omega^{d-k} . Omega != 0 }, exact.
/// The zero class has nd 0 by convention.
inline int nd_omega(const VolumePolynomial& f, const Vec& L, const Vec& omega) {
  const int d = f.degree();
  for (int k = d; k >= 1; --k) {
    Slots slots{{L, k}, {omega, d - k}};
    if (mixed_value(f, slots) != 0) return k;
  }
  return 0;
}

inline constexpr int kCollectionCap = 20;  // subset enumeration is 2^m

inline Vec subset_sum(const NefCollection& collection, std::uint32_t mask) {
  Vec sum = Vec::Zero(collection.reference_omega.size());
  for (std::size_t i = 0; i < collection.classes.size(); ++i)
    if (mask & (1u << i)) sum += collection.classes[i];
  return sum;
}

/// nd of the collection: min over nonempty I of nd(L_I) - |I| + m.
inline int nd_collection(const VolumePolynomial& f, const NefCollection& collection) {
  const int m = static_cast<int>(collection.classes.size());
  if (m < 1) throw input_error("nd_collection: empty collection");
  if (m > kCollectionCap) throw input_error("nd_collection: more than 20 classes");
  int best = f.degree() + m;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    int size = __builtin_popcount(mask);
    int value = nd_omega(f, subset_sum(collection, mask), collection.reference_omega) - size + m;
    if (value < best) best = value;
  }
  return best;
}

struct HallRadoResult {
  bool product_nonzero = false;
  bool nd_criterion = false;
  bool agree = false;
  std::optional<std::uint32_t> violating_I;  // bitmask over [m]
};

/// Both sides of the Hall-Rado equivalence, computed independently:
/// the complete intersection against sampled interior omegas on one
/// side, subset enumeration of nd on the other.  On a certified
/// Lorentzian instance the two must agree; disagreement is reported,
/// not swallowed.
inline HallRadoResult hall_rado(const VolumePolynomial& f, const NefCollection& collection,
                                const ConeModel& nef, const SamplePlan& plan = SamplePlan{}) {
  const int m = static_cast<int>(collection.classes.size());
  const int d = f.degree();
  if (m > d) throw input_error("hall_rado: collection larger than the degree");
  if (m > kCollectionCap) throw input_error("hall_rado: more than 20 classes");
  HallRadoResult out;

  std::vector<Vec> omegas = nef.interior_samples(plan);
  omegas.insert(omegas.begin(), collection.reference_omega);
  for (const auto& omega : omegas) {
    Slots slots;
    for (const auto& L : collection.classes) slots.emplace_back(L, 1);
    slots.emplace_back(omega, d - m);
    if (mixed_value(f, slots) != 0) {
      out.product_nonzero = true;
      break;
    }
  }

  out.nd_criterion = true;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    int size = __builtin_popcount(mask);
    if (nd_omega(f, subset_sum(collection, mask), collection.reference_omega) < size) {
      out.nd_criterion = false;
      if (!out.violating_I) out.violating_I = mask;
    }
  }
  out.agree = (out.product_nonzero == out.nd_criterion);
  return out;
}

/// The unique maximal I_0 with nd(L_{I_0}) = |I_0| in the Critical case
/// nd(collection) = m.  Uniqueness is re-verified through the
/// union-closure property of tight subsets.
inline std::uint32_t maximal_index_set(const VolumePolynomial& f, const NefCollection& collection) {
  const int m = static_cast<int>(collection.classes.size());
  if (m > kCollectionCap) throw input_error("maximal_index_set: more than 20 classes");
  if (nd_collection(f, collection) != m)
    throw domain_error("maximal_index_set: collection is not critical (nd != m)");
  std::vector<std::uint32_t> tight;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    int size = __builtin_popcount(mask);
    if (nd_omega(f, subset_sum(collection, mask), collection.reference_omega) == size)
      tight.push_back(mask);
  }
  if (tight.empty()) throw domain_error("maximal_index_set: no tight subset (supercritical)");
  for (std::uint32_t a : tight)
    for (std::uint32_t b : tight) {
      std::uint32_t u = a | b;
      if (nd_omega(f, subset_sum(collection, u), collection.reference_omega) !=
          __builtin_popcount(u))
        throw internal_error("maximal_index_set: tight subsets are not union-closed");
    }
  std::uint32_t all = 0;
  for (std::uint32_t mask : tight) all |= mask;
  return all;
}

/// Submodularity of nd: nd(L+M+N) + nd(L) <= nd(L+M) + nd(L+N).
/// A false return is a counterexample artifact, reported to the caller.
inline bool submodularity_check(const VolumePolynomial& f, const Vec& L, const Vec& M, const Vec& N,
                                const Vec& omega) {
  int lhs = nd_omega(f, L + M + N, omega) + nd_omega(f, L, omega);
  int rhs = nd_omega(f, L + M, omega) + nd_omega(f, L + N, omega);
  return lhs <= rhs;
}

enum class KernelClass { Vanishing, Critical, Supercritical };

inline std::string kernel_class_name(KernelClass c) {
  switch (c) {
    case KernelClass::Vanishing: return "Vanishing";
    case KernelClass::Critical: return "Critical";
    case KernelClass::Supercritical: return "Supercritical";
  }
  return "Vanishing";
}

struct KernelFaceReport {
  int nd_collection = 0;
  KernelClass classification = KernelClass::Vanishing;
  std::vector<int> zero_generators;                    // indices into C.generators
  std::vector<Rational> functional_values;             // ell(g) per generator
  std::optional<std::uint32_t> maximal_index_set;      // Critical case only
  std::vector<std::pair<int, bool>> movable_predicate; // per zero generator: nd(L_I0+g)=nd(L_I0)
};

/// Kernel face of the Lefschetz operator L_1...L_{d-1} against the cone
/// C: the face spanned by the generators on which the nonnegative linear
/// functional ell(g) = g . L_1...L_{d-1} . Omega vanishes.
inline KernelFaceReport kernel_face(const VolumePolynomial& f, const NefCollection& collection,
                                    const ConeModel& C) {
  const int d = f.degree();
  if (static_cast<int>(collection.classes.size()) != d - 1)
    throw input_error("kernel_face: collection must have d-1 classes");
  KernelFaceReport report;
  Slots base;
  for (const auto& L : collection.classes) base.emplace_back(L, 1);
  for (std::size_t i = 0; i < C.generators.size(); ++i) {
    Slots slots = base;
    slots.emplace_back(C.generators[i], 1);
    Rational value = mixed_value(f, slots);
    if (value < 0)
      throw domain_error("kernel_face: generator " + std::to_string(i) +
                         " has negative functional value " + value.str() +
                         "; the Lorentzian monotonicity hypothesis fails");
    report.functional_values.push_back(value);
    if (value == 0) report.zero_generators.push_back(static_cast<int>(i));
  }
  report.nd_collection = nd_collection(f, collection);
  if (report.nd_collection <= d - 2) {
    report.classification = KernelClass::Vanishing;
  } else if (report.nd_collection == d - 1) {
    report.classification = KernelClass::Critical;
    report.maximal_index_set = maximal_index_set(f, collection);
    Vec tight_sum = subset_sum(collection, *report.maximal_index_set);
    int base_nd = nd_omega(f, tight_sum, collection.reference_omega);
    for (int g : report.zero_generators) {
      int with_g = nd_omega(f, tight_sum + C.generators[g], collection.reference_omega);
      report.movable_predicate.emplace_back(g, with_g == base_nd);
    }
  } else {
    report.classification = KernelClass::Supercritical;
  }
  return report;
}

struct AnnihilationResult {
  int k = 0;  // nd_omega(f, L, omega)
  bool cond1 = false;
  bool cond2 = false;
  bool cond3 = false;
  bool agree = false;
  std::optional<Rational> lambda_witness;
};

namespace detail {

template <typename Fn>
void for_each_multiset(int count, int size, Fn&& fn) {
  std::vector<int> idx(size, 0);
  auto rec = [&](auto&& self, int slot, int from) -> void {
    if (slot == size) {
      fn(idx);
      return;
    }
    for (int i = from; i < count; ++i) {
      idx[slot] = i;
      self(self, slot + 1, i);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace detail

/// The three equivalent annihilation conditions for a nef class L of
/// numerical dimension k and a nef alpha.  cond3 is verified
/// constructively: the candidate lambda = 2^{d-1} * max tuple ratio is
/// tested against every nef generator (d-1)-tuple, exactly.
inline AnnihilationResult annihilation_triple(const VolumePolynomial& f, const Vec& L,
                                              const Vec& alpha, const Vec& omega,
                                              const ConeModel& nef) {
  const int d = f.degree();
  AnnihilationResult out;
  out.k = nd_omega(f, L, omega);

  if (out.k == d) {
    out.cond1 = true;  // products of d+1 classes against Omega vanish identically
  } else {
    Slots slots{{L, out.k}, {alpha, 1}, {omega, d - out.k - 1}};
    out.cond1 = (mixed_value(f, slots) == 0);
  }
  out.cond2 = (nd_omega(f, L + alpha, omega) == out.k);

  const int g = static_cast<int>(nef.generators.size());
  bool feasible = true;
  Rational max_ratio = 0;
  bool any_positive_denominator = false;
  detail::for_each_multiset(g, d - 1, [&](const std::vector<int>& idx) {
    Slots slots;
    for (int i : idx) slots.emplace_back(nef.generators[i], 1);
    Slots num = slots, den = slots;
    num.emplace_back(alpha, 1);
    den.emplace_back(L, 1);
    Rational a = mixed_value(f, num);
    Rational l = mixed_value(f, den);
    if (l == 0) {
      if (a != 0) feasible = false;
    } else {
      any_positive_denominator = true;
      Rational ratio = a / l;
      if (ratio > max_ratio) max_ratio = ratio;
    }
  });
  if (!feasible) {
    out.cond3 = false;
  } else if (!any_positive_denominator) {
    out.cond3 = true;  // alpha pairs to zero with every tuple; lambda = 1 works
    out.lambda_witness = 1;
  } else {
    Rational lambda = pow2(static_cast<unsigned>(d - 1)) * max_ratio;
    if (lambda == 0) lambda = 1;
    bool ok = true;
    detail::for_each_multiset(g, d - 1, [&](const std::vector<int>& idx) {
      if (!ok) return;
      Slots slots;
      for (int i : idx) slots.emplace_back(nef.generators[i], 1);
      Slots num = slots, den = slots;
      num.emplace_back(alpha, 1);
      den.emplace_back(L, 1);
      if (lambda * mixed_value(f, den) - mixed_value(f, num) < 0) ok = false;
    });
    out.cond3 = ok;
    if (ok) out.lambda_witness = lambda;
  }
  out.agree = (out.cond1 == out.cond2) && (out.cond2 == out.cond3);
  return out;
}

}  // namespace lorentz
