#pragma once

#include <optional>
#include <vector>

#include "lorentz/cone.hpp"
#include "lorentz/numdim.hpp"
#include "lorentz/polynomial.hpp"

namespace lorentz {

/// In/out-radius of alpha with respect to beta on the class represented
/// by f, together with the generator tuples realizing them.  R_out may
/// be infinite (a tuple with zero beta-pairing and positive
/// alpha-pairing); that is reported, not hidden.
struct RadiiReport {
  Rational r_in = 0;
  Rational R_out = 0;
  bool R_infinite = false;
  std::vector<int> argmin_tuple;
  std::vector<int> argmax_tuple;
  bool heuristic = false;  // set when the tuple cap forced per-slot alternation
};

inline constexpr long kRadiiTupleCap = 1'000'000;

namespace detail {

inline long multiset_count(int n, int k) {
  // C(n+k-1, k), saturating at the cap sentinel
  long result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n + i - 1) / i;
    if (result > 4 * kRadiiTupleCap) return 4 * kRadiiTupleCap;
  }
  return result;
}

}  // namespace detail

/// Exact radii by generator-tuple enumeration: for each (d-1)-multiset T
/// of nef generators the constraint (alpha - t beta) . T . Omega >= 0 is
/// linear-fractional in t, and over a product of polyhedral cones the
/// extremes sit on extreme rays.  Above the tuple cap a per-slot
/// alternating sweep is used instead and the report is marked heuristic.
inline RadiiReport radii(const VolumePolynomial& f, const Vec& alpha, const Vec& beta,
                         const ConeModel& nef) {
  nef.validate();
  const int d = f.degree();
  const int k = d - 1;
  const int g = static_cast<int>(nef.generators.size());
  RadiiReport report;
  bool have_r = false, have_R = false;
  bool any_nonzero_denominator = false;

  auto consider = [&](const std::vector<int>& idx) {
    Slots slots;
    for (int i : idx) slots.emplace_back(nef.generators[i], 1);
    Slots num = slots, den = slots;
    num.emplace_back(alpha, 1);
    den.emplace_back(beta, 1);
    Rational a = mixed_value(f, num);
    Rational b = mixed_value(f, den);
    if (b == 0) {
      if (a > 0) {
        report.R_infinite = true;
        report.argmax_tuple = idx;
      }
      return;
    }
    any_nonzero_denominator = true;
    Rational ratio = a / b;
    if (!have_r || ratio < report.r_in) {
      report.r_in = ratio;
      report.argmin_tuple = idx;
      have_r = true;
    }
    if (!have_R || ratio > report.R_out) {
      report.R_out = ratio;
      report.argmax_tuple = idx;
      have_R = true;
    }
  };

  if (detail::multiset_count(g, k) <= kRadiiTupleCap) {
    detail::for_each_multiset(g, k, consider);
  } else {
    // Alternating per-slot descent/ascent from a few starting tuples;
    // a bound, not a certified global extreme.
    report.heuristic = true;
    for (int objective = 0; objective < 2; ++objective)
      for (int start = 0; start < std::min(g, 4); ++start) {
        std::vector<int> idx(k, start);
        for (int round = 0; round < 8; ++round) {
          bool moved = false;
          for (int slot = 0; slot < k; ++slot) {
            int best_cand = idx[slot];
            Rational best_before = objective == 0 ? report.r_in : report.R_out;
            for (int cand = 0; cand < g; ++cand) {
              std::vector<int> trial = idx;
              trial[slot] = cand;
              consider(trial);
              Rational after = objective == 0 ? report.r_in : report.R_out;
              if (after != best_before) {
                best_cand = cand;
                best_before = after;
              }
            }
            if (best_cand != idx[slot]) {
              idx[slot] = best_cand;
              moved = true;
            }
          }
          if (!moved) break;
        }
      }
  }

  if (!any_nonzero_denominator)
    throw domain_error("radii: every generator tuple pairs to zero with beta");
  return report;
}

}  // namespace lorentz
