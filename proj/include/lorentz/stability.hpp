#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lorentz/asymmetry.hpp"
#include "lorentz/deficits.hpp"

namespace lorentz {

/// Everything §5-§6 computes for one (f, alpha, beta, omega) instance:
/// the s-chain, all deficits (A^2 exact, the rest as enclosing
/// intervals), radii with witnesses, the nef-threshold ratios, and the
/// full inequality battery.
struct DeficitReport {
  SequenceSk s_sequence;
  Rational A_squared;
  Interval A;
  Interval B;
  bool B_zero_exact = false;
  Interval K;          // K(alpha, beta) = K_{d-1}
  Interval K_reversed; // K(beta, alpha); the deficit is oriented
  std::vector<Interval> K_l;  // l = 1..d-1
  Interval sigma;
  RadiiReport radii_report;
  std::optional<Rational> delta_alpha_omega;
  std::optional<Rational> delta_beta_omega;
  std::vector<BatteryVerdict> battery;
};

inline DeficitReport compute_deficit_report(const VolumePolynomial& f, const Vec& alpha,
                                            const Vec& beta, const Vec& omega,
                                            const ConeModel& nef,
                                            const RootPrecision& prec = RootPrecision::defaults()) {
  DeficitReport rep;
  rep.s_sequence = sequence_sk(f, alpha, beta);
  rep.A_squared = deficit_A_squared(f, alpha, beta, omega);
  rep.A = nth_root(rep.A_squared, 2, prec.start);
  rep.B_zero_exact = sk_chain_flat(rep.s_sequence);
  rep.B = deficit_B(f, alpha, beta, prec.start);
  rep.K = deficit_K(f, alpha, beta, prec.start);
  rep.K_reversed = deficit_K(f, beta, alpha, prec.start);
  for (int l = 1; l <= f.degree() - 1; ++l)
    rep.K_l.push_back(deficit_K_l(f, alpha, beta, l, prec.start));
  rep.sigma = sigma_index(f, alpha, beta, prec.start);
  rep.radii_report = radii(f, alpha, beta, nef);
  rep.delta_alpha_omega = delta_ratio(f, alpha, omega, nef);
  rep.delta_beta_omega = delta_ratio(f, beta, omega, nef);
  rep.battery = inequality_battery(f, alpha, beta, omega, nef, prec);
  return rep;
}

/// One corpus member for the stability experiments.
struct DeficitInstance {
  std::string id;
  VolumePolynomial f = VolumePolynomial(2, 1);
  Vec alpha, beta, omega;
  ConeModel nef;
};

/// A single empirical ratio X / Y^e; only a certified lower bound is
/// ever aggregated, and an absent upper end means the denominator
/// interval reached zero.
struct EmpiricalRow {
  std::string theorem;
  std::string instance;
  std::string exponent;
  Rational ratio_lo = 0;
  std::optional<Rational> ratio_hi;
  bool vacuous = false;
  std::string note;
};

struct EmpiricalReport {
  std::vector<EmpiricalRow> rows;
  // theorem -> (smallest certified lower bound, realizing instance)
  std::map<std::string, std::pair<Rational, std::string>> minima;
};

namespace detail {

inline Interval interval_nth_root(const Interval& x, unsigned n, unsigned bits) {
  return Interval(nth_root(x.lo, n, bits).lo, nth_root(x.hi, n, bits).hi);
}

/// Evaluate an interval quantity known to be nonzero at escalating
/// precision until its lower end separates from zero.
inline Interval escalate_positive(const std::function<Interval(unsigned)>& at,
                                  const RootPrecision& prec) {
  Interval v = at(prec.start);
  for (unsigned bits = prec.start; v.lo <= 0 && bits < prec.cap; bits *= 2) v = at(bits * 2);
  return v;
}

inline void add_row(EmpiricalReport& report, EmpiricalRow row) {
  if (!row.vacuous) {
    std::string key = row.theorem + "^" + row.exponent;
    auto it = report.minima.find(key);
    if (it == report.minima.end() || row.ratio_lo < it->second.first)
      report.minima[key] = {row.ratio_lo, row.instance};
  }
  report.rows.push_back(std::move(row));
}

}  // namespace detail

/// Worst-case constant estimates over a corpus for every theorem of the
/// form X >= c * Y^e whose c(d) the source leaves implicit.  Rows with
/// Y = 0 are recorded as vacuous, never aggregated; nothing here asserts
/// a bound.
inline EmpiricalReport empirical_constants(const std::vector<DeficitInstance>& corpus,
                                           const RootPrecision& prec = RootPrecision::defaults()) {
  if (corpus.empty()) throw input_error("empirical_constants: empty corpus");
  EmpiricalReport report;
  const unsigned bits = prec.start;

  for (const auto& inst : corpus) {
    const int d = inst.f.degree();
    const unsigned af_exp = 1u << static_cast<unsigned>(d - 2);
    SequenceSk s = sequence_sk(inst.f, inst.alpha, inst.beta);
    Rational a2 = deficit_A_squared(inst.f, inst.alpha, inst.beta, inst.omega);
    bool k_zero = deficit_K_l_is_zero(s, d - 1);
    bool flat = sk_chain_flat(s);
    Interval k = k_zero ? Interval(Rational(0))
                        : detail::escalate_positive(
                              [&](unsigned b) { return deficit_K(inst.f, inst.alpha, inst.beta, b); },
                              prec);

    // A^{2^{d-2}} = (A^2)^{2^{d-3}}, rational once d >= 3.
    auto a_pow = [&]() -> Interval {
      if (d >= 3) return Interval(rational_pow(a2, af_exp / 2));
      return nth_root(a2, 2, bits);
    };

    {
      EmpiricalRow row{"KTcontrAF", inst.id, "2^{d-2}"};
      if (a2 == 0) {
        row.vacuous = true;
        row.note = "A = 0 (proportional)";
      } else if (k_zero) {
        row.vacuous = true;
        row.note = "K = 0 with A > 0; would falsify the bound, reported separately";
      } else {
        Interval ratio = k / a_pow();
        row.ratio_lo = ratio.lo;
        row.ratio_hi = ratio.hi;
      }
      detail::add_row(report, std::move(row));
    }

    {
      EmpiricalRow row{"deficitscompa", inst.id, "2^{d-2}"};
      if (a2 == 0 || flat) {
        row.vacuous = true;
        row.note = a2 == 0 ? "A = 0 (proportional)" : "B = 0";
      } else {
        Interval sb = detail::escalate_positive(
            [&](unsigned b) {
              return sigma_index(inst.f, inst.alpha, inst.beta, b) *
                     deficit_B(inst.f, inst.alpha, inst.beta, b);
            },
            prec);
        Interval ratio = sb / a_pow();
        row.ratio_lo = ratio.lo;
        row.ratio_hi = ratio.hi;
      }
      detail::add_row(report, std::move(row));
    }

    {
      EmpiricalRow row{"BMcontrKT", inst.id, "1"};
      if (k_zero || flat) {
        row.vacuous = true;
        row.note = "proportional volumes";
      } else {
        const Vec& big = s[d] >= s[0] ? inst.alpha : inst.beta;
        const Vec& small = s[d] >= s[0] ? inst.beta : inst.alpha;
        Interval ratio = detail::escalate_positive(
            [&](unsigned b) {
              Interval rho = nth_root(evaluate(inst.f, small) / evaluate(inst.f, big), d, b);
              Interval rk = rho * deficit_K(inst.f, big, small, b);
              Interval y = rk / (Interval(Rational(1)) + rk);
              return deficit_B(inst.f, big, small, b) / y;
            },
            prec);
        row.ratio_lo = ratio.lo;
        row.ratio_hi = ratio.hi;
      }
      detail::add_row(report, std::move(row));
    }

    // Radii/asymmetry experiments on Gamma.
    VolumePolynomial f2 = contract_power(inst.f, inst.omega, d - 2);
    RadiiReport rad = radii(f2, inst.alpha, inst.beta, inst.nef);
    Interval k_pow = detail::interval_nth_root(k, af_exp, bits);

    {
      EmpiricalRow row{"KTradii", inst.id, "1/2^{d-2}"};
      if (k_zero || rad.R_infinite || rad.r_in == rad.R_out) {
        row.vacuous = true;
        row.note = k_zero ? "K = 0" : "radii ratio degenerate";
      } else {
        Rational y = 1 - rad.r_in / rad.R_out;
        Interval ratio = k_pow * Interval(Rational(1) / y);
        row.ratio_lo = ratio.lo;
        row.ratio_hi = ratio.hi;
      }
      detail::add_row(report, std::move(row));
    }

    {
      ConeAsymmetry asym = asymmetry_F_cone(f2, inst.alpha, inst.beta, inst.nef,
                                            gamma_order_cone(f2, inst.nef), prec);
      EmpiricalRow row{"fomegaKT", inst.id, "1/2^{d-2}"};
      if (k_zero || asym.F.hi == 0) {
        row.vacuous = true;
        row.note = k_zero ? "K = 0" : "F = 0";
      } else {
        row.ratio_lo = k_pow.lo / asym.F.hi;
        if (asym.F.lo > 0) row.ratio_hi = k_pow.hi / asym.F.lo;
        row.note = "F from the ascent estimate";
      }
      detail::add_row(report, std::move(row));

      // Diskant-style exponent sweep on the same quantities.
      const std::pair<const char*, unsigned> sweep[] = {
          {"1/d", static_cast<unsigned>(d)}, {"1/2", 2u}, {"1", 1u}};
      for (const auto& [label, e] : sweep) {
        EmpiricalRow srow{"diskant_sweep", inst.id, label};
        if (k_zero || asym.F.hi == 0) {
          srow.vacuous = true;
          srow.note = "degenerate";
        } else {
          Interval ke = detail::interval_nth_root(k, e, bits);
          srow.ratio_lo = ke.lo / asym.F.hi;
          if (asym.F.lo > 0) srow.ratio_hi = ke.hi / asym.F.lo;
        }
        detail::add_row(report, std::move(srow));
      }
    }
  }
  return report;
}

}  // namespace lorentz
