#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lorentz/certify.hpp"
#include "lorentz/cone.hpp"
#include "lorentz/numdim.hpp"
#include "lorentz/polynomial.hpp"
#include "lorentz/radii.hpp"

namespace lorentz {

/// Delta(alpha, beta; Gamma) = (ab)^2 - (aa)(bb) for the dimension-2
/// class Gamma described by d-2 contraction slots.
inline Rational delta_form(const VolumePolynomial& f, const Vec& alpha, const Vec& beta,
                           const Slots& gamma) {
  Slots ab = gamma, aa = gamma, bb = gamma;
  ab.emplace_back(alpha, 1);
  ab.emplace_back(beta, 1);
  aa.emplace_back(alpha, 2);
  bb.emplace_back(beta, 2);
  Rational m_ab = mixed_value(f, ab), m_aa = mixed_value(f, aa), m_bb = mixed_value(f, bb);
  return m_ab * m_ab - m_aa * m_bb;
}

inline void require_big(const VolumePolynomial& f, const Vec& v, const std::string& name) {
  if (evaluate(f, v) <= 0)
    throw domain_error("class '" + name + "' is not big on this instance (volume " +
                       evaluate(f, v).str() + ")");
}

/// AF deficit squared, exact: Delta(alpha,beta; omega^{d-2}.Omega) over
/// the square of the denominator mixed value.
inline Rational deficit_A_squared(const VolumePolynomial& f, const Vec& alpha, const Vec& beta,
                                  const Vec& omega) {
  require_big(f, alpha, "alpha");
  require_big(f, beta, "beta");
  Slots gamma{{omega, f.degree() - 2}};
  Slots ab = gamma;
  ab.emplace_back(alpha, 1);
  ab.emplace_back(beta, 1);
  Rational denom = mixed_value(f, ab);
  if (denom <= 0) throw domain_error("AF deficit: denominator mixed value is not positive");
  return delta_form(f, alpha, beta, gamma) / (denom * denom);
}

inline Interval deficit_A(const VolumePolynomial& f, const Vec& alpha, const Vec& beta,
                          const Vec& omega, unsigned bits = 128) {
  return nth_root(deficit_A_squared(f, alpha, beta, omega), 2, bits);
}

/// Exact flatness of the s_k chain: s_k^d = s_d^k s_0^{d-k} for some
/// (equivalently, for big pairs, every) 1 <= k <= d-1.
inline bool sk_chain_flat(const SequenceSk& s) {
  const int d = static_cast<int>(s.size()) - 1;
  for (int k = 1; k < d; ++k)
    if (rational_pow(s[k], d) != rational_pow(s[d], k) * rational_pow(s[0], d - k)) return false;
  return true;
}

inline bool deficit_B_is_zero(const VolumePolynomial& f, const Vec& alpha, const Vec& beta) {
  require_big(f, alpha, "alpha");
  require_big(f, beta, "beta");
  return sk_chain_flat(sequence_sk(f, alpha, beta));
}

inline Interval deficit_B(const VolumePolynomial& f, const Vec& alpha, const Vec& beta,
                          unsigned bits = 128) {
  if (deficit_B_is_zero(f, alpha, beta)) return Interval(Rational(0));
  const int d = f.degree();
  Interval sum = nth_root(evaluate(f, alpha + beta), d, bits);
  Interval parts = nth_root(evaluate(f, alpha), d, bits) + nth_root(evaluate(f, beta), d, bits);
  return sum / parts - Interval(Rational(1));
}

inline bool deficit_K_l_is_zero(const SequenceSk& s, int l) {
  const int d = static_cast<int>(s.size()) - 1;
  return rational_pow(s[l], d) == rational_pow(s[d], l) * rational_pow(s[0], d - l);
}

/// K_l(alpha, beta) = s_l / (s_d^{l/d} s_0^{(d-l)/d}) - 1; K = K_{d-1}.
inline Interval deficit_K_l(const VolumePolynomial& f, const Vec& alpha, const Vec& beta, int l,
                            unsigned bits = 128) {
  const int d = f.degree();
  if (l < 1 || l > d - 1) throw input_error("deficit_K_l: l out of range");
  require_big(f, alpha, "alpha");
  require_big(f, beta, "beta");
  SequenceSk s = sequence_sk(f, alpha, beta);
  if (deficit_K_l_is_zero(s, l)) return Interval(Rational(0));
  Interval denom = nth_root(rational_pow(s[d], l) * rational_pow(s[0], d - l), d, bits);
  return Interval(s[l]) / denom - Interval(Rational(1));
}

inline Interval deficit_K(const VolumePolynomial& f, const Vec& alpha, const Vec& beta,
                          unsigned bits = 128) {
  return deficit_K_l(f, alpha, beta, f.degree() - 1, bits);
}

/// sigma(alpha, beta) = max volume ratio to the power 1/d; exactly 1 when
/// the volumes agree.
inline Interval sigma_index(const VolumePolynomial& f, const Vec& alpha, const Vec& beta,
                            unsigned bits = 128) {
  require_big(f, alpha, "alpha");
  require_big(f, beta, "beta");
  Rational va = evaluate(f, alpha), vb = evaluate(f, beta);
  if (va == vb) return Interval(Rational(1));
  Rational ratio = va > vb ? va / vb : vb / va;
  return nth_root(ratio, f.degree(), bits);
}

// --- proportionality panel -------------------------------------------------

/// The six equivalent proportionality statements, evaluated exactly:
///   (1) alpha, beta proportional as vectors;
///   (2) the tensor powers alpha^k, beta^k proportional for every k
///       (in the vector model this is vector proportionality);
///   (3) the same for some k;
///   (4) the contracted tensors alpha^k.Omega, beta^k.Omega proportional
///       for some k, read off the derivative polynomials;
///   (5) s_k^2 = s_{k-1} s_{k+1} for every interior k;
///   (6) the flat-chain identity (exact Brunn-Minkowski equality).
/// On a strictly certified instance all six must agree; a disagreement
/// is the signature of a genuinely non-strict class and is flagged.
struct ProportionalityPanel {
  bool applicable = false;                 // both classes big
  std::optional<bool> not_big_strict;      // one-sided case: |a+b|^{1/d} > |big side|^{1/d}
  bool conditions[6] = {false, false, false, false, false, false};
  bool agree = false;
};

inline ProportionalityPanel proportionality_panel(const VolumePolynomial& f, const Vec& alpha,
                                                  const Vec& beta) {
  ProportionalityPanel panel;
  const int d = f.degree();
  Rational va = evaluate(f, alpha), vb = evaluate(f, beta);
  if (va <= 0 || vb <= 0) {
    panel.applicable = false;
    if ((va > 0) != (vb > 0)) {
      // |alpha+beta| > |big side| decided exactly on the d-th powers
      Rational big = va > 0 ? va : vb;
      panel.not_big_strict = evaluate(f, alpha + beta) > big;
    }
    return panel;
  }
  panel.applicable = true;

  Rational ratio;
  bool vec_prop = proportional(alpha, beta, &ratio) && ratio > 0;
  panel.conditions[0] = vec_prop;
  panel.conditions[1] = vec_prop;
  panel.conditions[2] = vec_prop;

  VolumePolynomial da = f, db = f;
  bool contracted = false;
  for (int k = 1; k <= d - 1; ++k) {
    da = da.is_zero() ? da : directional_derivative(da, alpha);
    db = db.is_zero() ? db : directional_derivative(db, beta);
    if (proportional_positive(da, db)) {
      contracted = true;
      break;
    }
  }
  panel.conditions[3] = contracted;

  SequenceSk s = sequence_sk(f, alpha, beta);
  bool chain = true;
  for (int k = 1; k < d; ++k)
    if (s[k] * s[k] != s[k - 1] * s[k + 1]) chain = false;
  panel.conditions[4] = chain;
  panel.conditions[5] = sk_chain_flat(s);

  panel.agree = true;
  for (int i = 1; i < 6; ++i)
    if (panel.conditions[i] != panel.conditions[0]) panel.agree = false;
  return panel;
}

// --- inequality battery -----------------------------------------------------

enum class VerdictStatus { Pass, Fail, Vacuous, Indeterminate };

inline std::string verdict_status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Pass: return "pass";
    case VerdictStatus::Fail: return "FAIL";
    case VerdictStatus::Vacuous: return "vacuous";
    case VerdictStatus::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

/// One battery item: the inequality id, its verdict, and the exact
/// numbers (or interval endpoints) behind it.
struct BatteryVerdict {
  std::string id;
  VerdictStatus status = VerdictStatus::Vacuous;
  std::string lhs;
  std::string rhs;
  std::string slack;  // rhs - lhs when exact; interval gap otherwise
  std::string note;
};

namespace detail {

inline std::string interval_str(const Interval& v) {
  if (v.is_point()) return v.lo.str();
  return "[" + v.lo.str() + ", " + v.hi.str() + "]";
}

/// Forces evaluation of a multiprecision expression before printing.
inline std::string rstr(const Rational& q) { return q.str(); }

inline BatteryVerdict exact_leq(std::string id, const Rational& lhs, const Rational& rhs,
                                std::string note = "") {
  BatteryVerdict v;
  v.id = std::move(id);
  v.status = lhs <= rhs ? VerdictStatus::Pass : VerdictStatus::Fail;
  v.lhs = lhs.str();
  v.rhs = rhs.str();
  v.slack = rstr(rhs - lhs);
  v.note = std::move(note);
  return v;
}

/// lhs <= c*sqrt(u), decided exactly by squaring.
inline BatteryVerdict exact_leq_root(std::string id, const Rational& lhs, const Rational& c,
                                     const Rational& u, std::string note = "") {
  BatteryVerdict v;
  v.id = std::move(id);
  v.status = leq_root_rhs(lhs, c, u) ? VerdictStatus::Pass : VerdictStatus::Fail;
  v.lhs = lhs.str();
  v.rhs = c.str() + "*sqrt(" + u.str() + ")";
  v.slack = rstr(c * c * u - lhs * lhs);
  v.note = std::move(note);
  return v;
}

/// lhs(bits) <= rhs(bits) via interval separation with escalation.
inline BatteryVerdict interval_leq(std::string id,
                                   const std::function<Interval(unsigned)>& lhs_at,
                                   const std::function<Interval(unsigned)>& rhs_at,
                                   const RootPrecision& prec, std::string note = "") {
  BatteryVerdict v;
  v.id = std::move(id);
  v.note = std::move(note);
  for (unsigned bits = prec.start;; bits *= 2) {
    Interval lhs = lhs_at(bits), rhs = rhs_at(bits);
    v.lhs = interval_str(lhs);
    v.rhs = interval_str(rhs);
    v.slack = "[" + rstr(rhs.lo - lhs.hi) + ", " + rstr(rhs.hi - lhs.lo) + "]";
    if (lhs.hi <= rhs.lo) {
      v.status = VerdictStatus::Pass;
      return v;
    }
    if (lhs.lo > rhs.hi) {
      v.status = VerdictStatus::Fail;
      return v;
    }
    if (bits >= prec.cap) break;
  }
  v.status = VerdictStatus::Indeterminate;
  return v;
}

inline BatteryVerdict vacuous(std::string id, std::string note) {
  BatteryVerdict v;
  v.id = std::move(id);
  v.status = VerdictStatus::Vacuous;
  v.lhs = v.rhs = v.slack = "-";
  v.note = std::move(note);
  return v;
}

inline void monotone_tuple_check(const VolumePolynomial& f, const Vec& beta, const ConeModel& nef,
                                 bool& ok, Rational& min_slack, bool& first) {
  const int d = f.degree();
  for_each_multiset(static_cast<int>(nef.generators.size()), d - 1,
                    [&](const std::vector<int>& idx) {
                      Slots slots;
                      for (int i : idx) slots.emplace_back(nef.generators[i], 1);
                      slots.emplace_back(beta, 1);
                      Rational slack = mixed_value(f, slots);
                      if (slack < 0) ok = false;
                      if (first || slack < min_slack) {
                        min_slack = slack;
                        first = false;
                      }
                    });
}

}  // namespace detail

/// inf{ lambda : lambda*omega - x in the cone }, via facet normals.
inline std::optional<Rational> nef_threshold(const ConeModel& cone, const Vec& x,
                                             const Vec& omega) {
  ConeModel c = cone;
  if (c.facet_normals.empty() && !c.derive_simplicial_facets()) return std::nullopt;
  Rational lambda = 0;
  for (const auto& n : c.facet_normals) {
    Rational no = n.dot(omega);
    Rational nx = n.dot(x);
    if (no <= 0) {
      if (nx > 0) return std::nullopt;  // omega not interior to this facet
      continue;
    }
    Rational needed = nx / no;
    if (needed > lambda) lambda = needed;
  }
  return lambda;
}

/// delta(x, omega) = R(x,omega)/r(x,omega)^2 * inf{lambda : lambda omega >= x}.
inline std::optional<Rational> delta_ratio(const VolumePolynomial& f, const Vec& x,
                                           const Vec& omega, const ConeModel& nef) {
  RadiiReport rad = radii(f, x, omega, nef);
  if (rad.R_infinite || rad.r_in <= 0) return std::nullopt;
  std::optional<Rational> lambda = nef_threshold(nef, x, omega);
  if (!lambda) return std::nullopt;
  return rad.R_out / (rad.r_in * rad.r_in) * *lambda;
}

/// The full explicit-constant battery for one (f, alpha, beta, omega)
/// instance over a polyhedral nef cone.  Every fixed-constant inequality
/// is decided exactly (rational comparisons, or root comparisons resolved
/// by squaring); the d-th-root items fall back to certified interval
/// separation with precision escalation.
inline std::vector<BatteryVerdict> inequality_battery(const VolumePolynomial& f, const Vec& alpha,
                                                      const Vec& beta, const Vec& omega,
                                                      const ConeModel& nef,
                                                      const RootPrecision& prec =
                                                          RootPrecision::defaults()) {
  using detail::exact_leq;
  using detail::exact_leq_root;
  using detail::interval_leq;
  using detail::vacuous;

  const int d = f.degree();
  require_big(f, alpha, "alpha");
  require_big(f, beta, "beta");
  std::vector<BatteryVerdict> out;
  SequenceSk s = sequence_sk(f, alpha, beta);

  // rKT: (B_1..B_d . Omega)(A^d . Omega) <= 2^{k(d-k)} (A^k B_{k+1}..B_d)(A^{d-k} B_1..B_k)
  {
    std::vector<Vec> b_list;
    for (int i = 1; i <= d; ++i) b_list.push_back(i % 2 == 1 ? beta : omega);
    Slots all;
    for (const auto& b : b_list) all.emplace_back(b, 1);
    Rational lhs_base = mixed_value(f, all) * evaluate(f, alpha);
    for (int k = 1; k <= d - 1; ++k) {
      Slots head{{alpha, k}};
      for (int i = k + 1; i <= d; ++i) head.emplace_back(b_list[i - 1], 1);
      Slots tail{{alpha, d - k}};
      for (int i = 1; i <= k; ++i) tail.emplace_back(b_list[i - 1], 1);
      Rational rhs = rational_pow(Rational(2), static_cast<unsigned>(k * (d - k))) *
                     mixed_value(f, head) * mixed_value(f, tail);
      out.push_back(exact_leq("rkt[k=" + std::to_string(k) + "]", lhs_base, rhs));
    }
  }

  // Bonnesen-Fenchel on Gamma = omega^{d-2}.Omega, for gamma = omega and
  // each nef generator with positive self-pairing.
  {
    Slots gamma_base{{omega, d - 2}};
    auto m2 = [&](const Vec& x, const Vec& y) {
      Slots slots = gamma_base;
      slots.emplace_back(x, 1);
      slots.emplace_back(y, 1);
      return mixed_value(f, slots);
    };
    std::vector<Vec> gammas{omega};
    for (const auto& g : nef.generators) gammas.push_back(g);
    for (std::size_t gi = 0; gi < gammas.size(); ++gi) {
      const Vec& c = gammas[gi];
      Rational lhs = m2(alpha, beta) * m2(c, c) - m2(alpha, c) * m2(beta, c);
      Rational delta_ac = m2(alpha, c) * m2(alpha, c) - m2(alpha, alpha) * m2(c, c);
      Rational delta_bc = m2(beta, c) * m2(beta, c) - m2(beta, beta) * m2(c, c);
      out.push_back(exact_leq("bonnesen_fenchel[gamma=" + std::to_string(gi) + "]", lhs * lhs,
                              delta_ac * delta_bc));
    }
  }

  // Refined KT with the exact 1/2 (and the surface Bonnesen form at d=2):
  // sqrt(Delta(a,b;Gamma)) >= (b^2.Gamma)/2 * (R_Gamma - r_Gamma).
  {
    VolumePolynomial f2 = contract_power(f, omega, d - 2);
    Rational delta2 = delta_form(f, alpha, beta, Slots{{omega, d - 2}});
    Rational b2 = evaluate(f2, beta);
    RadiiReport rad = radii(f2, alpha, beta, nef);
    auto emit = [&](const std::string& id) {
      if (rad.R_infinite) {
        out.push_back(vacuous(id, "restricted sup over the cone is unbounded"));
        return;
      }
      Rational rhs = b2 * (rad.R_out - rad.r_in) / 2;
      BatteryVerdict v;
      v.id = id;
      v.status = (rhs <= 0 || rhs * rhs <= delta2) ? VerdictStatus::Pass : VerdictStatus::Fail;
      v.lhs = "sqrt(" + delta2.str() + ")";
      v.rhs = rhs.str();
      v.slack = detail::rstr(delta2 - rhs * rhs);
      out.push_back(v);
    };
    emit("stab_kt_half");
    if (d == 2) emit("surface_bonnesen");
  }

  // AF-deficit induction, l = 1..d-2 (needs a fourth class slot; the
  // l = d-1 instance of the written inequality has no valid reference).
  if (d >= 3) {
    RadiiReport rad = radii(f, alpha, beta, nef);
    for (int l = 1; l <= d - 2; ++l) {
      std::string id = "af_induction[l=" + std::to_string(l) + "]";
      if (rad.R_infinite) {
        out.push_back(vacuous(id, "outradius infinite"));
        continue;
      }
      if (s[l - 1] <= 0 || s[l] <= 0) {
        out.push_back(vacuous(id, "vanishing s-value in a denominator"));
        continue;
      }
      Slots gamma_omega{{alpha, l - 1}, {beta, d - l - 2}, {omega, 1}};
      Rational delta_top = delta_form(f, alpha, beta, gamma_omega);
      Slots mslots{{alpha, l - 1}, {beta, d - l}, {omega, 1}};
      Rational m = mixed_value(f, mslots);
      if (m <= 0) {
        out.push_back(vacuous(id, "vanishing omega-contracted denominator"));
        continue;
      }
      Rational lhs = delta_top / (rad.R_out * m * m);
      Rational delta1 = s[l] * s[l] - s[l + 1] * s[l - 1];
      Rational delta2 = s[l + 1] * s[l + 1] - s[l + 2] * s[l];
      Rational u = delta1 / (s[l - 1] * s[l - 1]);
      Rational v = delta2 / (s[l] * s[l]);
      BatteryVerdict verdict;
      verdict.id = id;
      verdict.status = leq_two_root_rhs(lhs, 2, u, 2, v) ? VerdictStatus::Pass : VerdictStatus::Fail;
      verdict.lhs = lhs.str();
      verdict.rhs = "2*sqrt(" + u.str() + ") + 2*sqrt(" + v.str() + ")";
      verdict.slack = "-";
      out.push_back(verdict);
    }
  }

  // Radius bounds from rKT: R(beta,alpha) <= 2^{d-1} s_{d-1}/s_d and
  // r(alpha,beta) >= 2^{1-d} s_d/s_{d-1}.
  {
    RadiiReport fwd = radii(f, alpha, beta, nef);
    RadiiReport rev = radii(f, beta, alpha, nef);
    Rational cap = rational_pow(Rational(2), static_cast<unsigned>(d - 1)) * s[d - 1] / s[d];
    if (rev.R_infinite) {
      BatteryVerdict v;
      v.id = "radius_bound[R]";
      v.status = VerdictStatus::Fail;
      v.lhs = "infinity";
      v.rhs = cap.str();
      v.slack = "-";
      v.note = "outradius is infinite on this model";
      out.push_back(v);
    } else {
      out.push_back(exact_leq("radius_bound[R]", rev.R_out, cap));
    }
    Rational floor_r = s[d] / (rational_pow(Rational(2), static_cast<unsigned>(d - 1)) * s[d - 1]);
    out.push_back(exact_leq("radius_bound[r]", floor_r, fwd.r_in));
  }

  // Radius comparison across a hyperplane cut: r_Omega/r_{Omega.H} in
  // [2^{1-d}(1 - sqrt(u)), 1] with H = omega.
  {
    RadiiReport top = radii(f, alpha, beta, nef);
    VolumePolynomial fh = contract(f, omega);
    RadiiReport cut = radii(fh, alpha, beta, nef);
    if (cut.r_in <= 0) {
      out.push_back(vacuous("compradii", "cut inradius vanishes"));
    } else {
      Rational ratio = top.r_in / cut.r_in;
      out.push_back(exact_leq("compradii[upper]", ratio, 1));
      Rational u = (s[d - 1] * s[d - 1] - s[d] * s[d - 2]) / (s[d - 1] * s[d - 1]);
      Rational coeff = Rational(1) / rational_pow(Rational(2), static_cast<unsigned>(d - 1));
      // coeff*(1 - sqrt(u)) <= ratio  <=>  coeff - ratio <= coeff*sqrt(u)
      out.push_back(exact_leq_root("compradii[lower]", coeff - ratio, coeff, u,
                                   "constant 2^{1-d} from the inductive proof"));
    }
  }

  // KT dominates BM, with the explicit coefficient (|beta|/|alpha|)^{1/d}
  // after orienting so |alpha| >= |beta|.
  {
    const Vec& big = s[d] >= s[0] ? alpha : beta;
    const Vec& small = s[d] >= s[0] ? beta : alpha;
    Rational vb = evaluate(f, big), vs = evaluate(f, small);
    bool flat = sk_chain_flat(s);
    if (flat) {
      BatteryVerdict v;
      v.id = "kt_dominates_bm";
      v.status = VerdictStatus::Pass;
      v.lhs = v.rhs = "0";
      v.slack = "0";
      v.note = "proportional volumes: both deficits vanish exactly";
      out.push_back(v);
    } else {
      auto lhs_at = [&](unsigned bits) { return deficit_B(f, big, small, bits); };
      auto rhs_at = [&](unsigned bits) {
        Interval rho = nth_root(vs / vb, d, bits);
        return rho * deficit_K(f, big, small, bits);
      };
      out.push_back(interval_leq("kt_dominates_bm", lhs_at, rhs_at, prec));
    }
  }

  // Log-concavity chain, items (1)-(5).
  {
    bool ok1 = true;
    for (int k = 1; k < d; ++k)
      if (s[k] * s[k] < s[k - 1] * s[k + 1]) ok1 = false;
    BatteryVerdict v1;
    v1.id = "logconc[adjacent]";
    v1.status = ok1 ? VerdictStatus::Pass : VerdictStatus::Fail;
    v1.lhs = "s_k^2";
    v1.rhs = "s_{k-1} s_{k+1}";
    v1.slack = "-";
    out.push_back(v1);

    bool ok2 = true;
    for (int k1 = 0; k1 <= d; ++k1)
      for (int k2 = k1; k2 <= d; ++k2)
        for (int k3 = k2; k3 <= d; ++k3) {
          if (k1 == k3) continue;
          if (rational_pow(s[k2], k3 - k1) <
              rational_pow(s[k1], k3 - k2) * rational_pow(s[k3], k2 - k1))
            ok2 = false;
        }
    BatteryVerdict v2;
    v2.id = "logconc[interpolation]";
    v2.status = ok2 ? VerdictStatus::Pass : VerdictStatus::Fail;
    v2.lhs = "s_{k2}^{k3-k1}";
    v2.rhs = "s_{k1}^{k3-k2} s_{k3}^{k2-k1}";
    v2.slack = "-";
    out.push_back(v2);

    bool ok3 = true;
    for (int k = 0; k <= d; ++k)
      if (rational_pow(s[k], d) < rational_pow(s[d], k) * rational_pow(s[0], d - k)) ok3 = false;
    BatteryVerdict v3;
    v3.id = "logconc[endpoints]";
    v3.status = ok3 ? VerdictStatus::Pass : VerdictStatus::Fail;
    v3.lhs = "s_k^d";
    v3.rhs = "s_d^k s_0^{d-k}";
    v3.slack = "-";
    out.push_back(v3);

    out.push_back(exact_leq("logconc[top]", rational_pow(s[d], d - 1) * s[0],
                            rational_pow(s[d - 1], d)));

    if (sk_chain_flat(s)) {
      BatteryVerdict v5;
      v5.id = "logconc[bm]";
      v5.status = VerdictStatus::Pass;
      v5.lhs = v5.rhs = "equal";
      v5.slack = "0";
      v5.note = "flat chain: Brunn-Minkowski equality, exact";
      out.push_back(v5);
    } else {
      auto lhs_at = [&](unsigned bits) {
        return nth_root(evaluate(f, alpha), d, bits) + nth_root(evaluate(f, beta), d, bits);
      };
      auto rhs_at = [&](unsigned bits) { return nth_root(evaluate(f, alpha + beta), d, bits); };
      out.push_back(interval_leq("logconc[bm]", lhs_at, rhs_at, prec));
    }
  }

  // Schneider-type decrease of the normalized AF defect under a nef
  // decrease of the reference class, with the exact constant 4.
  if (d >= 3) {
    Vec gamma3 = omega + beta;  // big nef with gamma3 - omega nef
    RadiiReport ra = radii(f, alpha, gamma3, nef);
    RadiiReport rb = radii(f, beta, gamma3, nef);
    RadiiReport rg = radii(f, gamma3, omega, nef);
    if (ra.R_infinite || rb.R_infinite || rg.R_infinite || ra.r_in <= 0 || rb.r_in <= 0) {
      out.push_back(vacuous("schneider", "radius ratio unbounded, inequality trivial"));
    } else {
      Slots bar_slots{{omega, d - 2}};                 // Gamma-bar = omega^{d-2}
      Slots top_slots{{gamma3, 1}, {omega, d - 3}};    // Gamma = gamma3 omega^{d-3}
      Rational delta_bar = delta_form(f, alpha, beta, bar_slots);
      Rational delta_top = delta_form(f, alpha, beta, top_slots);
      Slots ab_bar = bar_slots, ab_top = top_slots;
      ab_bar.emplace_back(alpha, 1);
      ab_bar.emplace_back(beta, 1);
      ab_top.emplace_back(alpha, 1);
      ab_top.emplace_back(beta, 1);
      Rational m_bar = mixed_value(f, ab_bar);
      Rational m_top = mixed_value(f, ab_top);
      Rational lhs = delta_bar / (m_bar * m_bar);
      Rational ratio_a = ra.R_out / ra.r_in;
      Rational ratio_b = rb.R_out / rb.r_in;
      Rational c = 4 * std::min(ratio_a, ratio_b) * rg.R_out;
      Rational u = delta_top / (m_top * m_top);
      out.push_back(exact_leq_root("schneider", lhs, c, u, "constant 4, exact"));
    }
  }

  // Monotone partial order: adding a nef class never decreases any
  // tuple-tested intersection number.
  {
    bool ok = true;
    Rational min_slack;
    bool first = true;
    detail::monotone_tuple_check(f, beta, nef, ok, min_slack, first);
    BatteryVerdict v;
    v.id = "monotone_order";
    v.status = ok ? VerdictStatus::Pass : VerdictStatus::Fail;
    v.lhs = "L.alpha";
    v.rhs = "L.(alpha+beta)";
    v.slack = first ? "-" : min_slack.str();
    out.push_back(v);
  }

  // AF dominates BM with the constant 4*C*d^3 (C from radii and the
  // nef thresholds); interval route because of the half-integer powers.
  if (d >= 3) {
    RadiiReport fwd = radii(f, alpha, beta, nef);
    RadiiReport rev = radii(f, beta, alpha, nef);
    std::optional<Rational> da = delta_ratio(f, alpha, omega, nef);
    std::optional<Rational> db = delta_ratio(f, beta, omega, nef);
    if (fwd.R_infinite || rev.R_infinite || !da || !db) {
      out.push_back(vacuous("af_dominates_bm", "radii or nef thresholds unavailable"));
    } else {
      Rational rmax = std::max(fwd.R_out, rev.R_out);
      Rational dmax = std::max(*da, *db);
      Rational a2 = deficit_A_squared(f, alpha, beta, omega);
      bool flat = sk_chain_flat(s);
      if (flat) {
        BatteryVerdict v;
        v.id = "af_dominates_bm";
        v.status = VerdictStatus::Pass;
        v.lhs = v.rhs = "0";
        v.slack = "0";
        out.push_back(v);
      } else {
        auto lhs_at = [&](unsigned bits) { return deficit_B(f, alpha, beta, bits); };
        auto rhs_at = [&](unsigned bits) {
          // C = rmax^{(d+4)/2} dmax^2 = sqrt(rmax^{d+4}) dmax^2
          Interval c = nth_root(rational_pow(rmax, static_cast<unsigned>(d + 4)), 2, bits) *
                       Interval(dmax * dmax);
          Interval a_pow = nth_root(a2, 1u << static_cast<unsigned>(d - 2), bits);
          return Interval(Rational(4 * d * d * d)) * c * a_pow;
        };
        out.push_back(interval_leq("af_dominates_bm", lhs_at, rhs_at, prec));
      }
    }
  }

  return out;
}

}  // namespace lorentz
