#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lorentz/cone.hpp"
#include "lorentz/linalg.hpp"
#include "lorentz/polynomial.hpp"

namespace lorentz {

enum class LorentzVerdict { StrictlyLorentzian, Lorentzian, NotLorentzian, Indeterminate };

inline std::string verdict_name(LorentzVerdict v) {
  switch (v) {
    case LorentzVerdict::StrictlyLorentzian: return "StrictlyLorentzian";
    case LorentzVerdict::Lorentzian: return "Lorentzian";
    case LorentzVerdict::NotLorentzian: return "NotLorentzian";
    case LorentzVerdict::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

/// Symmetric matrix of a contracted bilinear form together with the
/// contraction directions that produced it.
struct ContractedForm {
  Mat matrix;
  std::vector<Vec> contraction_dirs;
};

/// Entry (i,j) is mixed_value(f, [e_i, e_j, dirs...]); exactly symmetric
/// and bilinear in any pair of slot arguments.
inline ContractedForm contracted_form(const VolumePolynomial& f, const std::vector<Vec>& dirs) {
  if (static_cast<int>(dirs.size()) != f.degree() - 2)
    throw input_error("contracted_form: expected " + std::to_string(f.degree() - 2) +
                      " contraction directions, got " + std::to_string(dirs.size()));
  VolumePolynomial g = f;
  for (const auto& w : dirs) g = g.is_zero() ? g : directional_derivative(g, w);
  // g is now a quadratic; its polarized Hessian entries give the form.
  const int s = f.nvars();
  Mat m = Mat::Zero(s, s);
  Rational scale = Rational(1) / factorial(f.degree());
  for (const auto& [e, c] : g.terms()) {
    int i = -1, j = -1;
    for (int k = 0; k < s; ++k) {
      if (e[k] == 2) i = j = k;
      if (e[k] == 1) (i < 0 ? i : j) = k;
    }
    if (i == j) {
      m(i, i) += 2 * c * scale;
    } else {
      m(i, j) += c * scale;
      m(j, i) += c * scale;
    }
  }
  return ContractedForm{std::move(m), dirs};
}

struct InertiaWitness {
  std::vector<Vec> dirs;
  Inertia inertia;
  std::string note;
};

/// Result of one certification pass.  NotLorentzian always carries at
/// least one explicit witness.
struct LorentzCertificate {
  LorentzVerdict verdict = LorentzVerdict::Indeterminate;
  std::vector<InertiaWitness> witnesses;
  std::optional<bool> support_m_convex;
  std::string detail;

  bool passed() const {
    return verdict == LorentzVerdict::Lorentzian || verdict == LorentzVerdict::StrictlyLorentzian;
  }
};

/// Exchange-axiom check over all support pairs; exponential in support
/// size, fine at desk scale.
inline bool is_m_convex_support(const VolumePolynomial& f,
                                std::pair<Exponents, Exponents>* witness = nullptr) {
  std::vector<Exponents> supp;
  supp.reserve(f.terms().size());
  for (const auto& [e, c] : f.terms()) supp.push_back(e);
  auto in_support = [&f](const Exponents& e) { return f.coefficient(e) != 0; };
  for (const auto& a : supp)
    for (const auto& b : supp) {
      for (int i = 0; i < f.nvars(); ++i) {
        if (a[i] <= b[i]) continue;
        bool exchanged = false;
        for (int j = 0; j < f.nvars() && !exchanged; ++j) {
          if (a[j] >= b[j]) continue;
          Exponents e(a);
          e[i] -= 1;
          e[j] += 1;
          exchanged = in_support(e);
        }
        if (!exchanged) {
          if (witness) *witness = {a, b};
          return false;
        }
      }
    }
  return true;
}

namespace detail {

inline void all_monomial_multisets(int s, int size, std::vector<Exponents>& out) {
  Exponents cur(s, 0);
  auto rec = [&](auto&& self, int from, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int i = from; i < s; ++i) {
      cur[i] += 1;
      self(self, i, remaining - 1);
      cur[i] -= 1;
    }
  };
  rec(rec, 0, size);
}

inline VolumePolynomial monomial_derivative(const VolumePolynomial& f, const Exponents& order) {
  VolumePolynomial g = f;
  for (int i = 0; i < f.nvars(); ++i)
    for (int k = 0; k < order[i]; ++k) g = g.is_zero() ? g : partial_derivative(g, i);
  return g;
}

inline Mat hessian_of_quadratic(const VolumePolynomial& q) {
  const int s = q.nvars();
  Mat h = Mat::Zero(s, s);
  for (const auto& [e, c] : q.terms()) {
    int i = -1, j = -1;
    for (int k = 0; k < s; ++k) {
      if (e[k] == 2) i = j = k;
      if (e[k] == 1) (i < 0 ? i : j) = k;
    }
    if (i == j) {
      h(i, i) += 2 * c;
    } else {
      h(i, j) += c;
      h(j, i) += c;
    }
  }
  return h;
}

}  // namespace detail

/// Exact (non-sampled) verdict for Lorentzianity over the open positive
/// orthant: nonnegative coefficients, M-convex support, and at most one
/// positive Hessian eigenvalue for every (d-2)-fold monomial derivative.
inline LorentzCertificate check_positive_orthant_lorentzian(const VolumePolynomial& f) {
  LorentzCertificate cert;
  if (f.is_zero()) {
    cert.verdict = LorentzVerdict::NotLorentzian;
    cert.detail = "identically zero";
    cert.witnesses.push_back({{}, Inertia{}, "identically zero"});
    return cert;
  }
  if (f.degree() < 2) throw domain_error("Lorentzian check needs degree >= 2");
  for (const auto& [e, c] : f.terms())
    if (c < 0) {
      cert.verdict = LorentzVerdict::NotLorentzian;
      cert.detail = "negative coefficient " + c.str();
      cert.witnesses.push_back({{}, Inertia{}, "negative coefficient at a support monomial"});
      return cert;
    }
  std::pair<Exponents, Exponents> mw;
  bool m_convex = is_m_convex_support(f, &mw);
  cert.support_m_convex = m_convex;
  if (!m_convex) {
    cert.verdict = LorentzVerdict::NotLorentzian;
    cert.detail = "support fails the exchange axiom";
    cert.witnesses.push_back({{}, Inertia{}, "M-convexity witness pair in support"});
    return cert;
  }
  std::vector<Exponents> orders;
  detail::all_monomial_multisets(f.nvars(), f.degree() - 2, orders);
  for (const auto& order : orders) {
    Mat h = detail::hessian_of_quadratic(detail::monomial_derivative(f, order));
    Inertia in = inertia_of(h);
    if (in.n_plus > 1) {
      cert.verdict = LorentzVerdict::NotLorentzian;
      cert.detail = "a (d-2)-fold monomial derivative has Hessian inertia " + in.str();
      std::vector<Vec> dirs;
      for (int i = 0; i < f.nvars(); ++i)
        for (int k = 0; k < order[i]; ++k) dirs.push_back(basis_vector(f.nvars(), i));
      cert.witnesses.push_back({dirs, in, "monomial derivative Hessian"});
      return cert;
    }
  }
  cert.verdict = LorentzVerdict::Lorentzian;
  return cert;
}

/// Two-pronged cone check.  (a) exact: substitute the full generator
/// list and decide over the positive orthant -- conclusive when the
/// generators span the ambient space.  (b) sampled: deterministic
/// interior tuples must have positive mixed values and contracted forms
/// with at most one positive eigenvalue.
inline LorentzCertificate check_cone_lorentzian(const VolumePolynomial& f, const ConeModel& cone,
                                                const SamplePlan& plan = SamplePlan{}) {
  cone.validate();
  if (f.degree() < 2) throw domain_error("Lorentzian check needs degree >= 2");
  LorentzCertificate substituted = check_positive_orthant_lorentzian(substitute_cone(f, cone.generators));
  LorentzCertificate cert;
  cert.support_m_convex = substituted.support_m_convex;

  std::vector<Vec> samples = cone.interior_samples(plan);
  for (std::size_t t = 0; t + f.degree() <= samples.size() || t == 0; ++t) {
    std::vector<Vec> tuple;
    for (int i = 0; i < f.degree(); ++i) tuple.push_back(samples[(t + i) % samples.size()]);
    Rational mv = mixed_value(f, tuple);
    if (mv <= 0) {
      cert.verdict = LorentzVerdict::NotLorentzian;
      cert.detail = "interior mixed value " + mv.str() + " is not positive";
      cert.witnesses.push_back({tuple, Inertia{}, "nonpositive interior mixed value"});
      return cert;
    }
    std::vector<Vec> contraction(tuple.begin(), tuple.end() - 2);
    Inertia in = inertia_of(contracted_form(f, contraction).matrix);
    if (in.n_plus > 1) {
      cert.verdict = LorentzVerdict::NotLorentzian;
      cert.detail = "sampled contracted form has inertia " + in.str();
      cert.witnesses.push_back({contraction, in, "sampled contracted form"});
      return cert;
    }
    cert.witnesses.push_back({contraction, in, "sampled contracted form"});
  }

  if (substituted.verdict == LorentzVerdict::NotLorentzian) {
    if (cone.spans_ambient()) {
      cert.verdict = LorentzVerdict::NotLorentzian;
      cert.witnesses = substituted.witnesses;
      cert.detail = "substituted polynomial: " + substituted.detail;
      return cert;
    }
    // Generators do not span: the exact route certifies only the
    // restriction, and the samples above found no failure.
    cert.verdict = LorentzVerdict::Indeterminate;
    cert.detail = "generators do not span; substituted check failed but samples passed";
    return cert;
  }
  if (!cone.spans_ambient()) {
    cert.verdict = LorentzVerdict::Indeterminate;
    cert.detail = "generators do not span the ambient space; sampled prong passed";
    return cert;
  }
  cert.verdict = LorentzVerdict::Lorentzian;
  return cert;
}

/// Per-sample strictness: every sampled interior omega must give a
/// contracted form of signature (+,-,...,-).  A degenerate sample rules
/// out strictness at that omega; all-degenerate is reported as
/// Indeterminate rather than guessed either way.
inline LorentzCertificate check_strict(const VolumePolynomial& f, const ConeModel& cone,
                                       const SamplePlan& plan = SamplePlan{}) {
  LorentzCertificate base = check_cone_lorentzian(f, cone, plan);
  if (!base.passed())
    throw domain_error("check_strict: polynomial is not certified cone-Lorentzian (" +
                       verdict_name(base.verdict) + ")");
  LorentzCertificate cert;
  cert.support_m_convex = base.support_m_convex;
  const int s = f.nvars();
  int degenerate = 0;
  std::vector<Vec> samples = cone.interior_samples(plan);
  for (const auto& omega : samples) {
    std::vector<Vec> dirs(f.degree() - 2, omega);
    Inertia in = inertia_of(contracted_form(f, dirs).matrix);
    cert.witnesses.push_back({{omega}, in, "pure-power contracted form"});
    if (in.n_plus != 1) {
      cert.verdict = LorentzVerdict::NotLorentzian;
      cert.detail = "sampled form has " + std::to_string(in.n_plus) + " positive eigenvalues";
      return cert;
    }
    if (in.n_zero > 0) ++degenerate;
  }
  if (degenerate == 0) {
    cert.verdict = LorentzVerdict::StrictlyLorentzian;
    cert.detail = "all " + std::to_string(samples.size()) + " sampled forms have signature (1,0," +
                  std::to_string(s - 1) + ")";
  } else if (degenerate == static_cast<int>(samples.size())) {
    cert.verdict = LorentzVerdict::Indeterminate;
    cert.detail = "every sampled form is degenerate; degeneracy may or may not depend on the sample";
  } else {
    cert.verdict = LorentzVerdict::Lorentzian;
    cert.detail = std::to_string(degenerate) + " of " + std::to_string(samples.size()) +
                  " sampled forms are degenerate; not strict";
  }
  return cert;
}

}  // namespace lorentz
