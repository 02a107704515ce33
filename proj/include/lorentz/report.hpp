#pragma once

#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lorentz/asymmetry.hpp"
#include "lorentz/model.hpp"
#include "lorentz/numdim.hpp"
#include "lorentz/stability.hpp"

namespace lorentz {

/// Six-place decimal rendering with an exactness marker; the structured
/// output always carries the exact rational strings, so nothing is lost
/// between the two.
inline std::string decimal6(const Rational& q) {
  Int scaled = numerator(q) * 1000000 / denominator(q);
  std::ostringstream out;
  Rational approx = Rational(scaled, 1000000);
  out << std::fixed << std::setprecision(6)
      << static_cast<double>(numerator(approx).convert_to<double>() /
                             denominator(approx).convert_to<double>());
  return out.str() + (approx == q ? "" : "~");
}

inline Json json_of(const Rational& q) { return q.str(); }

inline Json json_of(const Interval& v) { return Json::array({v.lo.str(), v.hi.str()}); }

inline Json json_of(const Vec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i].str());
  return out;
}

inline Json json_of(const SequenceSk& s) {
  Json out = Json::array();
  for (const auto& v : s.values) out.push_back(v.str());
  return out;
}

inline Json json_of(const Inertia& in) {
  return Json{{"n_plus", in.n_plus}, {"n_zero", in.n_zero}, {"n_minus", in.n_minus}};
}

inline Json json_of(const LorentzCertificate& cert) {
  Json out;
  out["verdict"] = verdict_name(cert.verdict);
  if (cert.support_m_convex) out["support_m_convex"] = *cert.support_m_convex;
  out["detail"] = cert.detail;
  Json witnesses = Json::array();
  for (const auto& w : cert.witnesses) {
    Json jw;
    jw["inertia"] = json_of(w.inertia);
    jw["note"] = w.note;
    Json dirs = Json::array();
    for (const auto& d : w.dirs) dirs.push_back(json_of(d));
    jw["dirs"] = dirs;
    witnesses.push_back(jw);
  }
  out["witnesses"] = witnesses;
  return out;
}

inline Json json_of(const BatteryVerdict& v) {
  Json out;
  out["id"] = v.id;
  out["status"] = verdict_status_name(v.status);
  out["lhs"] = v.lhs;
  out["rhs"] = v.rhs;
  out["slack"] = v.slack;
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

inline Json json_of(const RadiiReport& r) {
  Json out;
  out["r_in"] = r.r_in.str();
  out["R_out"] = r.R_infinite ? Json("infinity") : Json(r.R_out.str());
  out["argmin_tuple"] = r.argmin_tuple;
  out["argmax_tuple"] = r.argmax_tuple;
  if (r.heuristic) out["heuristic"] = true;
  return out;
}

inline Json json_of(const DeficitReport& rep) {
  Json out;
  out["s_sequence"] = json_of(rep.s_sequence);
  out["A_squared"] = rep.A_squared.str();
  out["A"] = json_of(rep.A);
  out["B"] = json_of(rep.B);
  out["B_zero_exact"] = rep.B_zero_exact;
  out["K"] = json_of(rep.K);
  out["K_reversed"] = json_of(rep.K_reversed);
  Json kl = Json::array();
  for (const auto& k : rep.K_l) kl.push_back(json_of(k));
  out["K_l"] = kl;
  out["sigma"] = json_of(rep.sigma);
  out["radii"] = json_of(rep.radii_report);
  if (rep.delta_alpha_omega) out["delta_alpha_omega"] = rep.delta_alpha_omega->str();
  if (rep.delta_beta_omega) out["delta_beta_omega"] = rep.delta_beta_omega->str();
  Json battery = Json::array();
  for (const auto& v : rep.battery) battery.push_back(json_of(v));
  out["battery"] = battery;
  return out;
}

inline Json json_of(const KernelFaceReport& rep) {
  Json out;
  out["nd_collection"] = rep.nd_collection;
  out["classification"] = kernel_class_name(rep.classification);
  out["zero_generators"] = rep.zero_generators;
  Json values = Json::array();
  for (const auto& v : rep.functional_values) values.push_back(v.str());
  out["functional_values"] = values;
  if (rep.maximal_index_set) {
    Json idx = Json::array();
    for (int i = 0; i < 32; ++i)
      if (*rep.maximal_index_set & (1u << i)) idx.push_back(i);
    out["maximal_index_set"] = idx;
  }
  if (!rep.movable_predicate.empty()) {
    Json preds = Json::array();
    for (const auto& [g, holds] : rep.movable_predicate)
      preds.push_back(Json{{"generator", g}, {"nd_unchanged", holds}});
    out["movable_predicate"] = preds;
  }
  return out;
}

inline Json json_of(const HallRadoResult& r) {
  Json out;
  out["product_nonzero"] = r.product_nonzero;
  out["nd_criterion"] = r.nd_criterion;
  out["agree"] = r.agree;
  if (r.violating_I) {
    Json idx = Json::array();
    for (int i = 0; i < 32; ++i)
      if (*r.violating_I & (1u << i)) idx.push_back(i);
    out["violating_I"] = idx;
  }
  return out;
}

inline Json json_of(const ConeAsymmetry& a) {
  Json out;
  out["F"] = json_of(a.F);
  out["feasible"] = a.feasible;
  out["best_gamma"] = json_of(a.best_gamma);
  out["best_volume"] = a.best_volume.str();
  out["sup_bound"] = a.sup_bound.str();
  Rational gap = a.sup_bound - a.best_volume;
  out["optimality_gap"] = (gap < 0 ? Rational(0) : gap).str();
  return out;
}

inline Json json_of(const FmpRadiiChain& chain) {
  Json out;
  out["r_gamma"] = chain.r_gamma.str();
  out["normalized_r_squared"] = chain.normalized_r_squared.str();
  out["witness_t"] = chain.witness_t.str();
  out["asymmetry"] = json_of(chain.asymmetry);
  out["F_le_radius_bound"] = json_of(chain.f_le_radius_bound);
  out["radius_bound_doubling"] = json_of(chain.radius_bound_doubling);
  if (chain.kt_radii_ratio) out["kt_radii_ratio"] = json_of(*chain.kt_radii_ratio);
  return out;
}

inline Json json_of(const EmpiricalReport& rep) {
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json row;
    row["theorem"] = r.theorem;
    row["instance"] = r.instance;
    row["exponent"] = r.exponent;
    if (r.vacuous) {
      row["vacuous"] = true;
      row["note"] = r.note;
    } else {
      row["ratio_lo"] = r.ratio_lo.str();
      if (r.ratio_hi) row["ratio_hi"] = r.ratio_hi->str();
      if (!r.note.empty()) row["note"] = r.note;
    }
    rows.push_back(row);
  }
  Json minima;
  for (const auto& [key, best] : rep.minima)
    minima[key] = Json{{"min_ratio_lo", best.first.str()}, {"instance", best.second}};
  return Json{{"rows", rows}, {"minima", minima}};
}

inline Json json_of(const ProportionalityPanel& p) {
  Json out;
  out["applicable"] = p.applicable;
  if (p.not_big_strict) out["not_big_strict"] = *p.not_big_strict;
  if (p.applicable) {
    Json conds = Json::array();
    for (bool c : p.conditions) conds.push_back(c);
    out["conditions"] = conds;
    out["agree"] = p.agree;
  }
  return out;
}

}  // namespace lorentz
