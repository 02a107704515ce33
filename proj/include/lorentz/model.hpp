#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lorentz/bodies.hpp"
#include "lorentz/cone.hpp"
#include "lorentz/matroid.hpp"
#include "lorentz/polynomial.hpp"

namespace lorentz {

using Json = nlohmann::ordered_json;

/// A model file compiled to its exact volume polynomial and cones.
struct CompiledModel {
  std::string name;
  std::string kind;
  VolumePolynomial f = VolumePolynomial(2, 1);
  ConeModel nef;
  std::optional<ConeModel> psef;
  std::vector<Vec> kahler_samples;
  std::optional<Vec> alpha, beta, omega;

  Vec default_alpha() const { return alpha ? *alpha : basis_vector(f.nvars(), 0); }
  Vec default_beta() const {
    if (beta) return *beta;
    return basis_vector(f.nvars(), f.nvars() > 1 ? 1 : 0);
  }
  Vec default_omega() const { return omega ? *omega : nef.interior_point(); }
};

namespace model_detail {

inline Rational json_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const input_error& e) {
      throw input_error(path + ": " + e.what());
    }
  }
  throw input_error(path + ": expected an integer or a rational string \"p/q\"");
}

inline Vec json_vector(const Json& j, const std::string& path, int expected_len = -1) {
  if (!j.is_array() || j.empty()) throw input_error(path + ": expected a nonempty array");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = json_rational(j[i], path + "[" + std::to_string(i) + "]");
  if (expected_len >= 0 && v.size() != expected_len)
    throw input_error(path + ": expected length " + std::to_string(expected_len) + ", got " +
                      std::to_string(v.size()));
  return v;
}

inline std::vector<Vec> json_vector_list(const Json& j, const std::string& path, int expected_len) {
  if (!j.is_array()) throw input_error(path + ": expected an array of vectors");
  std::vector<Vec> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(json_vector(j[i], path + "[" + std::to_string(i) + "]", expected_len));
  return out;
}

inline VolumePolynomial compile_tensor(const Json& j) {
  if (!j.contains("degree") || !j.contains("nvars") || !j.contains("terms"))
    throw input_error("tensor model: 'degree', 'nvars' and 'terms' are required");
  int degree = j.at("degree").get<int>();
  int nvars = j.at("nvars").get<int>();
  if (degree < 2) throw input_error("tensor model: degree must be >= 2");
  if (nvars < 1) throw input_error("tensor model: nvars must be >= 1");
  VolumePolynomial f(degree, nvars);
  const Json& terms = j.at("terms");
  if (!terms.is_array()) throw input_error("tensor model: 'terms' must be an array");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Json& t = terms[i];
    std::string path = "terms[" + std::to_string(i) + "]";
    if (!t.contains("exponents") || !t.contains("coefficient"))
      throw input_error(path + ": needs 'exponents' and 'coefficient'");
    const Json& ej = t.at("exponents");
    if (!ej.is_array() || static_cast<int>(ej.size()) != nvars)
      throw input_error(path + ".exponents: expected " + std::to_string(nvars) + " entries");
    Exponents e;
    int total = 0;
    for (const auto& x : ej) {
      int k = x.get<int>();
      if (k < 0) throw input_error(path + ".exponents: negative exponent");
      e.push_back(k);
      total += k;
    }
    if (total != degree)
      throw input_error(path + ": non-homogeneous term (exponents sum to " +
                        std::to_string(total) + ", degree is " + std::to_string(degree) + ")");
    f.add_term(e, json_rational(t.at("coefficient"), path + ".coefficient"));
  }
  return f;
}

inline VolumePolynomial compile_polytopes(const Json& j) {
  if (!j.contains("bodies")) throw input_error("polytopes model: 'bodies' is required");
  const Json& bodies = j.at("bodies");
  if (!bodies.is_array() || bodies.empty())
    throw input_error("polytopes model: 'bodies' must be a nonempty array");
  BodyFamily family;
  int dim = -1;
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    std::string path = "bodies[" + std::to_string(i) + "]";
    const Json& b = bodies[i];
    if (!b.contains("vertices")) throw input_error(path + ": needs 'vertices'");
    std::vector<Vec> pts = json_vector_list(b.at("vertices"), path + ".vertices", dim);
    if (pts.empty()) throw input_error(path + ".vertices: empty");
    if (dim < 0) {
      dim = static_cast<int>(pts[0].size());
      if (dim < 1 || dim > 4) throw input_error(path + ": ambient dimension must be 1..4");
    }
    family.bodies.emplace_back(dim, pts);
  }
  return mixed_volumes(family);
}

inline VolumePolynomial compile_matroid(const Json& j) {
  if (!j.contains("ground_size") || !j.contains("bases") || !j.contains("divisors"))
    throw input_error("matroid model: 'ground_size', 'bases' and 'divisors' are required");
  int ground = j.at("ground_size").get<int>();
  std::vector<std::uint32_t> bases;
  for (const auto& b : j.at("bases")) {
    std::uint32_t mask = 0;
    for (const auto& e : b) {
      int el = e.get<int>();
      if (el < 0 || el >= ground) throw input_error("bases: element out of range");
      mask |= 1u << el;
    }
    bases.push_back(mask);
  }
  Matroid m(ground, std::move(bases));
  ChowRingModel model = chow_ring(m);
  std::vector<DivisorSpec> divisors;
  const Json& dj = j.at("divisors");
  if (!dj.is_array() || dj.empty())
    throw input_error("matroid model: 'divisors' must be a nonempty array");
  for (std::size_t i = 0; i < dj.size(); ++i) {
    std::string path = "divisors[" + std::to_string(i) + "]";
    const Json& d = dj[i];
    std::string kind = d.value("kind", "");
    if (kind == "alpha") {
      divisors.push_back(divisor_alpha(model.lattice()));
    } else if (kind == "beta") {
      divisors.push_back(divisor_beta(model.lattice()));
    } else if (kind == "concave_cardinality") {
      std::vector<Rational> profile;
      for (const auto& p : d.at("profile")) profile.push_back(json_rational(p, path + ".profile"));
      divisors.push_back(divisor_concave_cardinality(model.lattice(), profile,
                                                     d.value("label", "w")));
    } else if (kind == "set_function") {
      std::uint32_t ground_mask = (1u << ground) - 1;
      std::vector<Rational> values(1u << ground, Rational(0));
      for (const auto& [key, value] : d.at("values").items()) {
        std::uint32_t mask = 0;
        std::size_t pos = 0;
        while (pos < key.size()) {
          std::size_t comma = key.find(',', pos);
          std::string tok = key.substr(pos, comma == std::string::npos ? comma : comma - pos);
          int el = std::stoi(tok);
          if (el < 0 || el >= ground) throw input_error(path + ".values: element out of range");
          mask |= 1u << el;
          if (comma == std::string::npos) break;
          pos = comma + 1;
        }
        if (mask == 0 || mask == ground_mask)
          throw input_error(path + ".values: subsets must be proper and nonempty");
        values[mask] = json_rational(value, path + ".values");
      }
      divisors.push_back(divisor_from_set_function(model.lattice(), values,
                                                   d.value("label", "z")));
    } else {
      throw input_error(path + ": unknown divisor kind '" + kind + "'");
    }
    if (!divisors.back().nef)
      throw input_error(path + ": divisor is not nef (set function not submodular)");
  }
  return bergman_volume_polynomial(model, divisors);
}

inline ConeModel json_cone(const Json& j, const std::string& gen_key, const std::string& facet_key,
                           const std::string& tags_key, int s, const std::string& name) {
  ConeModel cone;
  cone.name = name;
  cone.generators = json_vector_list(j.at(gen_key), gen_key, s);
  if (j.contains(facet_key))
    cone.facet_normals = json_vector_list(j.at(facet_key), facet_key, s);
  if (j.contains(tags_key)) {
    for (const auto& t : j.at(tags_key)) {
      std::string tag = t.get<std::string>();
      if (tag == "nef")
        cone.tags.push_back(GeneratorTag::Nef);
      else if (tag == "movable")
        cone.tags.push_back(GeneratorTag::Movable);
      else if (tag == "divisorial")
        cone.tags.push_back(GeneratorTag::Divisorial);
      else
        throw input_error(tags_key + ": unknown tag '" + tag + "'");
    }
  }
  cone.validate();
  return cone;
}

}  // namespace model_detail

inline CompiledModel compile_model(const Json& j) {
  if (!j.is_object()) throw input_error("model: expected a JSON object");
  if (j.value("format", 0) != 1) throw input_error("model: unsupported 'format' (expected 1)");
  CompiledModel out;
  out.kind = j.value("kind", "");
  out.name = j.value("name", "unnamed");
  if (out.kind == "tensor")
    out.f = model_detail::compile_tensor(j);
  else if (out.kind == "polytopes")
    out.f = model_detail::compile_polytopes(j);
  else if (out.kind == "matroid")
    out.f = model_detail::compile_matroid(j);
  else
    throw input_error("model: unknown kind '" + out.kind + "' (tensor|polytopes|matroid)");

  const int s = out.f.nvars();
  if (j.contains("nef_generators"))
    out.nef = model_detail::json_cone(j, "nef_generators", "facet_normals", "nef_tags", s, "nef");
  else
    out.nef = ConeModel::positive_orthant(s, "nef");
  if (j.contains("psef_generators"))
    out.psef = model_detail::json_cone(j, "psef_generators", "psef_facet_normals", "tags", s, "psef");
  if (j.contains("kahler_samples"))
    out.kahler_samples = model_detail::json_vector_list(j.at("kahler_samples"), "kahler_samples", s);
  if (j.contains("alpha")) out.alpha = model_detail::json_vector(j.at("alpha"), "alpha", s);
  if (j.contains("beta")) out.beta = model_detail::json_vector(j.at("beta"), "beta", s);
  if (j.contains("omega")) out.omega = model_detail::json_vector(j.at("omega"), "omega", s);
  if (out.omega && !out.nef.contains(*out.omega))
    throw input_error("omega: not inside the nef cone model");
  return out;
}

inline CompiledModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open model file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw input_error("model '" + path + "': JSON parse error: " + e.what());
  }
  try {
    return compile_model(j);
  } catch (const input_error& e) {
    throw input_error("model '" + path + "': " + e.what());
  }
}

}  // namespace lorentz
