// Writes the shipped model corpus: the worked fixtures plus a
// deterministic spread of random rational polytope families and matroid
// instances.  Regenerating overwrites byte-identical files.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "lorentz/model.hpp"

namespace fs = std::filesystem;
using namespace lorentz;

namespace {

Json vec_json(const Vec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i].str());
  return out;
}

Json body_json(const std::vector<Vec>& vertices) {
  Json verts = Json::array();
  for (const auto& v : vertices) verts.push_back(vec_json(v));
  return Json{{"vertices", verts}};
}

void write_model(const fs::path& dir, const std::string& name, const Json& j) {
  std::ofstream out(dir / (name + ".json"));
  out << j.dump(2) << "\n";
}

Json polytope_model(const std::string& name, const std::vector<std::vector<Vec>>& bodies) {
  Json j;
  j["format"] = 1;
  j["kind"] = "polytopes";
  j["name"] = name;
  Json list = Json::array();
  for (const auto& b : bodies) list.push_back(body_json(b));
  j["bodies"] = list;
  return j;
}

std::vector<Vec> square() {
  return {make_vec({0, 0}), make_vec({1, 0}), make_vec({0, 1}), make_vec({1, 1})};
}

std::vector<Vec> rectangle_2_half() {
  return {make_vec({0, 0}), make_vec({2, 0}), make_vec({0, Rational(1, 2)}),
          make_vec({2, Rational(1, 2)})};
}

std::vector<Vec> triangle() { return {make_vec({0, 0}), make_vec({1, 0}), make_vec({0, 1})}; }

std::vector<Vec> random_body(std::mt19937_64& rng, int dim, int npoints, int span = 4) {
  std::uniform_int_distribution<int> coord(-span, span);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Vec> pts;
  for (int k = 0; k < npoints; ++k) {
    Vec p(dim);
    for (int i = 0; i < dim; ++i) p[i] = Rational(coord(rng), den(rng));
    pts.push_back(p);
  }
  return pts;
}

bool full_dim(const std::vector<Vec>& pts, int dim) {
  Polytope p(dim, pts);
  return volume(p) > 0;
}

std::vector<Vec> random_full_dim_body(std::mt19937_64& rng, int dim, int npoints) {
  while (true) {
    std::vector<Vec> pts = random_body(rng, dim, npoints);
    if (full_dim(pts, dim)) return pts;
  }
}

}  // namespace

int main(int argc, char** argv) {
  fs::path dir = argc > 1 ? argv[1] : "data/corpus";
  fs::create_directories(dir);

  // --- worked fixtures ------------------------------------------------
  write_model(dir, "two-squares", polytope_model("two-squares", {square(), square()}));
  write_model(dir, "square-rectangle",
              polytope_model("square-rectangle", {square(), rectangle_2_half()}));
  write_model(dir, "square-triangle",
              polytope_model("square-triangle", {square(), triangle()}));

  {
    Json j;
    j["format"] = 1;
    j["kind"] = "tensor";
    j["name"] = "xyplusxz";
    j["degree"] = 2;
    j["nvars"] = 3;
    j["terms"] = Json::array({Json{{"exponents", {1, 1, 0}}, {"coefficient", "1"}},
                              Json{{"exponents", {1, 0, 1}}, {"coefficient", "1"}}});
    // e2, e3 are degenerate: pick big defaults for the deficit passes
    j["alpha"] = Json::array({"1", "1", "0"});
    j["beta"] = Json::array({"1", "0", "1"});
    write_model(dir, "xyplusxz", j);
  }
  {
    Json j;
    j["format"] = 1;
    j["kind"] = "tensor";
    j["name"] = "x2y";
    j["degree"] = 3;
    j["nvars"] = 2;
    j["terms"] = Json::array({Json{{"exponents", {2, 1}}, {"coefficient", "1"}}});
    j["alpha"] = Json::array({"1", "1"});
    j["beta"] = Json::array({"2", "1"});
    write_model(dir, "x2y", j);
  }
  {
    Json j;
    j["format"] = 1;
    j["kind"] = "tensor";
    j["name"] = "nonstrict-square";
    j["degree"] = 2;
    j["nvars"] = 2;
    j["terms"] = Json::array({Json{{"exponents", {2, 0}}, {"coefficient", "1"}},
                              Json{{"exponents", {1, 1}}, {"coefficient", "2"}},
                              Json{{"exponents", {0, 2}}, {"coefficient", "1"}}});
    write_model(dir, "nonstrict-square", j);
  }

  // --- matroid instances ----------------------------------------------
  auto matroid_model = [&](const std::string& name, const Matroid& m, const Json& divisors) {
    Json j;
    j["format"] = 1;
    j["kind"] = "matroid";
    j["name"] = name;
    j["ground_size"] = m.ground_size();
    Json bases = Json::array();
    for (std::uint32_t b : m.bases()) {
      Json basis = Json::array();
      for (int e = 0; e < m.ground_size(); ++e)
        if (b & (1u << e)) basis.push_back(e);
      bases.push_back(basis);
    }
    j["bases"] = bases;
    j["divisors"] = divisors;
    return j;
  };
  Json alpha_beta = Json::array({Json{{"kind", "alpha"}}, Json{{"kind", "beta"}}});
  write_model(dir, "u34-alpha-beta",
              matroid_model("u34-alpha-beta", Matroid::uniform(3, 4), alpha_beta));
  write_model(dir, "u35-alpha-beta",
              matroid_model("u35-alpha-beta", Matroid::uniform(3, 5), alpha_beta));
  write_model(dir, "k4-alpha-beta",
              matroid_model("k4-alpha-beta", Matroid::graphic_complete(4), alpha_beta));
  {
    // strictly submodular profile z(S) = |S|(5-|S|) against alpha+w
    Json divisors = Json::array(
        {Json{{"kind", "concave_cardinality"}, {"profile", {"4", "6", "6", "4", "0"}}},
         Json{{"kind", "alpha"}}});
    write_model(dir, "u45-ample",
                matroid_model("u45-ample", Matroid::uniform(4, 5), divisors));
  }

  // --- random rational polytope families --------------------------------
  std::mt19937_64 rng(0x5eed2025);
  int counter = 0;
  auto emit_family = [&](int dim, int s, int npoints) {
    std::vector<std::vector<Vec>> bodies;
    for (int i = 0; i < s; ++i) bodies.push_back(random_full_dim_body(rng, dim, npoints));
    std::string name = "random-n" + std::to_string(dim) + "-s" + std::to_string(s) + "-" +
                       std::to_string(counter++);
    write_model(dir, name, polytope_model(name, bodies));
  };
  for (int i = 0; i < 6; ++i) emit_family(2, 2, 5 + i % 3);
  for (int i = 0; i < 3; ++i) emit_family(2, 3, 5 + i % 2);
  for (int i = 0; i < 4; ++i) emit_family(3, 2, 6 + i % 3);
  for (int i = 0; i < 2; ++i) emit_family(3, 3, 6);
  for (int i = 0; i < 3; ++i) emit_family(4, 2, 7 + i % 2);
  emit_family(4, 3, 6);

  std::cout << "corpus written to " << dir << "\n";
  return 0;
}
