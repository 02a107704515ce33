// Command-line surface: model ingestion, certification, the numerical
// dimension / kernel-face machinery, deficits and the stability battery,
// plus the corpus batch runner with its CSV outputs.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include <CLI11.hpp>

#include "lorentz/report.hpp"

namespace fs = std::filesystem;
using namespace lorentz;

namespace {

struct CommonOptions {
  std::string model_path;
  std::string alpha, beta, omega;
  std::string collection;
  unsigned precision_bits = 128;
  int samples = 16;
  std::string format = "text";
  std::string out_path;
};

constexpr int kExitOk = 0;
constexpr int kExitVerdictFailure = 1;
constexpr int kExitInputError = 2;

/// Vector literals: "e2" for a standard basis vector or a
/// comma-separated rational list "1,3/2,0".
Vec parse_vector(const std::string& text, int s) {
  if (text.size() >= 2 && text[0] == 'e') {
    bool digits = true;
    for (std::size_t i = 1; i < text.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) digits = false;
    if (digits) {
      int k = std::stoi(text.substr(1));
      if (k < 1 || k > s)
        throw input_error("basis vector '" + text + "' out of range 1.." + std::to_string(s));
      return basis_vector(s, k - 1);
    }
  }
  std::vector<Rational> entries;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    entries.push_back(parse_rational(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(entries.size()) != s)
    throw input_error("vector '" + text + "' has " + std::to_string(entries.size()) +
                      " entries, expected " + std::to_string(s));
  Vec v(s);
  for (int i = 0; i < s; ++i) v[i] = entries[i];
  return v;
}

/// Collections: vectors separated by ';', or a comma list of e-shorthands
/// ("e2,e3") where each token is its own vector.
std::vector<Vec> parse_collection(const std::string& text, int s) {
  std::vector<std::string> parts;
  if (text.find(';') == std::string::npos && text.find(',') != std::string::npos) {
    bool all_basis = true;
    std::size_t pos = 0;
    std::vector<std::string> tokens;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
      tokens.push_back(tok);
      if (tok.empty() || tok[0] != 'e') all_basis = false;
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (all_basis)
      parts = tokens;
    else
      parts.push_back(text);
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t semi = text.find(';', pos);
      parts.push_back(text.substr(pos, semi == std::string::npos ? semi : semi - pos));
      if (semi == std::string::npos) break;
      pos = semi + 1;
    }
  }
  std::vector<Vec> out;
  for (const auto& p : parts) out.push_back(parse_vector(p, s));
  if (out.empty()) throw input_error("empty collection");
  return out;
}

void emit(const CommonOptions& opt, const Json& structured, const std::string& text) {
  std::string payload = opt.format == "structured" ? structured.dump(2) + "\n" : text;
  if (opt.out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(opt.out_path);
    if (!out) throw input_error("cannot open output file '" + opt.out_path + "'");
    out << payload;
  }
}

RootPrecision precision_of(const CommonOptions& opt) {
  RootPrecision prec = RootPrecision::defaults();
  prec.start = opt.precision_bits;
  if (prec.cap < prec.start) prec.cap = prec.start;
  return prec;
}

SamplePlan plan_of(const CommonOptions& opt) {
  SamplePlan plan;
  plan.count = opt.samples;
  return plan;
}

std::string render_battery_text(const std::vector<BatteryVerdict>& battery) {
  std::ostringstream out;
  for (const auto& v : battery) {
    out << "  " << std::left << std::setw(26) << v.id << " " << std::setw(13)
        << verdict_status_name(v.status) << " lhs=" << v.lhs << " rhs=" << v.rhs;
    if (!v.note.empty()) out << "  (" << v.note << ")";
    out << "\n";
  }
  return out.str();
}

int run_certify(const CommonOptions& opt, const std::string& expect) {
  CompiledModel model = load_model(opt.model_path);
  LorentzCertificate cone_cert = check_cone_lorentzian(model.f, model.nef, plan_of(opt));
  LorentzCertificate strict_cert;
  bool strict_ran = false;
  if (cone_cert.passed()) {
    strict_cert = check_strict(model.f, model.nef, plan_of(opt));
    strict_ran = true;
  }
  Json j;
  j["model"] = model.name;
  j["cone_certificate"] = json_of(cone_cert);
  if (strict_ran) j["strict_certificate"] = json_of(strict_cert);
  std::ostringstream text;
  text << "model " << model.name << ": " << verdict_name(cone_cert.verdict);
  if (!cone_cert.detail.empty()) text << " (" << cone_cert.detail << ")";
  if (strict_ran) {
    text << "\nstrictness: " << verdict_name(strict_cert.verdict);
    if (!strict_cert.detail.empty()) text << " (" << strict_cert.detail << ")";
  }
  text << "\n";
  emit(opt, j, text.str());
  if (expect == "lorentzian" && !cone_cert.passed()) return kExitVerdictFailure;
  if (expect == "strict" &&
      (!strict_ran || strict_cert.verdict != LorentzVerdict::StrictlyLorentzian))
    return kExitVerdictFailure;
  return kExitOk;
}

int run_nd(const CommonOptions& opt) {
  CompiledModel model = load_model(opt.model_path);
  const int s = model.f.nvars();
  Vec omega = opt.omega.empty() ? model.default_omega() : parse_vector(opt.omega, s);
  Json j;
  j["model"] = model.name;
  std::ostringstream text;
  if (!opt.collection.empty()) {
    NefCollection coll{parse_collection(opt.collection, s), omega};
    int nd = nd_collection(model.f, coll);
    j["nd_collection"] = nd;
    text << "nd(collection) = " << nd << "\n";
  } else {
    Vec L = opt.alpha.empty() ? model.default_alpha() : parse_vector(opt.alpha, s);
    int nd = nd_omega(model.f, L, omega);
    j["nd_omega"] = nd;
    text << "nd(L) = " << nd << "\n";
  }
  emit(opt, j, text.str());
  return kExitOk;
}

int run_hall_rado(const CommonOptions& opt) {
  CompiledModel model = load_model(opt.model_path);
  const int s = model.f.nvars();
  if (opt.collection.empty()) throw input_error("hall-rado requires --collection");
  Vec omega = opt.omega.empty() ? model.default_omega() : parse_vector(opt.omega, s);
  NefCollection coll{parse_collection(opt.collection, s), omega};
  HallRadoResult result = hall_rado(model.f, coll, model.nef, plan_of(opt));
  Json j;
  j["model"] = model.name;
  j["hall_rado"] = json_of(result);
  std::ostringstream text;
  text << "product_nonzero = " << (result.product_nonzero ? "true" : "false")
       << ", nd_criterion = " << (result.nd_criterion ? "true" : "false")
       << ", agree = " << (result.agree ? "true" : "false") << "\n";
  if (result.violating_I) {
    text << "violating I = {";
    bool first = true;
    for (int i = 0; i < 32; ++i)
      if (*result.violating_I & (1u << i)) {
        text << (first ? "" : ", ") << i + 1;
        first = false;
      }
    text << "}\n";
  }
  emit(opt, j, text.str());
  return kExitOk;
}

int run_kernel_face(const CommonOptions& opt) {
  CompiledModel model = load_model(opt.model_path);
  const int s = model.f.nvars();
  if (opt.collection.empty()) throw input_error("kernel-face requires --collection (d-1 classes)");
  Vec omega = opt.omega.empty() ? model.default_omega() : parse_vector(opt.omega, s);
  NefCollection coll{parse_collection(opt.collection, s), omega};
  const ConeModel& cone = model.psef ? *model.psef : model.nef;
  KernelFaceReport report = kernel_face(model.f, coll, cone);
  Json j;
  j["model"] = model.name;
  j["cone"] = cone.name;
  j["kernel_face"] = json_of(report);
  std::ostringstream text;
  text << "classification: " << kernel_class_name(report.classification)
       << " (nd = " << report.nd_collection << ")\nzero generators:";
  for (int g : report.zero_generators) text << " " << g;
  text << "\n";
  emit(opt, j, text.str());
  return kExitOk;
}

int run_sequence(const CommonOptions& opt) {
  CompiledModel model = load_model(opt.model_path);
  const int s = model.f.nvars();
  Vec alpha = opt.alpha.empty() ? model.default_alpha() : parse_vector(opt.alpha, s);
  Vec beta = opt.beta.empty() ? model.default_beta() : parse_vector(opt.beta, s);
  SequenceSk seq = sequence_sk(model.f, alpha, beta);
  Json j;
  j["model"] = model.name;
  j["s_sequence"] = json_of(seq);
  std::ostringstream text;
  text << "s_k =";
  for (const auto& v : seq.values) text << " " << v.str();
  text << "\n";
  emit(opt, j, text.str());
  return kExitOk;
}

int run_deficits(const CommonOptions& opt) {
  CompiledModel model = load_model(opt.model_path);
  const int s = model.f.nvars();
  Vec alpha = opt.alpha.empty() ? model.default_alpha() : parse_vector(opt.alpha, s);
  Vec beta = opt.beta.empty() ? model.default_beta() : parse_vector(opt.beta, s);
  Vec omega = opt.omega.empty() ? model.default_omega() : parse_vector(opt.omega, s);
  DeficitReport rep =
      compute_deficit_report(model.f, alpha, beta, omega, model.nef, precision_of(opt));
  ProportionalityPanel panel = proportionality_panel(model.f, alpha, beta);
  Json j;
  j["model"] = model.name;
  j["deficits"] = json_of(rep);
  j["proportionality_panel"] = json_of(panel);
  std::ostringstream text;
  text << "s_k =";
  for (const auto& v : rep.s_sequence.values) text << " " << v.str();
  text << "\nA^2 = " << rep.A_squared.str() << " (exact), A in [" << decimal6(rep.A.lo) << ", "
       << decimal6(rep.A.hi) << "]\nB in [" << decimal6(rep.B.lo) << ", " << decimal6(rep.B.hi)
       << "]" << (rep.B_zero_exact ? " (exactly 0)" : "") << "\nK = " << rep.K.lo.str()
       << (rep.K.is_point() ? " (exact)" : ".." + rep.K.hi.str())
       << "\nsigma in [" << decimal6(rep.sigma.lo) << ", " << decimal6(rep.sigma.hi)
       << "]\nr = " << rep.radii_report.r_in.str() << ", R = "
       << (rep.radii_report.R_infinite ? "infinity" : rep.radii_report.R_out.str()) << "\n"
       << render_battery_text(rep.battery);
  emit(opt, j, text.str());
  return kExitOk;
}

int run_radii(const CommonOptions& opt) {
  CompiledModel model = load_model(opt.model_path);
  const int s = model.f.nvars();
  Vec alpha = opt.alpha.empty() ? model.default_alpha() : parse_vector(opt.alpha, s);
  Vec beta = opt.beta.empty() ? model.default_beta() : parse_vector(opt.beta, s);
  RadiiReport rep = radii(model.f, alpha, beta, model.nef);
  Json j;
  j["model"] = model.name;
  j["radii"] = json_of(rep);
  std::ostringstream text;
  text << "r = " << rep.r_in.str() << ", R = "
       << (rep.R_infinite ? "infinity" : rep.R_out.str()) << "\n";
  emit(opt, j, text.str());
  return kExitOk;
}

int run_stability(const CommonOptions& opt) {
  CompiledModel model = load_model(opt.model_path);
  const int s = model.f.nvars();
  Vec alpha = opt.alpha.empty() ? model.default_alpha() : parse_vector(opt.alpha, s);
  Vec beta = opt.beta.empty() ? model.default_beta() : parse_vector(opt.beta, s);
  Vec omega = opt.omega.empty() ? model.default_omega() : parse_vector(opt.omega, s);
  std::vector<BatteryVerdict> battery =
      inequality_battery(model.f, alpha, beta, omega, model.nef, precision_of(opt));
  Json j;
  j["model"] = model.name;
  Json items = Json::array();
  bool failed = false;
  for (const auto& v : battery) {
    items.push_back(json_of(v));
    if (v.status == VerdictStatus::Fail) failed = true;
  }
  j["battery"] = items;
  emit(opt, j, render_battery_text(battery));
  return failed ? kExitVerdictFailure : kExitOk;
}

int run_fmp(const CommonOptions& opt) {
  CompiledModel model = load_model(opt.model_path);
  const int s = model.f.nvars();
  Vec alpha = opt.alpha.empty() ? model.default_alpha() : parse_vector(opt.alpha, s);
  Vec beta = opt.beta.empty() ? model.default_beta() : parse_vector(opt.beta, s);
  Vec omega = opt.omega.empty() ? model.default_omega() : parse_vector(opt.omega, s);
  FmpRadiiChain chain = fmp_radii_chain(model.f, alpha, beta, omega, model.nef, precision_of(opt));
  Json j;
  j["model"] = model.name;
  j["fmp_chain"] = json_of(chain);
  std::ostringstream text;
  text << "r_Gamma = " << chain.r_gamma.str()
       << ", normalized r^2 = " << chain.normalized_r_squared.str()
       << ", witness t* = " << chain.witness_t.str() << "\nF in ["
       << decimal6(chain.asymmetry.F.lo) << ", " << decimal6(chain.asymmetry.F.hi) << "]\n";
  std::vector<BatteryVerdict> chain_verdicts{chain.f_le_radius_bound,
                                             chain.radius_bound_doubling};
  text << render_battery_text(chain_verdicts);
  emit(opt, j, text.str());
  bool failed = chain.f_le_radius_bound.status == VerdictStatus::Fail ||
                chain.radius_bound_doubling.status == VerdictStatus::Fail;
  return failed ? kExitVerdictFailure : kExitOk;
}

std::string csv_escape(const std::string& s) {
  if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int run_corpus(const std::string& dir, const CommonOptions& opt, int jobs) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw input_error("corpus directory '" + dir + "' has no .json models");

  struct InstanceResult {
    std::string name;
    int d = 0, s = 0;
    LorentzCertificate cone_cert, strict_cert;
    DeficitReport deficits;
    bool failed = false;
  };
  std::vector<InstanceResult> results(files.size());
  std::vector<DeficitInstance> instances(files.size());

  std::mutex next_mutex;
  std::size_t next = 0;
  auto worker = [&]() {
    while (true) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> lock(next_mutex);
        if (next >= files.size()) return;
        i = next++;
      }
      CompiledModel model = load_model(files[i].string());
      InstanceResult& r = results[i];
      r.name = model.name;
      r.d = model.f.degree();
      r.s = model.f.nvars();
      Vec alpha = model.default_alpha(), beta = model.default_beta(),
          omega = model.default_omega();
      r.cone_cert = check_cone_lorentzian(model.f, model.nef, plan_of(opt));
      if (r.cone_cert.passed()) r.strict_cert = check_strict(model.f, model.nef, plan_of(opt));
      r.deficits =
          compute_deficit_report(model.f, alpha, beta, omega, model.nef, precision_of(opt));
      for (const auto& v : r.deficits.battery)
        if (v.status == VerdictStatus::Fail) r.failed = true;
      instances[i] = DeficitInstance{model.name, model.f, alpha, beta, omega, model.nef};
    }
  };
  std::vector<std::thread> pool;
  int nthreads = std::max(1, std::min<int>(jobs, static_cast<int>(files.size())));
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  EmpiricalReport empirical = empirical_constants(instances, precision_of(opt));

  Json j;
  j["corpus"] = dir;
  Json inst = Json::array();
  bool any_failed = false;
  for (const auto& r : results) {
    Json one;
    one["instance"] = r.name;
    one["d"] = r.d;
    one["s"] = r.s;
    one["certificate"] = verdict_name(r.cone_cert.verdict);
    one["strictness"] = verdict_name(r.strict_cert.verdict);
    one["deficits"] = json_of(r.deficits);
    inst.push_back(one);
    if (r.failed) any_failed = true;
  }
  j["instances"] = inst;
  j["empirical_constants"] = json_of(empirical);

  // Aggregate CSV: one row per instance with the headline numbers and a
  // slack column per battery family (the last member of each family in
  // the deterministic battery order).
  const std::vector<std::string> battery_families{
      "rkt",          "bonnesen_fenchel", "stab_kt_half",   "surface_bonnesen",
      "af_induction", "radius_bound",     "compradii",      "kt_dominates_bm",
      "logconc",      "schneider",        "monotone_order", "af_dominates_bm"};
  std::ostringstream csv;
  csv << "instance,d,s,A2,B_lo,B_hi,K_lo,K_hi,sigma_lo,sigma_hi,r,R";
  for (const auto& fam : battery_families) csv << "," << fam << "_slack";
  csv << "\n";
  for (const auto& r : results) {
    csv << csv_escape(r.name) << "," << r.d << "," << r.s << "," << r.deficits.A_squared.str()
        << "," << r.deficits.B.lo.str() << "," << r.deficits.B.hi.str() << ","
        << r.deficits.K.lo.str() << "," << r.deficits.K.hi.str() << ","
        << r.deficits.sigma.lo.str() << "," << r.deficits.sigma.hi.str() << ","
        << r.deficits.radii_report.r_in.str() << ","
        << (r.deficits.radii_report.R_infinite ? "infinity" : r.deficits.radii_report.R_out.str());
    for (const auto& fam : battery_families) {
      std::string worst = "-";
      for (const auto& v : r.deficits.battery)
        if (v.id.rfind(fam, 0) == 0 && v.status == VerdictStatus::Pass && v.slack != "-")
          worst = v.slack;
      csv << "," << csv_escape(worst);
    }
    csv << "\n";
  }
  std::ostringstream ccsv;
  ccsv << "theorem,exponent,instance,ratio_lo,ratio_hi,vacuous,note\n";
  for (const auto& row : empirical.rows) {
    ccsv << row.theorem << "," << csv_escape(row.exponent) << "," << csv_escape(row.instance)
         << "," << (row.vacuous ? "-" : row.ratio_lo.str()) << ","
         << (row.ratio_hi ? row.ratio_hi->str() : "-") << "," << (row.vacuous ? "1" : "0") << ","
         << csv_escape(row.note) << "\n";
  }

  std::string base = opt.out_path.empty() ? "corpus_report" : opt.out_path;
  {
    std::ofstream out(base + ".json");
    out << j.dump(2) << "\n";
    std::ofstream csv_out(base + ".csv");
    csv_out << csv.str();
    std::ofstream constants_out(base + "_constants.csv");
    constants_out << ccsv.str();
  }
  std::cout << "corpus: " << results.size() << " instances; reports written to " << base
            << ".json, " << base << ".csv, " << base << "_constants.csv\n";
  for (const auto& [key, best] : empirical.minima)
    std::cout << "  min " << key << " = " << best.first.str() << "  (" << best.second << ")\n";
  return any_failed ? kExitVerdictFailure : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certification and stability toolkit for Lorentzian volume polynomials"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string expect;
  std::string corpus_dir;
  int jobs = 4;

  auto add_common = [&](CLI::App* cmd, bool needs_model = true) {
    if (needs_model) cmd->add_option("--model", opt.model_path, "model file (JSON)")->required();
    cmd->add_option("--alpha", opt.alpha, "class alpha (e.g. e1 or 1,1/2)");
    cmd->add_option("--beta", opt.beta, "class beta");
    cmd->add_option("--omega", opt.omega, "interior reference class");
    cmd->add_option("--collection", opt.collection, "nef collection (vectors separated by ';')");
    cmd->add_option("--precision-bits", opt.precision_bits, "starting root precision")
        ->default_val(128);
    cmd->add_option("--samples", opt.samples, "deterministic interior samples")->default_val(16);
    cmd->add_option("--format", opt.format, "text|structured")->default_val("text");
    cmd->add_option("--out", opt.out_path, "write the report to a file");
  };

  CLI::App* certify = app.add_subcommand("certify", "certify (strictly) Lorentzian");
  add_common(certify);
  certify->add_option("--expect", expect, "lorentzian|strict: exit 1 on a weaker verdict");

  CLI::App* nd = app.add_subcommand("nd", "numerical dimension of a class or collection");
  add_common(nd);
  CLI::App* hall = app.add_subcommand("hall-rado", "Hall-Rado criterion for a collection");
  add_common(hall);
  CLI::App* kernel = app.add_subcommand("kernel-face", "kernel face of a Lefschetz operator");
  add_common(kernel);
  CLI::App* sequence = app.add_subcommand("sequence", "the s_k intersection sequence");
  add_common(sequence);
  CLI::App* deficits = app.add_subcommand("deficits", "AF/BM/KT deficits, radii and the battery");
  add_common(deficits);
  CLI::App* radii_cmd = app.add_subcommand("radii", "in/out-radius over the nef cone");
  add_common(radii_cmd);
  CLI::App* stability = app.add_subcommand("stability", "explicit-constant inequality battery");
  add_common(stability);
  CLI::App* fmp = app.add_subcommand("fmp", "asymmetry index and the radii chain");
  add_common(fmp);
  CLI::App* corpus = app.add_subcommand("corpus", "run the full battery over a model directory");
  corpus->add_option("dir", corpus_dir, "directory of model files")->required();
  add_common(corpus, false);
  corpus->add_option("--jobs", jobs, "worker count")->default_val(4);

  CLI11_PARSE(app, argc, argv);

  try {
    if (certify->parsed()) return run_certify(opt, expect);
    if (nd->parsed()) return run_nd(opt);
    if (hall->parsed()) return run_hall_rado(opt);
    if (kernel->parsed()) return run_kernel_face(opt);
    if (sequence->parsed()) return run_sequence(opt);
    if (deficits->parsed()) return run_deficits(opt);
    if (radii_cmd->parsed()) return run_radii(opt);
    if (stability->parsed()) return run_stability(opt);
    if (fmp->parsed()) return run_fmp(opt);
    if (corpus->parsed()) return run_corpus(corpus_dir, opt, jobs);
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
