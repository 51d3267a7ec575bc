// Copyright 2026 The ouspec Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "ouspec/cli.hpp"

#include <fstream>
#include <thread>

#include "CLI11.hpp"
#include "ouspec/censym_model.hpp"
#include "ouspec/errors.hpp"
#include "ouspec/harness.hpp"
#include "ouspec/json_io.hpp"
#include "ouspec/order_unit.hpp"

namespace ouspec {

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SpacePtr build_space(const CliConfig& cfg, const std::optional<Json>& doc) {
  Tol tol;
  tol.eq_tol = cfg.tol;
  if (!tol.valid()) throw Usage("--tol must be positive");
  std::string model = cfg.model;
  if (model.empty() && doc && doc->is_object() && doc->contains("model")) model = doc->at("model").get<std::string>();
  if (model.empty()) throw Usage("--model is required");
  std::optional<int> dim = cfg.dim;
  if (!dim && doc && doc->is_object() && doc->contains("n")) dim = doc->at("n").get<int>();
  if (!dim && model == "censym") dim = 2;
  if (!dim) throw Usage("--dim is required");
  try {
    if (model == "fn") {
      if (!cfg.family.empty()) throw Usage("--family only applies to --model censym");
      return ModelSpace::fn(*dim, tol);
    }
    if (model == "jb") {
      if (!cfg.family.empty()) throw Usage("--family only applies to --model censym");
      return ModelSpace::jb(*dim, tol);
    }
    if (model == "censym") {
      if (!cfg.family.empty()) return ModelSpace::censym(parse_family(cfg.family, *dim), tol);
      if (doc && doc->is_object() && doc->contains("family"))
        return ModelSpace::censym(family_from_json(doc->at("family"), *dim), tol);
      throw Usage("--model censym needs --family");
    }
  } catch (const Error& e) {
    throw Usage(e.what());
  }
  throw Usage("unknown model '" + model + "' (fn, jb or censym)");
}

std::optional<Json> load_input(const CliConfig& cfg) {
  if (cfg.input.empty()) return std::nullopt;
  try {
    return read_json_file(cfg.input);
  } catch (const Error& e) {
    throw Usage(e.what());
  }
}

AElem input_element(const std::optional<Json>& doc, const SpacePtr& s) {
  if (!doc) throw Usage("--input is required");
  try {
    return element_from_json(*doc, s);
  } catch (const Error& e) {
    throw Usage(e.what());
  }
}

void emit(const CliConfig& cfg, const Json& j, std::ostream& out) {
  const std::string text = dump(j);
  if (cfg.report.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.report, std::ios::binary);
  if (!f) throw Usage("cannot write '" + cfg.report + "'");
  f << text;
}

template <class F>
int guarded(std::ostream& err, F&& f) {
  try {
    return f();
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolation;
  }
}

std::vector<double> default_grid(const AElem& a, const CompressionBase& b) {
  const auto [lo, hi] = b.bounds(a);
  std::vector<double> g;
  const int k = 10;
  for (int i = 0; i <= k; ++i) g.push_back(lo + (hi - lo) * i / k);
  return g;
}

}  // namespace

int cmd_check(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SpacePtr s = build_space(cfg, load_input(cfg));
    if (cfg.trials < 1) throw Usage("--trials must be positive");
    std::vector<std::string> suites = cfg.suites.empty() ? suites_for(*s) : cfg.suites;
    const int threads = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    std::vector<Report> reports;
    for (const auto& name : suites) {
      try {
        reports.push_back(run_suite(name, s, cfg.trials, cfg.seed, threads));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::UnknownSuite) throw Usage(e.what());
        throw;
      }
    }
    const Report r = merge_reports(reports);
    emit(cfg, report_to_json(r), out);
    err << s->describe() << ": " << r.summary.passed << " passed, " << r.summary.failed << " failed, "
        << r.summary.skipped << " skipped\n";
    for (const auto& c : r.cases)
      if (!c.pass && !c.skipped) err << "  FAIL " << c.check << ": " << c.note << "\n";
    return r.ok() ? kExitOk : kExitViolation;
  });
}

int cmd_spectral(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto doc = load_input(cfg);
    const SpacePtr s = build_space(cfg, doc);
    const AElem a = input_element(doc, s);
    if (!(cfg.mesh > 0)) throw Usage("--mesh must be positive");
    const BasePtr b = default_base(s);
    if (!b->has_comparability()) {
      throw Error(ErrorCode::ComparabilityUnavailable, b->comparability_certificate());
    }
    std::vector<double> grid = cfg.grid.empty() ? default_grid(a, *b) : cfg.grid;
    if (!std::is_sorted(grid.begin(), grid.end())) throw Usage("--grid must be ascending");
    const SpectralData d = spectral_resolution(a, *b, grid);
    const Reconstruction rec = riemann_reconstruct(a, *b, cfg.mesh);
    emit(cfg, spectral_to_json(d, rec, cfg.mesh), out);
    const auto bad = verify_spectral_data(d, *b);
    for (const auto& m : bad) err << "violation: " << m << "\n";
    return bad.empty() && rec.error <= cfg.mesh ? kExitOk : kExitViolation;
  });
}

int cmd_decompose(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto doc = load_input(cfg);
    const SpacePtr s = build_space(cfg, doc);
    const AElem a = input_element(doc, s);
    const BasePtr b = default_base(s);
    if (!b->has_comparability()) {
      throw Error(ErrorCode::ComparabilityUnavailable, b->comparability_certificate());
    }
    const Decomposition d = orthogonal_decomposition(a, *b);
    emit(cfg,
         Json{{"a", element_to_json(a)},
              {"p", element_to_json(d.p.elem())},
              {"pos", element_to_json(d.pos)},
              {"neg", element_to_json(d.neg)},
              {"abs", element_to_json(d.abs)}},
         out);
    return kExitOk;
  });
}

int cmd_classify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto doc = load_input(cfg);
    if (!doc) throw Usage("--input is required");
    CliConfig c2 = cfg;
    if (c2.model.empty()) c2.model = "censym";
    if (c2.model != "censym") throw Usage("classify needs --model censym");
    // Accept a bare y vector, {"y": [...]}, or a full element.
    Json el;
    if (doc->is_array() || (doc->is_object() && doc->contains("y") && !doc->contains("data"))) {
      Json y = doc->is_array() ? *doc : doc->at("y");
      if (!y.is_array()) throw Usage("y must be an array");
      Json data = Json::array({0.5});
      for (const auto& v : y) data.push_back(v);
      if (!c2.dim) c2.dim = static_cast<int>(y.size());
      el = Json{{"model", "censym"}, {"data", data}};
      if (doc->is_object() && doc->contains("family")) el["family"] = doc->at("family");
    } else {
      el = *doc;
    }
    const SpacePtr s = build_space(c2, el);
    if (!el.contains("n")) el["n"] = s->n();
    const AElem p = input_element(el, s);
    const FocusClassification fc = classify_focus(p);
    if (fc.kind == FocusKind::NotAFocus) throw Error(ErrorCode::NotSharpFocus, fc.reason);
    auto face_json = [](const DualityFace& f) {
      static const char* kinds[] = {"singleton", "segment", "polytope", "approximate"};
      Json pts = Json::array();
      for (const auto& x : f.points) {
        Json v = Json::array();
        for (Eigen::Index i = 0; i < x.size(); ++i) v.push_back(x[i]);
        pts.push_back(v);
      }
      return Json{{"kind", kinds[static_cast<int>(f.kind)]}, {"points", pts}, {"diameter", f.diameter}};
    };
    Json primal = Json::array();
    for (const auto& f : fc.primal) primal.push_back(face_json(f));
    emit(cfg,
         Json{{"focus", element_to_json(p)},
              {"classification", std::string(to_string(fc.kind))},
              {"dual_face", fc.dual ? face_json(*fc.dual) : Json(nullptr)},
              {"primal_faces", primal},
              {"reason", fc.reason}},
         out);
    err << to_string(fc.kind) << "\n";
    return kExitOk;
  });
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral theory toolkit for order unit spaces", "ouspec"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  CliConfig cfg;
  std::string grid;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--model", cfg.model, "fn, jb or censym");
    sub->add_option("--dim", cfg.dim, "dimension n");
    sub->add_option("--family", cfg.family, "censym norm family: lp:P, lp:inf or stadium:S,R");
    sub->add_option("--tol", cfg.tol, "equality tolerance")->capture_default_str();
    sub->add_option("--input", cfg.input, "element JSON file");
    sub->add_option("--report", cfg.report, "write JSON here instead of stdout");
  };
  auto* check = app.add_subcommand("check", "run the property suites for a model");
  common(check);
  check->add_option("--trials", cfg.trials, "trials per case")->capture_default_str();
  check->add_option("--seed", cfg.seed, "base seed")->capture_default_str();
  check->add_option("--suite", cfg.suites, "restrict to these suites");
  check->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
  auto* spectral = app.add_subcommand("spectral", "spectral data of an element");
  common(spectral);
  spectral->add_option("--mesh", cfg.mesh, "Riemann mesh")->capture_default_str();
  spectral->add_option("--grid", grid, "comma separated ascending lambdas");
  auto* classify = app.add_subcommand("classify", "classify a centrally symmetric focus");
  common(classify);
  auto* decompose = app.add_subcommand("decompose", "orthogonal decomposition a = a+ - a-");
  common(decompose);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (!grid.empty()) {
    std::stringstream ss(grid);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        cfg.grid.push_back(std::stod(item));
      } catch (const std::exception&) {
        err << "error: bad --grid value '" << item << "'\n";
        return kExitUsage;
      }
    }
  }
  if (check->parsed()) return cmd_check(cfg, out, err);
  if (spectral->parsed()) return cmd_spectral(cfg, out, err);
  if (classify->parsed()) return cmd_classify(cfg, out, err);
  return cmd_decompose(cfg, out, err);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"ouspec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ouspec
