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

#include "ouspec/json_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "ouspec/errors.hpp"

namespace ouspec {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const Json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "Infinity") return std::numeric_limits<double>::infinity();
  }
  parse_fail(std::string("expected a number for ") + what);
}

void flatten(const Json& j, std::vector<double>& out) {
  if (j.is_array()) {
    for (const auto& x : j) flatten(x, out);
  } else {
    out.push_back(number(j, "data"));
  }
}

ModelKind model_from_string(const std::string& s) {
  if (s == "fn") return ModelKind::Fn;
  if (s == "jb") return ModelKind::JB;
  if (s == "censym") return ModelKind::CenSym;
  parse_fail("unknown model '" + s + "'");
}

SpacePtr space_from_json(const Json& j, const Tol& tol) {
  const auto kind = model_from_string(field(j, "model").get<std::string>());
  const Json& nj = field(j, "n");
  if (!nj.is_number_integer()) parse_fail("'n' must be an integer");
  const int n = nj.get<int>();
  switch (kind) {
    case ModelKind::Fn: return ModelSpace::fn(n, tol);
    case ModelKind::JB: return ModelSpace::jb(n, tol);
    case ModelKind::CenSym: break;
  }
  const Json& fj = j.contains("family") ? j.at("family") : j;
  return ModelSpace::censym(family_from_json(fj, n), tol);
}

Json vec_json(const Eigen::VectorXd& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

}  // namespace

Json family_to_json(const NormFamily& fam) {
  if (fam.kind() == NormFamily::Kind::Stadium) {
    return Json{{"family", "stadium"}, {"s", fam.s()}, {"r", fam.r()}};
  }
  Json p = std::isinf(fam.p()) ? Json("inf") : Json(fam.p());
  return Json{{"family", "lp"}, {"p", p}};
}

NormFamily family_from_json(const Json& j, int n) {
  const auto name = field(j, "family").get<std::string>();
  if (name == "lp") return NormFamily::lp(number(field(j, "p"), "p"), n);
  if (name == "stadium") {
    if (n != 2) throw Error(ErrorCode::InvalidDimension, "stadium family is two-dimensional");
    return NormFamily::stadium(number(field(j, "s"), "s"), number(field(j, "r"), "r"));
  }
  parse_fail("unknown family '" + name + "'");
}

NormFamily parse_family(const std::string& text, int n) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) parse_fail("family must look like lp:1.5 or stadium:1,1");
  const std::string name = text.substr(0, colon);
  const std::string args = text.substr(colon + 1);
  auto to_d = [&](const std::string& s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      parse_fail("bad number '" + s + "' in family");
    }
    if (used != s.size()) parse_fail("bad number '" + s + "' in family");
    return v;
  };
  if (name == "lp") return NormFamily::lp(to_d(args), n);
  if (name == "stadium") {
    const auto comma = args.find(',');
    if (comma == std::string::npos) parse_fail("stadium needs s,r");
    if (n != 2) throw Error(ErrorCode::InvalidDimension, "stadium family is two-dimensional");
    return NormFamily::stadium(to_d(args.substr(0, comma)), to_d(args.substr(comma + 1)));
  }
  parse_fail("unknown family '" + name + "'");
}

Json element_to_json(const AElem& a) {
  const auto& sp = *a.space();
  Json j{{"model", std::string(to_string(sp.kind()))}, {"n", sp.n()}, {"data", vec_json(a.payload())}};
  if (sp.kind() == ModelKind::CenSym) j["family"] = family_to_json(sp.family());
  return j;
}

AElem element_from_json(const Json& j, const Tol& tol) { return element_from_json(j, space_from_json(j, tol)); }

AElem element_from_json(const Json& j, const SpacePtr& space) {
  const auto kind = model_from_string(field(j, "model").get<std::string>());
  if (kind != space->kind()) parse_fail("element model does not match the selected model");
  if (j.contains("n") && j.at("n").is_number_integer() && j.at("n").get<int>() != space->n()) {
    throw Error(ErrorCode::ShapeMismatch, "element dimension does not match the selected model");
  }
  std::vector<double> vals;
  flatten(field(j, "data"), vals);
  if (static_cast<int>(vals.size()) != space->payload_size()) {
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(space->payload_size()) +
                                              " values, got " + std::to_string(vals.size()));
  }
  for (double v : vals) {
    if (!std::isfinite(v)) parse_fail("element data must be finite");
  }
  Eigen::VectorXd v = Eigen::Map<Eigen::VectorXd>(vals.data(), static_cast<Eigen::Index>(vals.size()));
  if (kind == ModelKind::JB) {
    const int n = space->n();
    Eigen::MatrixXd m(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m(r, c) = v[r * n + c];
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > space->tol().eq_tol * (1.0 + m.cwiseAbs().maxCoeff())) {
      parse_fail("matrix is not symmetric");
    }
    return AElem::from_matrix(space, 0.5 * (m + m.transpose()));
  }
  return AElem(space, v);
}

Json case_to_json(const CaseResult& c) {
  Json tol = Json::object();
  for (const auto& [k, v] : c.tolerances) tol[k] = v;
  Json j{{"suite", c.suite},    {"check", c.check},     {"model", c.model},
         {"trials", c.trials},  {"seed", c.seed},       {"pass", c.pass},
         {"skipped", c.skipped}, {"witness", nullptr}, {"tolerances", tol}};
  if (c.witness) j["witness"] = element_to_json(*c.witness);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json report_to_json(const Report& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) cases.push_back(case_to_json(c));
  Json tol = Json::object();
  for (const auto& [k, v] : tolerance_map(r.environment.tolerances)) tol[k] = v;
  return Json{{"suite", r.suite},
              {"cases", cases},
              {"summary", {{"passed", r.summary.passed}, {"failed", r.summary.failed}, {"skipped", r.summary.skipped}}},
              {"environment", {{"tolerances", tol}, {"models", r.environment.models}, {"version", r.environment.version}}}};
}

Report report_from_json(const Json& j, const Tol& tol) {
  Report r;
  try {
    r.suite = field(j, "suite").get<std::string>();
    for (const auto& cj : field(j, "cases")) {
      CaseResult c;
      c.suite = cj.value("suite", r.suite);
      c.check = field(cj, "check").get<std::string>();
      c.model = cj.value("model", std::string());
      c.trials = cj.value("trials", 0);
      c.seed = cj.value("seed", std::uint64_t{0});
      c.pass = field(cj, "pass").get<bool>();
      c.skipped = cj.value("skipped", false);
      if (cj.contains("witness") && !cj.at("witness").is_null()) c.witness = element_from_json(cj.at("witness"), tol);
      if (cj.contains("tolerances")) {
        for (const auto& [k, v] : cj.at("tolerances").items()) c.tolerances[k] = v.get<double>();
      }
      c.note = cj.value("note", std::string());
      r.cases.push_back(std::move(c));
    }
    const Json& env = field(j, "environment");
    const Json& et = field(env, "tolerances");
    r.environment.tolerances.eq_tol = et.value("eq_tol", Tol{}.eq_tol);
    r.environment.tolerances.psd_tol = et.value("psd_tol", Tol{}.psd_tol);
    r.environment.tolerances.eig_cut = et.value("eig_cut", Tol{}.eig_cut);
    r.environment.tolerances.max_sweeps = static_cast<int>(et.value("max_sweeps", double(Tol{}.max_sweeps)));
    r.environment.models = env.value("models", std::vector<std::string>{});
    r.environment.version = field(env, "version").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    parse_fail(e.what());
  }
  r.tally();
  return r;
}

Json spectral_to_json(const SpectralData& d, const std::optional<Reconstruction>& rec, std::optional<double> mesh) {
  Json res = Json::array();
  for (const auto& pt : d.resolution) res.push_back(Json::array({pt.lambda, element_to_json(pt.p.elem())}));
  Json j{{"a", element_to_json(d.a)},
         {"p_plus", element_to_json(d.p_plus.elem())},
         {"pos", element_to_json(d.pos)},
         {"neg", element_to_json(d.neg)},
         {"abs", element_to_json(d.abs)},
         {"cover", d.cover ? element_to_json(d.cover->elem()) : Json(nullptr)},
         {"rickart", element_to_json(d.rickart.elem())},
         {"resolution", res},
         {"bounds", Json::array({d.lower, d.upper})}};
  if (rec) {
    Json rj{{"error", rec->error}, {"steps", rec->steps}, {"approx", element_to_json(rec->approx)}};
    if (mesh) rj["mesh"] = *mesh;
    j["riemann"] = rj;
  }
  return j;
}

SpectralData spectral_from_json(const Json& j, const SpacePtr& space) {
  try {
    auto el = [&](const char* k) { return element_from_json(field(j, k), space); };
    std::optional<Proj> cover;
    if (!field(j, "cover").is_null()) cover = Proj(el("cover"));
    std::vector<ResolutionPoint> res;
    for (const auto& pt : field(j, "resolution")) {
      if (!pt.is_array() || pt.size() != 2) parse_fail("resolution entries are [lambda, projection]");
      res.push_back({number(pt[0], "lambda"), Proj(element_from_json(pt[1], space))});
    }
    const Json& b = field(j, "bounds");
    if (!b.is_array() || b.size() != 2) parse_fail("bounds must be [L, U]");
    return SpectralData{el("a"), Proj(el("p_plus")), el("pos"), el("neg"), el("abs"), cover,
                        Proj(el("rickart")), std::move(res), number(b[0], "L"), number(b[1], "U")};
  } catch (const nlohmann::json::exception& e) {
    parse_fail(e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

}  // namespace ouspec
