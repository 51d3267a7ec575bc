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

#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "ouspec/cli.hpp"
#include "ouspec/errors.hpp"
#include "ouspec/fn_model.hpp"
#include "ouspec/harness.hpp"
#include "ouspec/json_io.hpp"
#include "ouspec/spectral.hpp"

using namespace ouspec;

TEST_CASE("element json round trip") {
  const auto s = ModelSpace::censym(NormFamily::lp(INFINITY, 2));
  const AElem a = AElem::from_pair(s, 0.1, Eigen::Vector2d(0.1 + 0.2, -1.0 / 3.0));
  const Json j = element_to_json(a);
  CHECK(j["family"]["p"] == "inf");
  const AElem b = element_from_json(parse_json(dump(j)), Tol{});
  CHECK(b.payload() == a.payload());
  CHECK(b.space()->same_as(*s));
  CHECK_THROWS_AS(parse_json("{nope"), Error);
  CHECK_THROWS_AS(parse_family("stadium:1,1", 3), Error);
}

TEST_CASE("reports merge and round trip") {
  const auto s = ModelSpace::fn(3);
  const Report a = run_suite("core", s, 20, 1);
  const Report b = run_suite("fn-oracle", s, 20, 1);
  CHECK(a.ok());
  const Report m = merge_reports({a, b});
  CHECK(m.cases.size() == a.cases.size() + b.cases.size());
  const Report back = report_from_json(report_to_json(m));
  CHECK(dump(report_to_json(back)) == dump(report_to_json(m)));
  Report other = b;
  other.environment.version = "other";
  CHECK_THROWS_AS(merge_reports({a, other}), Error);
  CHECK_THROWS_AS(run_suite("bogus", s, 1, 1), Error);
}

TEST_CASE("spectral json contains the resolution") {
  const FnModel m = build_fn(2);
  const AElem a(m.space, Eigen::Vector2d(1.0, -1.0));
  const Json j = spectral_to_json(spectral_resolution(a, *m.base, {0.0}), std::nullopt, std::nullopt);
  CHECK(j["resolution"].size() == 1);
  CHECK(j["bounds"][0] == -1.0);
  const SpectralData d = spectral_from_json(j, m.space);
  CHECK(d.p_plus.elem().payload() == Eigen::Vector2d(1, 0));
}

TEST_CASE("cli exit codes") {
  std::ostringstream out, err;
  CHECK(run_cli({"check", "--model", "fn", "--dim", "3", "--trials", "20"}, out, err) == kExitOk);
  CHECK(parse_json(out.str())["summary"]["failed"] == 0);
  std::ostringstream o2, e2;
  CHECK(run_cli({"check", "--model", "jb", "--dim", "-1"}, o2, e2) == kExitUsage);
  CHECK(run_cli({"check", "--model", "jb"}, o2, e2) == kExitUsage);
  CHECK(run_cli({"check", "--model", "fn", "--dim", "2", "--suite", "nope"}, o2, e2) == kExitUsage);
  const std::string path = std::string(P_tmpdir) + "/ouspec_unit_l1.json";
  std::ofstream(path) << R"({"model":"censym","n":2,"family":{"family":"lp","p":1},"data":[0.2,0.3,0.1]})";
  CHECK(run_cli({"spectral", "--model", "censym", "--dim", "2", "--family", "lp:1", "--input", path}, o2, e2) ==
        kExitViolation);
  std::remove(path.c_str());
  CHECK(run_cli({"spectral", "--model", "fn", "--dim", "2", "--input", "/nonexistent/x.json"}, o2, e2) != kExitOk);
}
