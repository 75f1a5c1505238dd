// Copyright 2026 The ptnc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"
#include "ptnc/validation.hpp"

using namespace ptnc;

TEST_CASE("validation suite passes on the built-in defaults") {
  const ValidationReport report = run_validation();
  for (const auto& c : report.checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK((c.passed || c.informational));
  }
  CHECK(report.all_passed());
}

TEST_CASE("an injected beam-splitter fault is caught") {
  ValidationOptions opts;
  opts.bs_fault = 1e-6;
  const CheckResult r = check_bs_identity(opts);
  CHECK_FALSE(r.passed);
  CHECK(r.max_deviation > 1e-12);
}

TEST_CASE("analytic-vs-numeric deviation is reported") {
  const CheckResult r = check_channel_analytic({});
  CHECK(r.passed);
  CHECK(r.max_deviation < 1e-8);
}
