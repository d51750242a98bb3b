// Copyright 2026 The qcheb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcheb/families.hpp"
#include "qcheb/report.hpp"

namespace qcheb {

enum class SuiteKind { Core, Extended, All };

std::optional<SuiteKind> parse_suite(std::string_view name);

struct SuiteConfig {
    SuiteKind suite = SuiteKind::Core;
    /// Sample points; b-free checks use each q once.
    std::vector<Rational> qs;
    std::vector<Rational> bs;
    /// Replaces the per-group index bound; the brute-force groups (words,
    /// Rodrigues, Cassini-Euler) only ever lower theirs.
    std::optional<int> max_n;
    int parallelism = 1;
    std::optional<Fault> fault;
};

/// q in {2, 1/2, 3/5, 7}, b in {0, -1, 2, 3/7}.
SuiteConfig default_suite_config();

/// One unit of work: runs some checks against the given generators.
struct WorkItem {
    std::string label;
    std::function<std::vector<IdentityReport>(const Generators&)> run;
};

std::vector<WorkItem> suite_work(const SuiteConfig& config);

/// Runs every work item on a pool of config.parallelism threads and returns
/// the reports sorted by identity id, then point, then index range.
std::vector<IdentityReport> run_suite(const SuiteConfig& config);

struct SuiteSummary {
    int pass = 0;
    int fail = 0;
    int skipped = 0;
};

SuiteSummary summarize(const std::vector<IdentityReport>& reports);

/// Orders reports by (identity_id, q, b, n_lo, n_hi); a missing q or b sorts first.
bool report_less(const IdentityReport& a, const IdentityReport& b);

}  // namespace qcheb
