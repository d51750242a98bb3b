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
#include <string_view>

#include "json.hpp"
#include "qcheb/poly.hpp"
#include "qcheb/qkernel.hpp"

namespace qcheb {

enum class Status { Pass, Fail, Skipped };

std::string_view status_name(Status s);

/// First failing index with both sides of the identity.
struct Witness {
    int n = 0;
    SLaurent lhs;
    SLaurent rhs;
};

/// Outcome of checking one identity at one parameter point over an index range.
/// A failing report always carries a witness.
struct IdentityReport {
    std::string identity_id;
    std::optional<Rational> q;
    std::optional<Rational> b;
    int n_lo = 0;
    int n_hi = 0;
    Status status = Status::Pass;
    std::optional<Witness> witness;
    std::string note;
};

nlohmann::json report_to_json(const IdentityReport& r);

/// Accumulates comparisons for one report; only the first mismatch is kept.
class ReportBuilder {
  public:
    ReportBuilder(std::string id, std::optional<Rational> q, std::optional<Rational> b, int n_lo, int n_hi);
    ReportBuilder(std::string id, const ParamPoint& pt, int n_lo, int n_hi);

    /// Records a mismatch at index n; returns whether the sides agree.
    bool expect_equal(int n, const SLaurent& lhs, const SLaurent& rhs);
    bool expect_equal(int n, const Rational& lhs, const Rational& rhs);

    /// For checks whose sides are not ring elements (e.g. a float tolerance).
    bool expect_true(int n, bool ok, const std::string& detail);

    bool failed() const { return report_.status == Status::Fail; }
    void set_note(std::string note) { report_.note = std::move(note); }
    IdentityReport finish() const { return report_; }

  private:
    IdentityReport report_;
};

IdentityReport skipped_report(std::string id, std::optional<Rational> q, std::optional<Rational> b, int n_lo, int n_hi,
                              std::string reason);

/// Runs `body`, turning a PoleError into a skipped report for the same id/point.
IdentityReport run_guarded(const std::string& id, std::optional<Rational> q, std::optional<Rational> b, int n_lo,
                           int n_hi, const std::function<IdentityReport()>& body);

}  // namespace qcheb
