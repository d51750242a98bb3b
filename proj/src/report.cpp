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

#include "qcheb/report.hpp"

#include "qcheb/serialize.hpp"

namespace qcheb {

std::string_view status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
    }
    return "unknown";
}

nlohmann::json report_to_json(const IdentityReport& r) {
    nlohmann::json point = nlohmann::json::object();
    point["q"] = r.q ? nlohmann::json(to_string(*r.q)) : nlohmann::json(nullptr);
    point["b"] = r.b ? nlohmann::json(to_string(*r.b)) : nlohmann::json(nullptr);
    nlohmann::json j = {{"identity_id", r.identity_id},
                        {"point", point},
                        {"index_range", {r.n_lo, r.n_hi}},
                        {"status", status_name(r.status)}};
    if (r.witness)
        j["witness"] = {{"n", r.witness->n},
                        {"lhs", laurent_to_json(r.witness->lhs)},
                        {"rhs", laurent_to_json(r.witness->rhs)},
                        {"lhs_text", to_string(r.witness->lhs)},
                        {"rhs_text", to_string(r.witness->rhs)}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

ReportBuilder::ReportBuilder(std::string id, std::optional<Rational> q, std::optional<Rational> b, int n_lo,
                             int n_hi) {
    report_.identity_id = std::move(id);
    report_.q = std::move(q);
    report_.b = std::move(b);
    report_.n_lo = n_lo;
    report_.n_hi = n_hi;
}

ReportBuilder::ReportBuilder(std::string id, const ParamPoint& pt, int n_lo, int n_hi)
    : ReportBuilder(std::move(id), pt.q(), pt.b(), n_lo, n_hi) {}

bool ReportBuilder::expect_equal(int n, const SLaurent& lhs, const SLaurent& rhs) {
    if (lhs == rhs) return true;
    if (!failed()) {
        report_.status = Status::Fail;
        report_.witness = Witness{n, lhs, rhs};
    }
    return false;
}

bool ReportBuilder::expect_equal(int n, const Rational& lhs, const Rational& rhs) {
    return expect_equal(n, SLaurent(XsPoly(lhs)), SLaurent(XsPoly(rhs)));
}

bool ReportBuilder::expect_true(int n, bool ok, const std::string& detail) {
    if (ok) return true;
    if (!failed()) {
        report_.status = Status::Fail;
        report_.witness = Witness{n, SLaurent(), SLaurent()};
        report_.note = detail;
    }
    return false;
}

IdentityReport skipped_report(std::string id, std::optional<Rational> q, std::optional<Rational> b, int n_lo, int n_hi,
                              std::string reason) {
    IdentityReport r;
    r.identity_id = std::move(id);
    r.q = std::move(q);
    r.b = std::move(b);
    r.n_lo = n_lo;
    r.n_hi = n_hi;
    r.status = Status::Skipped;
    r.note = std::move(reason);
    return r;
}

IdentityReport run_guarded(const std::string& id, std::optional<Rational> q, std::optional<Rational> b, int n_lo,
                           int n_hi, const std::function<IdentityReport()>& body) {
    try {
        return body();
    } catch (const PoleError& e) {
        return skipped_report(id, std::move(q), std::move(b), n_lo, n_hi, e.what());
    } catch (const std::exception& e) {
        // a generator broke an invariant the check relies on; the index is unknown
        ReportBuilder rb(id, std::move(q), std::move(b), n_lo, n_hi);
        rb.expect_true(n_lo, false, std::string("check aborted: ") + e.what());
        return rb.finish();
    }
}

}  // namespace qcheb
