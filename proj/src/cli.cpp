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

#include "qcheb/cli.hpp"

#include <algorithm>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcheb/families.hpp"
#include "qcheb/moments.hpp"
#include "qcheb/qkernel.hpp"
#include "qcheb/serialize.hpp"
#include "qcheb/suite.hpp"

namespace qcheb {

namespace {

using nlohmann::json;

enum class Format { Json, Csv, Text };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "text") return Format::Text;
    throw UsageError("unknown format '" + s + "' (json, csv, text)");
}

Rational parse_param(const std::string& name, const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError("--" + name + ": " + e.what());
    }
}

FamilyId parse_family_arg(const std::string& text) {
    const auto id = parse_family(text);
    if (!id) throw UsageError("unknown family '" + text + "'");
    return *id;
}

// Levels 0..hi must be pole-free; q = 1 is accepted.
ParamPoint checked_point(const Rational& q, const Rational& b, int hi) {
    if (q == 0) throw UsageError("q must be nonzero");
    ParamPoint pt(q, b, true);
    if (!pt.pole_free(0, hi))
        throw UsageError("parameters q=" + to_string(q) + ", b=" + to_string(b) + " hit a pole within levels 0.." +
                         std::to_string(hi));
    return pt;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string opt_text(const std::optional<Rational>& r) { return r ? to_string(*r) : ""; }

struct GenArgs {
    std::string family;
    int n = 0;
    std::string q = "2";
    std::string b = "0";
    std::string s;
    std::string format = "json";
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
    const FamilyId id = parse_family_arg(a.family);
    if (a.n < 0) throw UsageError("--n must be nonnegative");
    const Rational q = parse_param("q", a.q);
    const Rational b = family_uses_b(id) ? parse_param("b", a.b) : Rational(0);
    const ParamPoint pt = checked_point(q, b, a.n + 1);
    std::optional<Rational> s_val;
    if (!a.s.empty()) s_val = parse_param("s", a.s);
    const Format fmt = parse_format(a.format);

    const Generators& gen = Generators::shared();
    std::vector<XsPoly> rows;
    for (int n = 0; n <= a.n; ++n) {
        XsPoly p = gen.value(id, n, pt);
        rows.push_back(s_val ? substitute_s(p, *s_val) : std::move(p));
    }

    if (fmt == Format::Json) {
        json j{{"family", std::string(family_tag(id))}, {"q", to_string(q)}};
        if (family_uses_b(id)) j["b"] = to_string(b);
        if (s_val) j["s"] = to_string(*s_val);
        j["rows"] = json::array();
        for (int n = 0; n <= a.n; ++n) j["rows"].push_back({{"n", n}, {"poly", poly_to_json(rows[n])}});
        out << j.dump(2) << "\n";
    } else if (fmt == Format::Csv) {
        out << "n,poly\n";
        for (int n = 0; n <= a.n; ++n) out << n << "," << csv_field(to_string(rows[n])) << "\n";
    } else {
        for (int n = 0; n <= a.n; ++n) out << family_tag(id) << "[" << n << "] = " << rows[n] << "\n";
    }
    return kExitPass;
}

struct VerifyArgs {
    std::string suite = "core";
    std::optional<int> max_n;
    std::vector<std::string> qs;
    std::vector<std::string> bs;
    int parallel = 0;
    std::string format = "json";
    std::string fault;
};

Fault parse_fault(const std::string& text) {
    const auto colon = text.rfind(':');
    if (colon == std::string::npos) throw UsageError("--inject-fault expects FAMILY:n");
    const FamilyId id = parse_family_arg(text.substr(0, colon));
    try {
        std::size_t used = 0;
        const int n = std::stoi(text.substr(colon + 1), &used);
        if (used != text.size() - colon - 1 || n < 0) throw std::invalid_argument("index");
        return Fault{id, n};
    } catch (const std::exception&) {
        throw UsageError("--inject-fault: bad index in '" + text + "'");
    }
}

void print_report_text(const IdentityReport& r, std::ostream& out) {
    out << status_name(r.status) << " " << r.identity_id;
    if (r.q) out << " q=" << to_string(*r.q);
    if (r.b) out << " b=" << to_string(*r.b);
    out << " n=" << r.n_lo << ".." << r.n_hi;
    if (!r.note.empty()) out << " (" << r.note << ")";
    out << "\n";
    if (r.witness) {
        out << "  n = " << r.witness->n << "\n";
        if (!(r.witness->lhs == r.witness->rhs)) {
            out << "  lhs: " << to_string(r.witness->lhs) << "\n";
            out << "  rhs: " << to_string(r.witness->rhs) << "\n";
        }
    }
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    SuiteConfig config = default_suite_config();
    const auto kind = parse_suite(a.suite);
    if (!kind) throw UsageError("unknown suite '" + a.suite + "' (core, extended, all)");
    config.suite = *kind;
    if (a.max_n) {
        if (*a.max_n < 1) throw UsageError("--max-n must be positive");
        config.max_n = a.max_n;
    }
    const int level_hi = (a.max_n ? *a.max_n : 30) + 1;
    if (!a.qs.empty()) {
        config.qs.clear();
        for (const auto& t : a.qs) config.qs.push_back(parse_param("q", t));
    }
    if (!a.bs.empty()) {
        config.bs.clear();
        for (const auto& t : a.bs) config.bs.push_back(parse_param("b", t));
    }
    // user-supplied points are rejected up front when they hit a pole
    if (!a.qs.empty() || !a.bs.empty())
        for (const Rational& q : config.qs)
            for (const Rational& b : config.bs) checked_point(q, b, level_hi);
    config.parallelism = a.parallel > 0 ? a.parallel : std::max(1u, std::thread::hardware_concurrency());
    if (!a.fault.empty()) config.fault = parse_fault(a.fault);
    const Format fmt = parse_format(a.format);

    const std::vector<IdentityReport> reports = run_suite(config);
    const SuiteSummary sum = summarize(reports);

    if (fmt == Format::Json) {
        json j{{"summary", {{"pass", sum.pass}, {"fail", sum.fail}, {"skipped", sum.skipped}}},
               {"reports", json::array()}};
        for (const auto& r : reports) j["reports"].push_back(report_to_json(r));
        out << j.dump(2) << "\n";
    } else if (fmt == Format::Csv) {
        out << "identity_id,q,b,n_lo,n_hi,status\n";
        for (const auto& r : reports)
            out << csv_field(r.identity_id) << "," << opt_text(r.q) << "," << opt_text(r.b) << "," << r.n_lo << ","
                << r.n_hi << "," << status_name(r.status) << "\n";
    } else {
        for (const auto& r : reports) print_report_text(r, out);
    }
    std::ostream& summary_to = fmt == Format::Text ? out : err;
    summary_to << "summary: pass " << sum.pass << ", fail " << sum.fail << ", skipped " << sum.skipped << "\n";
    return sum.fail == 0 ? kExitPass : kExitFail;
}

struct MomentArgs {
    std::string family = "GEN_FIB";
    int n = 0;
    std::string q = "2";
    std::string format = "json";
};

int cmd_moments(const MomentArgs& a, std::ostream& out) {
    if (a.n < 0) throw UsageError("--n must be nonnegative");
    const Rational q = parse_param("q", a.q);
    checked_point(q, Rational(0), a.n + 1);
    const FamilyId id = parse_family_arg(a.family);
    RecurrenceSpec spec;
    switch (id) {
        case FamilyId::GenFib: spec = gen_fib_spec(q); break;
        case FamilyId::GenLucas: spec = lucas_star_spec(q); break;
        case FamilyId::FibCarlitz: spec = carlitz_spec(q); break;
        default: throw UsageError("moments: family must be GEN_FIB, GEN_LUCAS or FIB_CARLITZ");
    }
    const std::vector<XsPoly> m = moments_from_recurrence(spec, a.n + 1);
    const Format fmt = parse_format(a.format);
    if (fmt == Format::Json) {
        json j{{"family", std::string(family_tag(id))}, {"q", to_string(q)}, {"moments", json::array()}};
        for (int k = 0; k <= a.n; ++k) j["moments"].push_back({{"m", k}, {"value", poly_to_json(m[k])}});
        out << j.dump(2) << "\n";
    } else if (fmt == Format::Csv) {
        out << "m,value\n";
        for (int k = 0; k <= a.n; ++k) out << k << "," << csv_field(to_string(m[k])) << "\n";
    } else {
        for (int k = 0; k <= a.n; ++k) out << "Lambda(x^" << k << ") = " << m[k] << "\n";
    }
    return kExitPass;
}

struct CatalanArgs {
    int n = 0;
    std::string q = "1";
    std::string format = "json";
};

int cmd_catalan(const CatalanArgs& a, std::ostream& out) {
    if (a.n < 0) throw UsageError("--n must be nonnegative");
    const Rational q = parse_param("q", a.q);
    const Format fmt = parse_format(a.format);
    std::vector<Rational> c;
    for (int k = 0; k <= a.n; ++k) c.push_back(q_catalan(k, q));
    if (fmt == Format::Json) {
        json j{{"q", to_string(q)}, {"catalan", json::array()}};
        for (const auto& v : c) j["catalan"].push_back(to_string(v));
        out << j.dump(2) << "\n";
    } else if (fmt == Format::Csv) {
        out << "n,value\n";
        for (int k = 0; k <= a.n; ++k) out << k << "," << to_string(c[k]) << "\n";
    } else {
        for (std::size_t k = 0; k < c.size(); ++k) out << (k ? ", " : "") << to_string(c[k]);
        out << "\n";
    }
    return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact q-Chebyshev and q-Fibonacci polynomial toolkit"};
    app.name("qcheb");
    app.require_subcommand(1);
    const std::vector<std::string> formats = {"json", "csv", "text"};

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "Print a family for indices 0..n");
    gen->add_option("--family", gen_args.family, "Family tag (e.g. CHEB_T, T, U, FIB_QB, F_QB)")->required();
    gen->add_option("--n", gen_args.n, "Largest index")->required();
    gen->add_option("--q", gen_args.q, "q as num/den")->capture_default_str();
    gen->add_option("--b", gen_args.b, "b as num/den (b-dependent families)")->capture_default_str();
    gen->add_option("--s", gen_args.s, "Substitute a rational value for s");
    gen->add_option("--format", gen_args.format)->capture_default_str();

    VerifyArgs ver_args;
    CLI::App* ver = app.add_subcommand("verify", "Run an identity suite; exit 1 on any failure");
    ver->add_option("--suite", ver_args.suite, "core, extended or all")->capture_default_str();
    ver->add_option("--max-n", ver_args.max_n, "Index bound for every check group");
    ver->add_option("--q", ver_args.qs, "Sample q (repeatable)");
    ver->add_option("--b", ver_args.bs, "Sample b (repeatable)");
    ver->add_option("-j,--parallel", ver_args.parallel, "Worker threads (default: hardware threads)");
    ver->add_option("--format", ver_args.format)->capture_default_str();
    ver->add_option("--inject-fault", ver_args.fault, "Perturb one generated value, FAMILY:n");

    MomentArgs mom_args;
    CLI::App* mom = app.add_subcommand("moments", "Print Lambda(x^m) for m = 0..n");
    mom->add_option("--family", mom_args.family, "GEN_FIB, GEN_LUCAS or FIB_CARLITZ")->capture_default_str();
    mom->add_option("--n", mom_args.n)->required();
    mom->add_option("--q", mom_args.q)->capture_default_str();
    mom->add_option("--format", mom_args.format)->capture_default_str();

    CatalanArgs cat_args;
    CLI::App* cat = app.add_subcommand("catalan", "Print C_0(q) .. C_n(q)");
    cat->add_option("--n", cat_args.n)->required();
    cat->add_option("--q", cat_args.q)->capture_default_str();
    cat->add_option("--format", cat_args.format)->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "qcheb: " << e.what() << "\n";
        const std::string sub_help = app.get_subcommands().empty() ? app.help() : app.get_subcommands()[0]->help();
        err << sub_help;
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_args, out);
        if (ver->parsed()) return cmd_verify(ver_args, out, err);
        if (mom->parsed()) return cmd_moments(mom_args, out);
        if (cat->parsed()) return cmd_catalan(cat_args, out);
    } catch (const UsageError& e) {
        err << "qcheb: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PoleError& e) {
        err << "qcheb: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace qcheb
