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

#include "qcheb/suite.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "qcheb/analysis.hpp"
#include "qcheb/family_checks.hpp"
#include "qcheb/matrix_ids.hpp"
#include "qcheb/moments.hpp"
#include "qcheb/operators.hpp"

namespace qcheb {

namespace {

using Reports = std::vector<IdentityReport>;

// Per-group index bounds for the default configuration.
struct Bounds {
    int dual = 30;
    int negative = 10;
    int homogeneity = 20;
    int alsalam_fib = 12;
    int classical = 12;
    int binet_float = 20;
    int fib_matrix = 20;
    int fib_matrix_negative = 6;
    int cassini_lo = -5;
    int cassini_hi = 20;
    int euler_n = 12;
    int euler_k = 6;
    int cheb_matrix = 20;
    int operator_binet = 20;
    int q_binomial = 20;
    int moments = 10;
    int moments_classical = 8;
    int expansions = 14;
    int analysis = 20;
    int h_order = 24;
    int pearson_order = 24;
    int genfun_order = 16;
    int registry = 20;
    int words_ck = 14;
    int words_fib = 18;
    int words_split = 14;
    int rodrigues = 8;
};

Bounds bounds_for(const SuiteConfig& c) {
    Bounds b;
    if (!c.max_n) return b;
    const int m = *c.max_n;
    for (int* v : {&b.dual, &b.negative, &b.homogeneity, &b.alsalam_fib, &b.classical, &b.binet_float, &b.fib_matrix,
                   &b.fib_matrix_negative, &b.cassini_hi, &b.cheb_matrix, &b.operator_binet, &b.q_binomial, &b.moments,
                   &b.moments_classical, &b.expansions, &b.analysis, &b.registry})
        *v = m;
    for (int* v : {&b.euler_n, &b.words_ck, &b.words_fib, &b.words_split, &b.rodrigues}) *v = std::min(*v, m);
    return b;
}

template <class F>
WorkItem item(std::string label, F f) {
    return WorkItem{std::move(label), [f](const Generators& g) { return Reports(f(g)); }};
}

std::string point_label(const Rational& q, const std::optional<Rational>& b) {
    std::string out = "q=" + to_string(q);
    if (b) out += ",b=" + to_string(*b);
    return out;
}

int compare_opt(const std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (!a || !b) return static_cast<int>(a.has_value()) - static_cast<int>(b.has_value());
    return *a < *b ? -1 : (*b < *a ? 1 : 0);
}

void add_core(std::vector<WorkItem>& w, const SuiteConfig& c, const Bounds& n) {
    const std::vector<FamilyId> b_free = {FamilyId::FibCarlitz, FamilyId::GenFib,  FamilyId::GenLucas,
                                          FamilyId::ChebU,      FamilyId::ChebT,   FamilyId::AlSalamIsmail};
    const std::vector<FamilyId> b_fams = {FamilyId::FibQb, FamilyId::LucasTrace, FamilyId::LucasQb};

    for (const Rational& q : c.qs) {
        const ParamPoint p0(q, Rational(0), true);
        const std::string at = point_label(q, std::nullopt);
        w.push_back(item("families " + at, [=](const Generators& g) {
            Reports r;
            for (FamilyId id : b_free) r.push_back(dual_route_check(id, n.dual, p0, g));
            r.push_back(dilated_route_check(FamilyId::FibCarlitz, n.dual, p0, g));
            for (FamilyId id : {FamilyId::GenLucas, FamilyId::ChebU, FamilyId::ChebT})
                r.push_back(negative_index_check(id, n.negative, p0, g));
            r.push_back(homogeneity_check(n.homogeneity, q, g));
            r.push_back(alias_check(n.dual, q, g));
            r.push_back(first_terms_check(q, g));
            return r;
        }));
        w.push_back(item("chebyshev matrices " + at, [=](const Generators& g) {
            return Reports{cheb_matrix_check(n.cheb_matrix, q, g), cheb_det_check(n.cheb_matrix, q, g),
                           cheb_det_sqrt_check(n.cheb_matrix, q, g), tridiag_check(n.cheb_matrix, q, g)};
        }));
        w.push_back(item("operator scalars " + at, [=](const Generators& g) {
            return Reports{binet_check(n.operator_binet, q, g), q_binomial_product_check(n.q_binomial, q)};
        }));
        w.push_back(item("moments " + at, [=](const Generators& g) {
            return Reports{moments_fib_check(n.moments, q),         moments_fib_forms_check(n.moments, q),
                           moments_lucas_check(n.moments, q),       moments_carlitz_check(n.moments, q),
                           expansion_fib_check(n.expansions, q, g), expansion_lucas_check(n.expansions, q, g),
                           orthogonality_check(n.moments, q, g),    nonorthogonality_check(q, g)};
        }));
        w.push_back(item("analysis " + at, [=](const Generators& g) {
            return Reports{deriv_t_check(n.analysis, q, g),
                           deriv_u_check(n.analysis, q, g),
                           qode_check(n.analysis, q, g),
                           h_series_check(q, n.h_order),
                           pearson_check(SeriesContext{q, Rational(1), n.pearson_order}),
                           pearson_check(SeriesContext{q, Rational(-2), n.pearson_order}),
                           genfun_check(n.genfun_order, q, g)};
        }));
        w.push_back(item("registry " + at, [=](const Generators& g) {
            Reports r;
            for (const std::string& id : registry_ids())
                if (!registry_uses_b(id)) r.push_back(registry_check(id, n.registry, p0, g));
            return r;
        }));

        for (const Rational& b : c.bs) {
            const ParamPoint pt(q, b, true);
            const std::string atb = point_label(q, b);
            w.push_back(item("b-families " + atb, [=](const Generators& g) {
                Reports r;
                for (FamilyId id : b_fams) r.push_back(dual_route_check(id, n.dual, pt, g));
                r.push_back(dilated_route_check(FamilyId::FibQb, n.dual, pt, g));
                r.push_back(dilated_route_check(FamilyId::LucasQb, n.dual, pt, g));
                r.push_back(negative_index_check(FamilyId::FibQb, n.negative, pt, g));
                r.push_back(negative_index_check(FamilyId::LucasTrace, n.negative, pt, g));
                r.push_back(alsalam_fib_check(n.alsalam_fib, pt, g));
                for (const std::string& id : registry_ids())
                    if (registry_uses_b(id)) r.push_back(registry_check(id, n.registry, pt, g));
                return r;
            }));
            w.push_back(item("fibonacci matrices " + atb, [=](const Generators& g) {
                Reports r{fib_matrix_check(n.fib_matrix, pt, g), fib_matrix_negative_check(n.fib_matrix_negative, pt, g),
                          trace_matrix_check(n.fib_matrix, pt, g)};
                // the negative range has its own poles, so it is reported separately
                if (n.cassini_lo < 0) r.push_back(cassini_check(n.cassini_lo, -1, pt, g));
                r.push_back(cassini_check(0, n.cassini_hi, pt, g));
                r.push_back(cassini_euler_check(n.euler_n, n.euler_k, pt, g));
                return r;
            }));
            w.push_back(item("commutation " + atb, [=](const Generators&) {
                return Reports{commutation_check(pt, default_test_monomials())};
            }));
        }
    }

    w.push_back(item("classical", [=](const Generators& g) {
        Reports r = classical_checks(n.classical, g);
        r.push_back(binet_float_check(n.binet_float, 1e-6L, g));
        r.push_back(pell_check(n.classical, g));
        r.push_back(moments_classical_check(n.moments_classical, g));
        return r;
    }));
}

void add_extended(std::vector<WorkItem>& w, const SuiteConfig& c, const Bounds& n) {
    for (std::size_t i = 0; i < c.qs.size(); ++i) {
        const Rational q = c.qs[i];
        const Rational s_val = i % 2 == 0 ? Rational(1) : Rational(-2);
        w.push_back(item("rodrigues " + point_label(q, std::nullopt), [=](const Generators& g) {
            return Reports{rodrigues_check(n.rodrigues, q, s_val, AnalysisConfig{}.rodrigues_extra, g)};
        }));
        for (const Rational& b : c.bs) {
            const ParamPoint pt(q, b, true);
            w.push_back(item("words " + point_label(q, b), [=](const Generators& g) {
                return Reports{word_ck_check(n.words_ck, pt), binomial_theorem_check(n.words_ck, pt),
                               fib_words_check(n.words_fib, pt, g), fib_words_split_check(n.words_split, pt)};
            }));
        }
    }
}

}  // namespace

std::optional<SuiteKind> parse_suite(std::string_view name) {
    if (name == "core") return SuiteKind::Core;
    if (name == "extended") return SuiteKind::Extended;
    if (name == "all") return SuiteKind::All;
    return std::nullopt;
}

SuiteConfig default_suite_config() {
    SuiteConfig c;
    c.qs = {Rational(2), Rational(1, 2), Rational(3, 5), Rational(7)};
    c.bs = {Rational(0), Rational(-1), Rational(2), Rational(3, 7)};
    return c;
}

std::vector<WorkItem> suite_work(const SuiteConfig& config) {
    const Bounds n = bounds_for(config);
    std::vector<WorkItem> w;
    if (config.suite != SuiteKind::Extended) add_core(w, config, n);
    if (config.suite != SuiteKind::Core) add_extended(w, config, n);
    return w;
}

bool report_less(const IdentityReport& a, const IdentityReport& b) {
    if (a.identity_id != b.identity_id) return a.identity_id < b.identity_id;
    if (int c = compare_opt(a.q, b.q)) return c < 0;
    if (int c = compare_opt(a.b, b.b)) return c < 0;
    if (a.n_lo != b.n_lo) return a.n_lo < b.n_lo;
    if (a.n_hi != b.n_hi) return a.n_hi < b.n_hi;
    return a.note < b.note;
}

std::vector<IdentityReport> run_suite(const SuiteConfig& config) {
    const std::vector<WorkItem> work = suite_work(config);
    const Generators faulted(config.fault);
    const Generators& gen = config.fault ? faulted : Generators::shared();

    std::vector<Reports> results(work.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < work.size(); i = next++) {
            try {
                results[i] = work[i].run(gen);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    const int threads = std::max(1, std::min<int>(config.parallelism, static_cast<int>(work.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);

    std::vector<IdentityReport> out;
    for (Reports& r : results) std::move(r.begin(), r.end(), std::back_inserter(out));
    std::sort(out.begin(), out.end(), report_less);
    return out;
}

SuiteSummary summarize(const std::vector<IdentityReport>& reports) {
    SuiteSummary s;
    for (const IdentityReport& r : reports) {
        switch (r.status) {
            case Status::Pass: ++s.pass; break;
            case Status::Fail: ++s.fail; break;
            case Status::Skipped: ++s.skipped; break;
        }
    }
    return s;
}

}  // namespace qcheb
