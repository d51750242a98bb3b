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

#include "qcheb/family_checks.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qcheb {

namespace {

const XsPoly kX = XsPoly::x();
const XsPoly kS = XsPoly::s();

XsPoly mono(const Rational& c, int dx, int ds) { return XsPoly::monomial(c, dx, ds); }

Rational int_binom(int n, int k) { return Rational(binomial(n, k)); }

std::optional<Rational> b_of(FamilyId id, const ParamPoint& pt) {
    if (family_uses_b(id)) return pt.b();
    return std::nullopt;
}

std::string tagged(const char* prefix, FamilyId id) { return std::string(prefix) + "." + std::string(family_tag(id)); }

}  // namespace

IdentityReport dual_route_check(FamilyId id, int n_hi, const ParamPoint& pt, const Generators& gen) {
    const std::string rid = tagged("dual_route", id);
    const auto b = b_of(id, pt);
    return run_guarded(rid, pt.q(), b, 0, n_hi, [&] {
        ReportBuilder rb(rid, pt.q(), b, 0, n_hi);
        const Rational& q = pt.q();
        for (int n = 0; n <= n_hi && !rb.failed(); ++n) {
            switch (id) {
                case FamilyId::FibCarlitz:
                    rb.expect_equal(n, gen.fib_carlitz(n, q), closed::fib_carlitz(n, q));
                    break;
                case FamilyId::FibQb: rb.expect_equal(n, gen.fib_qb(n, pt), closed::fib_qb(n, pt)); break;
                case FamilyId::LucasTrace:
                    rb.expect_equal(n, gen.lucas_trace(n, pt), closed::lucas_trace(n, pt));
                    break;
                case FamilyId::LucasQb: rb.expect_equal(n, gen.lucas_qb(n, pt), closed::lucas_qb(n, pt)); break;
                case FamilyId::GenFib: rb.expect_equal(n, gen.gen_fib(n, q), closed::gen_fib(n, q)); break;
                case FamilyId::GenLucas: rb.expect_equal(n, gen.gen_lucas(n, q), closed::gen_lucas(n, q)); break;
                case FamilyId::ChebU: rb.expect_equal(n, gen.cheb_u(n, q), closed::cheb_u(n, q)); break;
                case FamilyId::ChebT: rb.expect_equal(n, gen.cheb_t(n, q), closed::cheb_t(n, q)); break;
                case FamilyId::AlSalamIsmail: {
                    const XsPoly beta = kS * (-q);
                    if (rb.expect_equal(n, gen.alsalam_ismail(n, q, beta, q), closed::alsalam_ismail(n, q, beta, q))) {
                        const Rational a(1, 3);
                        const XsPoly beta2 = kS * Rational(2);
                        if (!rb.expect_equal(n, gen.alsalam_ismail(n, a, beta2, q),
                                             closed::alsalam_ismail(n, a, beta2, q)))
                            rb.set_note("a = 1/3, beta = 2s");
                    } else {
                        rb.set_note("a = q, beta = -qs");
                    }
                    break;
                }
            }
        }
        return rb.finish();
    });
}

IdentityReport dilated_route_check(FamilyId id, int n_hi, const ParamPoint& pt, const Generators& gen) {
    const std::string rid = tagged("dilated_route", id);
    const auto b = b_of(id, pt);
    return run_guarded(rid, pt.q(), b, 0, n_hi, [&] {
        ReportBuilder rb(rid, pt.q(), b, 0, n_hi);
        for (int n = 0; n <= n_hi && !rb.failed(); ++n) {
            switch (id) {
                case FamilyId::FibCarlitz:
                    rb.expect_equal(n, gen.fib_carlitz(n, pt.q()), dilated::fib_carlitz(n, pt.q()));
                    break;
                case FamilyId::FibQb: rb.expect_equal(n, gen.fib_qb(n, pt), dilated::fib_qb(n, pt)); break;
                case FamilyId::LucasQb: rb.expect_equal(n, gen.lucas_qb(n, pt), dilated::lucas_qb(n, pt)); break;
                default: throw std::invalid_argument("dilated_route_check: no dilated recurrence for this family");
            }
        }
        return rb.finish();
    });
}

IdentityReport negative_index_check(FamilyId id, int n_hi, const ParamPoint& pt, const Generators& gen) {
    const std::string rid = tagged("negative_index", id);
    const auto b = b_of(id, pt);
    return run_guarded(rid, pt.q(), b, -n_hi, -1, [&] {
        ReportBuilder rb(rid, pt.q(), b, -n_hi, -1);
        const Rational& q = pt.q();
        for (int m = 1; m <= n_hi && !rb.failed(); ++m) {
            switch (id) {
                case FamilyId::FibQb: rb.expect_equal(-m, gen.fib_qb_any(-m, pt), closed::fib_qb_negative(m, pt)); break;
                case FamilyId::LucasTrace:
                    rb.expect_equal(-m, gen.lucas_trace_any(-m, pt), closed::lucas_trace_negative(m, pt));
                    break;
                case FamilyId::GenLucas:
                    rb.expect_equal(-m, gen.gen_lucas_any(-m, q), closed::gen_lucas_negative(m, q));
                    break;
                case FamilyId::ChebU: rb.expect_equal(-m, gen.cheb_u_any(-m, q), closed::cheb_u_negative(-m, q)); break;
                case FamilyId::ChebT: rb.expect_equal(-m, gen.cheb_t_any(-m, q), closed::cheb_t_negative(m, q)); break;
                default: throw std::invalid_argument("negative_index_check: no negative-index form for this family");
            }
        }
        return rb.finish();
    });
}

IdentityReport homogeneity_check(int n_hi, const Rational& q, const Generators& gen) {
    return run_guarded("cheb_homogeneity", q, std::nullopt, 0, n_hi, [&] {
        ReportBuilder rb("cheb_homogeneity", q, std::nullopt, 0, n_hi);
        for (int n = 0; n <= n_hi && !rb.failed(); ++n) {
            const XsPoly t = gen.cheb_t(n, q);
            const XsPoly u = gen.cheb_u(n, q);
            if (rb.expect_equal(n, dilate(t, q, 1, 2), t * power(q, n)))
                rb.expect_equal(n, dilate(u, q, 1, 2), u * power(q, n));
        }
        return rb.finish();
    });
}

IdentityReport alias_check(int n_hi, const Rational& q, const Generators& gen) {
    return run_guarded("family_aliases", q, std::nullopt, 0, n_hi, [&] {
        ReportBuilder rb("family_aliases", q, std::nullopt, 0, n_hi);
        const ParamPoint minus_one(q, Rational(-1), true);
        const ParamPoint zero(q, Rational(0), true);
        const Rational mq = -q;
        for (int n = 0; n <= n_hi && !rb.failed(); ++n) {
            const XsPoly u = gen.cheb_u(n, q);
            if (!rb.expect_equal(n, u, gen.gen_fib(n + 1, q) * q_poch(mq, q, n))) {
                rb.set_note("U against F(b = -1)");
            } else if (n >= 1 && !rb.expect_equal(n, gen.cheb_t(n, q), gen.gen_lucas(n, q) * q_poch(mq, q, n - 1))) {
                rb.set_note("T against L(b = -1)");
            } else if (!rb.expect_equal(n, u, gen.alsalam_ismail(n, q, kS * mq, q))) {
                rb.set_note("U against Al-Salam-Ismail");
            } else if (!rb.expect_equal(n, gen.gen_fib(n, q), gen.fib_qb(n, minus_one))) {
                rb.set_note("GEN_FIB against FIB_QB at b = -1");
            } else if (!rb.expect_equal(n, gen.gen_lucas(n, q), gen.lucas_qb(n, minus_one))) {
                rb.set_note("GEN_LUCAS against LUCAS_QB at b = -1");
            } else if (!rb.expect_equal(n, gen.fib_carlitz(n, q), gen.fib_qb(n, zero))) {
                rb.set_note("FIB_CARLITZ against FIB_QB at b = 0");
            }
        }
        return rb.finish();
    });
}

IdentityReport alsalam_fib_check(int n_hi, const ParamPoint& pt, const Generators& gen) {
    return run_guarded("alsalam_ismail_fib", pt.q(), pt.b(), 0, n_hi, [&] {
        ReportBuilder rb("alsalam_ismail_fib", pt, 0, n_hi);
        const Rational& q = pt.q();
        for (int n = 0; n <= n_hi && !rb.failed(); ++n)
            rb.expect_equal(n, gen.fib_qb(n + 1, pt) * q_poch(q * pt.b(), q, n),
                            gen.alsalam_ismail(n, -q * pt.b(), kS * (-q), q));
        return rb.finish();
    });
}

IdentityReport first_terms_check(const Rational& q, const Generators& gen) {
    return run_guarded("first_terms", q, std::nullopt, 0, 4, [&] {
        ReportBuilder rb("first_terms", q, std::nullopt, 0, 4);
        const Rational q2 = q * q, q3 = q2 * q, q4 = q3 * q;
        const Rational one(1);
        const std::vector<XsPoly> u_list = {
            XsPoly(one),
            mono(1 + q, 1, 0),
            mono((1 + q) * (1 + q2), 2, 0) + mono(q, 0, 1),
            mono((1 + q) * (1 + q2) * (1 + q3), 3, 0) + mono(q * (1 + q) * (1 + q2), 1, 1),
        };
        const std::vector<XsPoly> t_list = {
            XsPoly(one),
            kX,
            mono(1 + q, 2, 0) + mono(q, 0, 1),
            mono((1 + q) * (1 + q2), 3, 0) + mono(q * (1 + q + q2), 1, 1),
            mono((1 + q) * (1 + q2) * (1 + q3), 4, 0) + mono(q * (1 + q) * (1 + q2) * (1 + q2), 2, 1) +
                mono(q4, 0, 2),
        };
        const std::vector<XsPoly> l_list = {
            XsPoly(Rational(2)),
            kX,
            mono(one, 2, 0) + mono(1 + q, 0, 1),
            mono(one, 3, 0) + mono(1 + q + q2, 1, 1),
            mono(one, 4, 0) + mono(1 + q + q2 + q3, 2, 1) + mono(q2 + q4, 0, 2),
        };
        const ParamPoint zero(q, Rational(0), true);
        for (int n = 0; n < static_cast<int>(u_list.size()) && !rb.failed(); ++n)
            if (!rb.expect_equal(n, gen.cheb_u(n, q), u_list[n])) rb.set_note("U");
        for (int n = 0; n < static_cast<int>(t_list.size()) && !rb.failed(); ++n)
            if (!rb.expect_equal(n, gen.cheb_t(n, q), t_list[n])) rb.set_note("T");
        for (int n = 0; n < static_cast<int>(l_list.size()) && !rb.failed(); ++n)
            if (!rb.expect_equal(n, gen.lucas_trace(n, zero), l_list[n])) rb.set_note("trace-Lucas, b = 0");
        return rb.finish();
    });
}

std::vector<IdentityReport> classical_checks(int n_hi, const Generators& gen) {
    const Rational one(1);
    const ParamPoint pt(one, Rational(0), true);
    auto F = [&](int n) { return gen.fib_carlitz(n, one); };
    auto L = [&](int n) { return gen.lucas_trace(n, pt); };
    auto T = [&](int n) { return gen.cheb_t(n, one); };
    auto U = [&](int n) { return gen.cheb_u(n, one); };
    auto run = [&](const std::string& id, int lo, const std::function<std::pair<XsPoly, XsPoly>(int)>& sides) {
        return run_guarded(id, one, Rational(0), lo, n_hi, [&] {
            ReportBuilder rb(id, one, Rational(0), lo, n_hi);
            for (int n = lo; n <= n_hi && !rb.failed(); ++n) {
                const auto [lhs, rhs] = sides(n);
                rb.expect_equal(n, lhs, rhs);
            }
            return rb.finish();
        });
    };
    const Rational quarter(1, 4);
    std::vector<IdentityReport> out;
    out.push_back(run("classical_fib_recurrence", 2, [&](int n) {
        return std::pair{F(n), kX * F(n - 1) + kS * F(n - 2)};
    }));
    out.push_back(run("classical_fib_sum", 1, [&](int n) {
        XsPoly sum;
        for (int k = 0; 2 * k <= n - 1; ++k) sum += mono(int_binom(n - 1 - k, k), n - 1 - 2 * k, k);
        return std::pair{F(n), sum};
    }));
    out.push_back(run("classical_lucas_recurrence", 2, [&](int n) {
        return std::pair{L(n), kX * L(n - 1) + kS * L(n - 2)};
    }));
    out.push_back(run("classical_lucas_sum", 1, [&](int n) {
        XsPoly sum;
        for (int k = 0; 2 * k <= n; ++k) sum += mono(Rational(n) / (n - k) * int_binom(n - k, k), n - 2 * k, k);
        return std::pair{L(n), sum};
    }));
    out.push_back(run("classical_lucas_trace", 1, [&](int n) {
        return std::pair{L(n), F(n + 1) + kS * F(n - 1)};
    }));
    out.push_back(run("classical_cheb_t_recurrence", 0, [&](int n) {
        if (n == 0) return std::pair{T(0), XsPoly(one)};
        if (n == 1) return std::pair{T(1), kX};
        return std::pair{T(n), kX * T(n - 1) * Rational(2) + kS * T(n - 2)};
    }));
    out.push_back(run("classical_cheb_t_lucas", 1, [&](int n) {
        return std::pair{T(n), scale_vars(L(n), one, quarter) * power(Rational(2), n - 1)};
    }));
    out.push_back(run("classical_cheb_u_recurrence", 0, [&](int n) {
        if (n == 0) return std::pair{U(0), XsPoly(one)};
        if (n == 1) return std::pair{U(1), kX * Rational(2)};
        return std::pair{U(n), kX * U(n - 1) * Rational(2) + kS * U(n - 2)};
    }));
    out.push_back(run("classical_cheb_u_fib", 0, [&](int n) {
        return std::pair{U(n), scale_vars(F(n + 1), one, quarter) * power(Rational(2), n)};
    }));
    out.push_back(run("classical_cheb_eigen", 0, [&](int n) {
        // both equations stacked; T part in x-degree <= n, U part shifted by x^(n+1)
        const XsPoly x2s = kX * kX + kS;
        const XsPoly t = T(n), u = U(n);
        const XsPoly lt = x2s * classical_deriv(classical_deriv(t)) + kX * classical_deriv(t);
        const XsPoly lu = x2s * classical_deriv(classical_deriv(u)) + kX * classical_deriv(u) * Rational(3);
        const XsPoly shift = x_pow(n + 1);
        return std::pair{lt + shift * lu, t * Rational(n * n) + shift * u * Rational(n * (n + 2))};
    }));
    return out;
}

IdentityReport binet_float_check(int n_hi, long double tol, const Generators& gen) {
    const Rational one(1);
    return run_guarded("binet_float", one, Rational(0), 0, n_hi, [&] {
        ReportBuilder rb("binet_float", one, Rational(0), 0, n_hi);
        const ParamPoint pt(one, Rational(0), true);
        const long double root = std::sqrt(13.0L);  // x^2 + 4s at (3, 1)
        const long double alpha = (3.0L + root) / 2.0L;
        const long double beta = (3.0L - root) / 2.0L;
        const Rational x(3), s(1);
        for (int n = 0; n <= n_hi && !rb.failed(); ++n) {
            const long double f = evaluate(gen.fib_carlitz(n, one), x, s).get_d();
            const long double l = evaluate(gen.lucas_trace(n, pt), x, s).get_d();
            const long double an = std::pow(alpha, n), bn = std::pow(beta, n);
            const long double ef = std::fabs(f - (an - bn) / (alpha - beta));
            const long double el = std::fabs(l - (an + bn));
            std::ostringstream detail;
            detail << "|F - binet| = " << static_cast<double>(ef) << ", |L - binet| = " << static_cast<double>(el);
            rb.expect_true(n, ef < tol && el < tol, detail.str());
        }
        return rb.finish();
    });
}

IdentityReport pell_check(int n_hi, const Generators& gen) {
    const Rational one(1);
    return run_guarded("classical_pell", one, std::nullopt, 0, n_hi, [&] {
        ReportBuilder rb("classical_pell", one, std::nullopt, 0, n_hi);
        rb.set_note("s = -1");
        const Rational minus_one(-1);
        const XsPoly x2m1 = kX * kX - XsPoly(one);
        for (int n = 0; n <= n_hi && !rb.failed(); ++n) {
            const XsPoly t = substitute_s(gen.cheb_t(n, one), minus_one);
            const XsPoly u = substitute_s(gen.cheb_u_any(n - 1, one).to_poly(), minus_one);
            rb.expect_equal(n, t * t - x2m1 * u * u, XsPoly(one));
        }
        return rb.finish();
    });
}

}  // namespace qcheb
