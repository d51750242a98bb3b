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

#include "qcheb/moments.hpp"

#include <stdexcept>

namespace qcheb {

namespace {

const XsPoly kX = XsPoly::x();
const XsPoly kS = XsPoly::s();

Rational sign(int n) { return n % 2 == 0 ? Rational(1) : Rational(-1); }

// The s-polynomial multiplying x^d in p.
XsPoly x_coeff(const XsPoly& p, int d) {
    XsPoly out;
    for (const auto& [mono, c] : p.terms())
        if (mono.dx == d) out.add_term(Monomial{0, mono.ds}, c);
    return out;
}

// (-q;q)_k (-q^a;q)_k
Rational minus_q_pair(const Rational& q, int a, int k) {
    return inverse(q_poch(-q, q, k) * q_poch(-power(q, a), q, k), "(-q;q)_k (-q^a;q)_k");
}

}  // namespace

RecurrenceSpec gen_fib_spec(const Rational& q) {
    // F_(k+1) = x F_k + q^(k-1) s / ((1 + q^(k-1))(1 + q^k)) F_(k-1)
    return {"gen_fib", [q](int k) {
                return kS * (power(q, k - 1) * inverse((1 + power(q, k - 1)) * (1 + power(q, k)), "(1+q^(k-1))(1+q^k)"));
            }};
}

RecurrenceSpec lucas_star_spec(const Rational& q) {
    // L_0 = 2 is replaced by 1, which halves nothing but doubles t(2).
    return {"lucas_star", [q](int k) {
                if (k == 2) return kS * (q * inverse(1 + q, "1 + q"));
                return kS * (power(q, k - 1) *
                             inverse((1 + power(q, k - 2)) * (1 + power(q, k - 1)), "(1+q^(k-2))(1+q^(k-1))"));
            }};
}

RecurrenceSpec carlitz_spec(const Rational& q) {
    return {"carlitz", [q](int k) { return kS * power(q, k - 1); }};
}

RecurrenceSpec classical_spec() {
    return {"classical", [](int) { return kS; }};
}

XsPoly basis_element(const RecurrenceSpec& spec, int k) {
    if (k < 0) throw std::invalid_argument("basis_element: k must be non-negative");
    XsPoly prev(Rational(1));
    if (k == 0) return prev;
    XsPoly cur = kX;
    for (int j = 2; j <= k; ++j) {
        XsPoly next = kX * cur + spec.t(j) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<XsPoly> moments_from_recurrence(const RecurrenceSpec& spec, int count) {
    if (count < 1) throw std::invalid_argument("moments_from_recurrence: count must be positive");
    std::vector<XsPoly> t(static_cast<std::size_t>(count) + 2);
    for (int k = 2; k < count + 2; ++k) t[k] = spec.t(k);
    // v[k] = coefficient of p_k in x^m; x p_k = p_(k+1) - t(k+1) p_(k-1)
    std::vector<XsPoly> v{XsPoly(Rational(1))};
    std::vector<XsPoly> out{v[0]};
    for (int m = 1; m < count; ++m) {
        std::vector<XsPoly> next(v.size() + 1);
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k].is_zero()) continue;
            next[k + 1] += v[k];
            if (k >= 1) next[k - 1] -= t[k + 1] * v[k];
        }
        v = std::move(next);
        out.push_back(v[0]);
    }
    return out;
}

XsPoly apply_functional(const XsPoly& p, const std::vector<XsPoly>& moments) {
    XsPoly out;
    for (const auto& [mono, c] : p.terms()) {
        if (mono.dx >= static_cast<int>(moments.size()))
            throw std::invalid_argument("apply_functional: not enough moments");
        out += moments[mono.dx] * XsPoly::monomial(c, 0, mono.ds);
    }
    return out;
}

std::vector<XsPoly> expand_in_basis(const XsPoly& p, const std::vector<XsPoly>& basis) {
    const int deg = p.degree_x();
    if (deg < 0) return {};
    if (deg >= static_cast<int>(basis.size())) throw std::invalid_argument("expand_in_basis: basis too short");
    std::vector<XsPoly> coef(static_cast<std::size_t>(deg) + 1);
    XsPoly rest = p;
    for (int d = deg; d >= 1; --d) {
        if (basis[d].degree_x() != d || x_coeff(basis[d], d) != XsPoly(Rational(1)))
            throw std::invalid_argument("expand_in_basis: basis element is not monic of the right degree");
        coef[d] = x_coeff(rest, d);
        if (!coef[d].is_zero()) rest -= coef[d] * basis[d];
    }
    coef[0] = rest;
    return coef;
}

std::vector<XsPoly> expand_x_fib(int n, const Rational& q) {
    std::vector<XsPoly> out;
    for (int k = 0; 2 * k <= n; ++k) {
        const Rational c = (q_binom(n, k, q) - q_binom(n, k - 1, q)) * sign(k) * minus_q_pair(q, n + 2 - 2 * k, k);
        out.push_back(XsPoly::monomial(c, 0, k));
    }
    return out;
}

std::vector<XsPoly> expand_x_lucas(int n, const Rational& q) {
    std::vector<XsPoly> out;
    for (int k = 0; 2 * k <= n; ++k) {
        const Rational c = q_binom(n, k, q) * power(-q, k) * minus_q_pair(q, n - 2 * k + 1, k);
        out.push_back(XsPoly::monomial(c, 0, k));
    }
    return out;
}

XsPoly moments_fib_without_qn(int n, const Rational& q) {
    const Rational c = q_binom(2 * n, n, q) / q_int(n + 1, q) * sign(n) *
                       inverse(q_poch(-q, q, n) * q_poch(-q * q, q, n), "(-q;q)_n (-q^2;q)_n");
    return XsPoly::monomial(c, 0, n);
}

XsPoly moments_fib_closed(int n, const Rational& q) { return moments_fib_without_qn(n, q) * power(q, n); }

XsPoly moments_fib_product_form(int n, const Rational& q) {
    Rational den = (1 + q) * (1 + power(q, n + 1));
    for (int j = 2; j <= n; ++j) den *= (1 + power(q, j)) * (1 + power(q, j));
    const Rational c = power(q, n) * q_binom(2 * n, n, q) / q_int(n + 1, q) * sign(n) * inverse(den, "product form");
    return XsPoly::monomial(c, 0, n);
}

XsPoly moments_lucas_closed(int n, const Rational& q) {
    const Rational p = q_poch(-q, q, n);
    return XsPoly::monomial(q_binom(2 * n, n, q) * power(-q, n) * inverse(p * p, "(-q;q)_n^2"), 0, n);
}

XsPoly moments_carlitz_closed(int n, const Rational& q) {
    return XsPoly::monomial(power(-q, n) * q_catalan(n, q), 0, n);
}

XsPoly moments_classical_closed(int n) {
    return XsPoly::monomial(sign(n) * Rational(binomial(2 * n, n)) / (n + 1), 0, n);
}

namespace {

// DP moments against an even-moment closed form; odd moments must vanish.
IdentityReport moment_report(const std::string& id, const Rational& q, int n_hi, const RecurrenceSpec& spec,
                             XsPoly (*closed_form)(int, const Rational&)) {
    return run_guarded(id, q, std::nullopt, 0, n_hi, [&] {
        ReportBuilder rb(id, q, std::nullopt, 0, n_hi);
        const std::vector<XsPoly> m = moments_from_recurrence(spec, 2 * n_hi + 2);
        for (int n = 0; n <= n_hi && !rb.failed(); ++n) {
            rb.expect_equal(n, m[2 * n], closed_form(n, q));
            rb.expect_equal(n, m[2 * n + 1], XsPoly());
        }
        return rb.finish();
    });
}

}  // namespace

IdentityReport moments_fib_check(int n_hi, const Rational& q) {
    return moment_report("moments_gen_fib", q, n_hi, gen_fib_spec(q), moments_fib_closed);
}

IdentityReport moments_fib_forms_check(int n_hi, const Rational& q) {
    // the product form only makes sense from n = 1 on
    return run_guarded("moments_gen_fib_forms", q, std::nullopt, 1, n_hi, [&] {
        ReportBuilder rb("moments_gen_fib_forms", q, std::nullopt, 1, n_hi);
        for (int n = 1; n <= n_hi && !rb.failed(); ++n)
            rb.expect_equal(n, moments_fib_product_form(n, q), moments_fib_closed(n, q));
        return rb.finish();
    });
}

IdentityReport moments_lucas_check(int n_hi, const Rational& q) {
    return moment_report("moments_lucas_star", q, n_hi, lucas_star_spec(q), moments_lucas_closed);
}

IdentityReport moments_carlitz_check(int n_hi, const Rational& q) {
    return moment_report("moments_carlitz", q, n_hi, carlitz_spec(q), moments_carlitz_closed);
}

IdentityReport moments_classical_check(int n_hi, const Generators& gen) {
    const Rational one(1);
    return run_guarded("moments_classical", one, std::nullopt, 0, n_hi, [&] {
        ReportBuilder rb("moments_classical", one, std::nullopt, 0, n_hi);
        const std::vector<XsPoly> m = moments_from_recurrence(classical_spec(), 2 * n_hi + 2);
        const std::vector<XsPoly> mq = moments_from_recurrence(carlitz_spec(one), 2 * n_hi + 2);
        for (int n = 0; n <= n_hi && !rb.failed(); ++n) {
            rb.expect_equal(n, m[2 * n], moments_classical_closed(n));
            rb.expect_equal(n, m[2 * n + 1], XsPoly());
            rb.expect_equal(n, mq[2 * n], m[2 * n]);
        }
        // x^n = sum_k (C(n,k) - C(n,k-1)) (-s)^k F_(n+1-2k)(x,s)
        for (int n = 0; n <= 2 * n_hi && !rb.failed(); ++n) {
            XsPoly sum;
            for (int k = 0; 2 * k <= n; ++k) {
                const Rational c = Rational(binomial(n, k)) - (k > 0 ? Rational(binomial(n, k - 1)) : Rational(0));
                sum += gen.fib_carlitz(n + 1 - 2 * k, one) * XsPoly::monomial(c * sign(k), 0, k);
            }
            rb.expect_equal(n, sum, x_pow(n));
        }
        return rb.finish();
    });
}

IdentityReport expansion_fib_check(int n_hi, const Rational& q, const Generators& gen) {
    return run_guarded("expansion_gen_fib", q, std::nullopt, 0, n_hi, [&] {
        ReportBuilder rb("expansion_gen_fib", q, std::nullopt, 0, n_hi);
        for (int n = 0; n <= n_hi && !rb.failed(); ++n) {
            const std::vector<XsPoly> c = expand_x_fib(n, q);
            XsPoly sum;
            for (int k = 0; k < static_cast<int>(c.size()); ++k) sum += c[k] * gen.gen_fib(n + 1 - 2 * k, q);
            rb.expect_equal(n, sum, x_pow(n));
        }
        return rb.finish();
    });
}

IdentityReport expansion_lucas_check(int n_hi, const Rational& q, const Generators& gen) {
    return run_guarded("expansion_lucas_star", q, std::nullopt, 0, n_hi, [&] {
        ReportBuilder rb("expansion_lucas_star", q, std::nullopt, 0, n_hi);
        auto lucas_star = [&](int m) { return m == 0 ? XsPoly(Rational(1)) : gen.gen_lucas(m, q); };
        for (int n = 0; n <= n_hi && !rb.failed(); ++n) {
            const std::vector<XsPoly> c = expand_x_lucas(n, q);
            XsPoly star_sum;
            XsPoly plain_sum;
            for (int k = 0; k < static_cast<int>(c.size()); ++k) {
                star_sum += c[k] * lucas_star(n - 2 * k);
                plain_sum += c[k] * gen.gen_lucas(n - 2 * k, q);
            }
            rb.expect_equal(n, star_sum, x_pow(n));
            // with L_0 = 2 the even case picks up the middle coefficient once more
            XsPoly expected = x_pow(n);
            if (n % 2 == 0) expected += c.back();
            rb.expect_equal(n, plain_sum, expected);
            if (n % 2 == 0) rb.expect_equal(n, c.back(), moments_lucas_closed(n / 2, q));
        }
        return rb.finish();
    });
}

IdentityReport orthogonality_check(int sum_hi, const Rational& q, const Generators& gen) {
    return run_guarded("orthogonality_gen_fib", q, std::nullopt, 0, sum_hi, [&] {
        ReportBuilder rb("orthogonality_gen_fib", q, std::nullopt, 0, sum_hi);
        const std::vector<XsPoly> m = moments_from_recurrence(gen_fib_spec(q), sum_hi + 1);
        for (int total = 0; total <= sum_hi && !rb.failed(); ++total)
            for (int a = 0; 2 * a <= total && !rb.failed(); ++a) {
                const int b = total - a;
                const XsPoly value = apply_functional(gen.gen_fib(a + 1, q) * gen.gen_fib(b + 1, q), m);
                if (a != b)
                    rb.expect_equal(total, value, XsPoly());
                else
                    rb.expect_true(total, !value.is_zero(), "Lambda(p_n^2) vanished");
            }
        return rb.finish();
    });
}

IdentityReport nonorthogonality_check(const Rational& q, const Generators& gen) {
    if (q == 1)
        return skipped_report("nonorthogonality_trace_lucas", q, Rational(0), 1, 4,
                              "defect vanishes at q = 1; check is for q != 1 only");
    return run_guarded("nonorthogonality_trace_lucas", q, Rational(0), 1, 4, [&] {
        ReportBuilder rb("nonorthogonality_trace_lucas", q, Rational(0), 1, 4);
        const ParamPoint pt(q, Rational(0));
        std::vector<XsPoly> l{XsPoly(Rational(1))};
        for (int n = 1; n <= 4; ++n) l.push_back(gen.lucas_trace(n, pt));
        const XsPoly defect = XsPoly::monomial(q * q * (1 - q), 0, 2);
        const XsPoly product = l[1] * l[3];
        rb.expect_equal(4, product, l[4] - l[2] * (kS * power(q, 3)) - defect);
        const std::vector<XsPoly> coef = expand_in_basis(product, l);
        rb.expect_equal(4, coef[0], -defect);
        rb.expect_true(4, !coef[0].is_zero(), "Lambda(l_1 l_3) vanished");
        return rb.finish();
    });
}

}  // namespace qcheb
