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

#include "qcheb/matrix_ids.hpp"

#include <stdexcept>

namespace qcheb {

namespace {

const XsPoly kX = XsPoly::x();
const XsPoly kS = XsPoly::s();

// c s^e as an s-Laurent value, e of either sign.
SLaurent s_term(const Rational& c, int e) {
    if (e >= 0) return XsPoly::monomial(c, 0, e);
    return inverse_s_monomial(c, -e);
}

long binom2(long n) { return n * (n - 1) / 2; }

Rational sign(int n) { return n % 2 == 0 ? Rational(1) : Rational(-1); }

// s / ((1 - b)(1 - qb)), the lower-left factor of C at level 0.
XsPoly lower_left(const ParamPoint& pt) {
    const Rational u = pt.b();
    return kS * inverse((1 - u) * (1 - pt.q() * u), "(1 - b)(1 - qb)");
}

// F_m(x, qb, qs, q) for any integer m.
SLaurent fib_up(int m, const ParamPoint& pt, const Generators& gen) {
    return dilate(gen.fib_qb_any(m, pt.shifted(1)), pt.q(), 0, 1);
}

// Tridiagonal determinant by the three-term Laplace recursion.
XsPoly tridiag_det(const std::vector<XsPoly>& diag, const std::vector<XsPoly>& super, const std::vector<XsPoly>& sub) {
    XsPoly prev2(Rational(1));
    if (diag.empty()) return prev2;
    XsPoly prev1 = diag[0];
    for (std::size_t k = 1; k < diag.size(); ++k) {
        XsPoly next = diag[k] * prev1 - super[k - 1] * sub[k - 1] * prev2;
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return prev1;
}

}  // namespace

Mat2<XsPoly> fib_transfer(int level, const ParamPoint& pt) {
    const Rational& q = pt.q();
    const Rational u = pt.level(level);
    const Rational c = power(q, level) * inverse((1 - u) * (1 - q * u), "(1 - q^j b)(1 - q^(j+1) b)");
    return Mat2<XsPoly>{XsPoly(), XsPoly(Rational(1)), kS * c, kX};
}

Mat2<XsPoly> fib_matrix_product(int n, const ParamPoint& pt) {
    if (n < 1) throw std::invalid_argument("fib_matrix_product: n must be positive");
    Mat2<XsPoly> m = fib_transfer(0, pt);
    for (int j = 1; j < n; ++j) m = fib_transfer(j, pt) * m;
    return m;
}

Mat2<SLaurent> fib_matrix_product_negative(int n, const ParamPoint& pt) {
    if (n < 1) throw std::invalid_argument("fib_matrix_product_negative: n must be positive");
    const Rational& q = pt.q();
    Mat2<SLaurent> m = identity_mat2(SLaurent(XsPoly(Rational(1))));
    for (int j = -1; j >= -n; --j) {
        const Rational u = pt.level(j);
        // 1/c_j = (1 - q^j b)(1 - q^(j+1) b) / (q^j s)
        const SLaurent inv_c = inverse_s_monomial((1 - u) * (1 - q * u) * power(q, -j), 1);
        const Mat2<SLaurent> inv{SLaurent(-kX) * inv_c, inv_c, XsPoly(Rational(1)), SLaurent()};
        m = inv * m;
    }
    return m;
}

Mat2<XsPoly> cheb_transfer(int k, const Rational& q) {
    const Rational qk = power(q, k);
    const XsPoly x2_qs = kX * kX + kS * q;
    return Mat2<XsPoly>{kX * qk, x2_qs * qk, XsPoly(Rational(1)), kX};
}

Mat2<XsPoly> cheb_matrix_product(int n, const Rational& q) {
    if (n < 1) throw std::invalid_argument("cheb_matrix_product: n must be positive");
    Mat2<XsPoly> m = cheb_transfer(0, q);
    for (int k = 1; k < n; ++k) m = m * cheb_transfer(k, q);
    return m;
}

XsPoly tridiag_u(int n, const Rational& q) {
    if (n < 0) throw std::invalid_argument("tridiag_u: n must be non-negative");
    std::vector<XsPoly> diag, super, sub;
    for (int k = 1; k <= n; ++k) {
        diag.push_back(kX * Rational(1 + power(q, k)));
        if (k < n) {
            super.push_back(kS * power(q, k));
            sub.emplace_back(Rational(-1));
        }
    }
    return tridiag_det(diag, super, sub);
}

XsPoly tridiag_t(int n, const Rational& q) {
    if (n < 0) throw std::invalid_argument("tridiag_t: n must be non-negative");
    std::vector<XsPoly> diag, super, sub;
    for (int k = 1; k <= n; ++k) {
        diag.push_back(k == 1 ? kX : kX * Rational(1 + power(q, k - 1)));
        if (k < n) {
            super.push_back(kS * power(q, k));
            sub.emplace_back(Rational(-1));
        }
    }
    return tridiag_det(diag, super, sub);
}

SLaurent cassini_lhs(int n, const ParamPoint& pt, const Generators& gen) {
    return fib_up(n - 1, pt, gen) * gen.fib_qb_any(n + 1, pt) - gen.fib_qb_any(n, pt) * fib_up(n, pt, gen);
}

SLaurent cassini_rhs(int n, const ParamPoint& pt) {
    const Rational& q = pt.q();
    const Rational den = q_poch(q * pt.b(), q, n - 1) * q_poch(q * q * pt.b(), q, n - 1);
    return s_term(sign(n) * power(q, binom2(n)) * inverse(den, "(qb;q)_(n-1) (q^2 b;q)_(n-1)"), n - 1);
}

SLaurent cassini_euler_lhs(int n, int k, const ParamPoint& pt, const Generators& gen) {
    const SLaurent bracket =
        fib_up(n - 1, pt, gen) * gen.fib_qb_any(n + k, pt) - fib_up(n + k - 1, pt, gen) * gen.fib_qb_any(n, pt);
    return SLaurent(lower_left(pt)) * bracket;
}

SLaurent cassini_euler_rhs(int n, int k, const ParamPoint& pt, const Generators& gen) {
    const Rational& q = pt.q();
    const Rational den = q_poch(pt.b(), q, n) * q_poch(q * pt.b(), q, n);
    const Rational c = sign(n) * power(q, binom2(n)) * inverse(den, "(b;q)_n (qb;q)_n");
    const SLaurent fk = dilate(gen.fib_qb_any(k, pt.shifted(n)), q, 0, n);
    return s_term(c, n) * fk;
}

IdentityReport fib_matrix_check(int n_hi, const ParamPoint& pt, const Generators& gen) {
    return run_guarded("fib_matrix_product", pt.q(), pt.b(), 1, n_hi, [&] {
        ReportBuilder rb("fib_matrix_product", pt, 1, n_hi);
        const SLaurent c(lower_left(pt));
        Mat2<XsPoly> m = fib_transfer(0, pt);
        for (int n = 1; n <= n_hi && !rb.failed(); ++n) {
            if (n > 1) m = fib_transfer(n - 1, pt) * m;
            rb.expect_equal(n, m.a11, c * fib_up(n - 1, pt, gen));
            rb.expect_equal(n, m.a12, gen.fib_qb(n, pt));
            rb.expect_equal(n, m.a21, c * fib_up(n, pt, gen));
            rb.expect_equal(n, m.a22, gen.fib_qb(n + 1, pt));
        }
        return rb.finish();
    });
}

IdentityReport fib_matrix_negative_check(int n_hi, const ParamPoint& pt, const Generators& gen) {
    return run_guarded("fib_matrix_product_negative", pt.q(), pt.b(), -n_hi, -1, [&] {
        ReportBuilder rb("fib_matrix_product_negative", pt, -n_hi, -1);
        const SLaurent c(lower_left(pt));
        for (int n = 1; n <= n_hi && !rb.failed(); ++n) {
            const Mat2<SLaurent> m = fib_matrix_product_negative(n, pt);
            rb.expect_equal(-n, m.a11, c * fib_up(-n - 1, pt, gen));
            rb.expect_equal(-n, m.a12, gen.fib_qb_any(-n, pt));
            rb.expect_equal(-n, m.a21, c * fib_up(-n, pt, gen));
            rb.expect_equal(-n, m.a22, gen.fib_qb_any(-n + 1, pt));
        }
        return rb.finish();
    });
}

IdentityReport trace_matrix_check(int n_hi, const ParamPoint& pt, const Generators& gen) {
    return run_guarded("trace_lucas_matrix", pt.q(), pt.b(), 1, n_hi, [&] {
        ReportBuilder rb("trace_lucas_matrix", pt, 1, n_hi);
        Mat2<XsPoly> m = fib_transfer(0, pt);
        for (int n = 1; n <= n_hi && !rb.failed(); ++n) {
            if (n > 1) m = fib_transfer(n - 1, pt) * m;
            rb.expect_equal(n, m.trace(), gen.lucas_trace(n, pt));
        }
        return rb.finish();
    });
}

IdentityReport cassini_check(int n_lo, int n_hi, const ParamPoint& pt, const Generators& gen) {
    return run_guarded("cassini", pt.q(), pt.b(), n_lo, n_hi, [&] {
        ReportBuilder rb("cassini", pt, n_lo, n_hi);
        for (int n = n_lo; n <= n_hi && !rb.failed(); ++n) rb.expect_equal(n, cassini_lhs(n, pt, gen), cassini_rhs(n, pt));
        return rb.finish();
    });
}

IdentityReport cassini_euler_check(int n_hi, int k_hi, const ParamPoint& pt, const Generators& gen) {
    return run_guarded("cassini_euler", pt.q(), pt.b(), 1, n_hi, [&] {
        ReportBuilder rb("cassini_euler", pt, 1, n_hi);
        rb.set_note("k = 0.." + std::to_string(k_hi));
        for (int n = 1; n <= n_hi && !rb.failed(); ++n)
            for (int k = 0; k <= k_hi && !rb.failed(); ++k)
                if (!rb.expect_equal(n, cassini_euler_lhs(n, k, pt, gen), cassini_euler_rhs(n, k, pt, gen)))
                    rb.set_note("first mismatch at k = " + std::to_string(k));
        return rb.finish();
    });
}

IdentityReport cheb_matrix_check(int n_hi, const Rational& q, const Generators& gen) {
    return run_guarded("cheb_matrix_product", q, std::nullopt, 1, n_hi, [&] {
        ReportBuilder rb("cheb_matrix_product", q, std::nullopt, 1, n_hi);
        const XsPoly x2_qs = kX * kX + kS * q;
        Mat2<XsPoly> m = cheb_transfer(0, q);
        for (int n = 1; n <= n_hi && !rb.failed(); ++n) {
            if (n > 1) m = m * cheb_transfer(n - 1, q);
            const XsPoly t = gen.cheb_t(n, q);
            const XsPoly u = gen.cheb_u(n - 1, q);
            rb.expect_equal(n, m.a11, t);
            rb.expect_equal(n, m.a12, x2_qs * dilate(u, q, 0, 2));
            rb.expect_equal(n, m.a21, dilate(u, q, 0, 1));
            rb.expect_equal(n, m.a22, dilate(t, q, 0, 1));
        }
        return rb.finish();
    });
}

IdentityReport cheb_det_check(int n_hi, const Rational& q, const Generators& gen) {
    return run_guarded("cheb_det", q, std::nullopt, 1, n_hi, [&] {
        ReportBuilder rb("cheb_det", q, std::nullopt, 1, n_hi);
        const XsPoly x2_qs = kX * kX + kS * q;
        for (int n = 1; n <= n_hi && !rb.failed(); ++n) {
            const XsPoly t = gen.cheb_t(n, q);
            const XsPoly u = gen.cheb_u(n - 1, q);
            const XsPoly lhs = t * dilate(t, q, 0, 1) - x2_qs * dilate(u, q, 0, 1) * dilate(u, q, 0, 2);
            const XsPoly rhs = XsPoly::monomial(sign(n) * power(q, binom2(n + 1)), 0, n);
            rb.expect_equal(n, lhs, rhs);
        }
        return rb.finish();
    });
}

IdentityReport cheb_det_sqrt_check(int n_hi, const Rational& r, const Generators& gen) {
    const Rational q = r * r;
    return run_guarded("cheb_det_sqrt", q, std::nullopt, 1, n_hi, [&] {
        ReportBuilder rb("cheb_det_sqrt", q, std::nullopt, 1, n_hi);
        rb.set_note("q = r^2 with r = " + to_string(r));
        const XsPoly qx2_s = kX * kX * q + kS;
        for (int n = 1; n <= n_hi && !rb.failed(); ++n) {
            const XsPoly t = gen.cheb_t(n, q);
            const XsPoly u = gen.cheb_u(n - 1, q);
            // q^((2n-1)/2) = r^(2n-1), q^(n^2/2) = r^(n^2)
            const XsPoly lhs = scale_vars(t, q, Rational(1)) * scale_vars(t, r, Rational(1)) -
                               qx2_s * u * scale_vars(u, r, Rational(1)) * power(r, 2 * n - 1);
            const XsPoly rhs = XsPoly::monomial(sign(n) * power(r, static_cast<long>(n) * n), 0, n);
            rb.expect_equal(n, lhs, rhs);
        }
        return rb.finish();
    });
}

IdentityReport tridiag_check(int n_hi, const Rational& q, const Generators& gen) {
    return run_guarded("tridiag_det", q, std::nullopt, 1, n_hi, [&] {
        ReportBuilder rb("tridiag_det", q, std::nullopt, 1, n_hi);
        for (int n = 1; n <= n_hi && !rb.failed(); ++n) {
            rb.expect_equal(n, tridiag_u(n, q), gen.cheb_u(n, q));
            rb.expect_equal(n, tridiag_t(n, q), gen.cheb_t(n, q));
        }
        return rb.finish();
    });
}

}  // namespace qcheb
