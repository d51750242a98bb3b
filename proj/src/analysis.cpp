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

#include "qcheb/analysis.hpp"

#include <map>
#include <stdexcept>

namespace qcheb {

namespace {

const XsPoly kX = XsPoly::x();
const XsPoly kS = XsPoly::s();

Rational sign(int n) { return n % 2 == 0 ? Rational(1) : Rational(-1); }
long binom2(long n) { return n * (n - 1) / 2; }

XsPoly d_n(XsPoly p, const Rational& q, int times) {
    for (int i = 0; i < times; ++i) p = q_deriv(p, q);
    return p;
}

RSeries d_n(RSeries f, const Rational& q, int times) {
    for (int i = 0; i < times; ++i) f = series_q_deriv(f, q);
    return f;
}

// h(c x^2) modulo x^order
RSeries h_of_square(const Rational& q, const Rational& c, int order) {
    return series_substitute_power(h_series(q, (order + 1) / 2 + 1), c, 2, order);
}

// prod_k (x^2 a_k + s/q) with s = s_val, as a series of the given order
RSeries square_product(const std::vector<Rational>& a, const Rational& s_over_q, int order) {
    RSeries out(order);
    if (order > 0) out[0] = 1;
    for (const Rational& ak : a) {
        RSeries f(order);
        if (order > 0) f[0] = s_over_q;
        if (order > 2) f[2] = ak;
        out = out * f;
    }
    return out;
}

// x-coefficients of p after s -> s_val, compared with a series
void compare_series(ReportBuilder& rb, int n, const RSeries& series, const XsPoly& poly, const Rational& s_val) {
    const XsPoly p = substitute_s(poly, s_val);
    for (int k = 0; k < series.order(); ++k)
        if (!rb.expect_equal(n, series[k], p.coeff(k, 0))) {
            rb.set_note("s = " + to_string(s_val) + ", x^" + std::to_string(k) + " coefficient");
            return;
        }
}

}  // namespace

RSeries h_series(const Rational& q, int order) {
    RSeries out(order);
    Rational c(1);
    const Rational q2 = q * q;
    for (int k = 0; k < order; ++k) {
        out[k] = c;
        // (q;q^2)_(k+1)/(q^2;q^2)_(k+1) from the k-th term
        c *= (1 - q * power(q2, k)) * inverse(1 - power(q2, k + 1), "1 - q^(2k+2)");
    }
    return out;
}

Rational q2_binom_half(int a2, int k, const Rational& q) {
    Rational out(1);
    for (int j = 0; j < k; ++j)
        out *= (1 - power(q, a2 - 2 * j)) * inverse(1 - power(q, 2 * j + 2), "1 - q^(2j+2)");
    return out;
}

RSeries rodrigues_t(int n, const SeriesContext& ctx) {
    const Rational& q = ctx.q;
    const int order = ctx.order;
    if (order < n + 1) throw std::invalid_argument("rodrigues_t: truncation order too small");
    const Rational s_inv = inverse(ctx.s_val, "s_val");
    std::vector<Rational> a;
    for (int k = 1; k <= n; ++k) a.push_back(power(q, -(2 * k + 1)));
    RSeries g = h_of_square(q, -s_inv * power(q, -2 * n), order) * square_product(a, ctx.s_val / q, order);
    g = d_n(g, q, n);
    Rational pre = power(q, static_cast<long>(n) * (n + 1));
    for (int j = 1; j <= n; ++j) pre /= q_int(2 * j - 1, q);
    return series_recip(h_of_square(q, -s_inv, g.order())) * g * pre;
}

RSeries rodrigues_u(int n, const SeriesContext& ctx) {
    const Rational& q = ctx.q;
    const int order = ctx.order;
    if (order < n + 1) throw std::invalid_argument("rodrigues_u: truncation order too small");
    const Rational s_inv = inverse(ctx.s_val, "s_val");
    std::vector<Rational> a;
    for (int k = 1; k <= n; ++k) a.push_back(power(q, -(2 * k - 1)));
    RSeries g = series_recip(h_of_square(q, -s_inv * power(q, -(2 * n - 1)), order)) *
                square_product(a, ctx.s_val / q, order);
    g = d_n(g, q, n);
    Rational pre = power(q, static_cast<long>(n) * (n + 1)) * q_int(n + 1, q);
    for (int j = 1; j <= n; ++j) pre /= q_int(2 * j + 1, q);
    return h_of_square(q, -q * s_inv, g.order()) * g * pre;
}

PSeries genfun_u(int order, const Rational& q) {
    PSeries total(order);
    for (int k = 0; k < order; ++k) {
        // q^binom(k+1,2) z^k prod_(j<k) (x + q^j s z) / prod_(j<=k) (1 - q^j x z)
        std::vector<XsPoly> head(static_cast<std::size_t>(k) + 1);
        head[k] = XsPoly(power(q, binom2(k + 1)));
        PSeries term = series_from(head, order);
        for (int j = 0; j < k; ++j) term = term * series_from(std::vector<XsPoly>{kX, kS * power(q, j)}, order);
        for (int j = 0; j <= k; ++j) term = term * series_geom(kX * power(q, j), order);
        total += term;
    }
    return total;
}

PSeries genfun_t(int order, const Rational& q) {
    PSeries total(order);
    for (int k = 0; k < order; ++k) {
        // q^binom(k,2) z^k prod_(j<k) (x + q^(j+1) s z) / prod_(j<k) (1 - q^j x z)
        std::vector<XsPoly> head(static_cast<std::size_t>(k) + 1);
        head[k] = XsPoly(power(q, binom2(k)));
        PSeries term = series_from(head, order);
        for (int j = 0; j < k; ++j)
            term = term * series_from(std::vector<XsPoly>{kX, kS * power(q, j + 1)}, order);
        for (int j = 0; j < k; ++j) term = term * series_geom(kX * power(q, j), order);
        total += term;
    }
    return total;
}

std::optional<std::vector<int>> solve_u_from_t_exponents(int n, const Rational& q) {
    const Generators& gen = Generators::shared();
    auto term = [&](int k) { return x_pow(k) * gen.cheb_t(n - k, q); };
    auto x_part = [](const XsPoly& p, int d) {
        XsPoly out;
        for (const auto& [mono, c] : p.terms())
            if (mono.dx == d) out.add_term(mono, c);
        return out;
    };
    const int e_max = n * n + n;
    std::vector<int> exps(static_cast<std::size_t>(n) + 1, 0);
    XsPoly rest = gen.cheb_u(n, q);
    for (int k = 0; k <= n; ++k) {
        const XsPoly target = x_part(rest, k);
        const XsPoly own = x_part(term(k), k);
        bool found = false;
        if (!own.is_zero()) {
            for (int e = 0; e <= e_max && !found; ++e)
                if (own * power(q, e) == target) {
                    exps[k] = e;
                    found = true;
                }
            if (found) rest -= term(k) * power(q, exps[k]);
        } else if (target.is_zero() && k + 1 <= n) {
            // the x^(k+1) part couples e_k and e_(k+1)
            const XsPoly next_target = x_part(rest, k + 1);
            const XsPoly a = x_part(term(k), k + 1);
            const XsPoly b = x_part(term(k + 1), k + 1);
            for (int e = 0; e <= e_max && !found; ++e)
                for (int f = 0; f <= e_max && !found; ++f)
                    if (a * power(q, e) + b * power(q, f) == next_target) {
                        exps[k] = e;
                        exps[k + 1] = f;
                        found = true;
                    }
            if (found) {
                rest -= term(k) * power(q, exps[k]) + term(k + 1) * power(q, exps[k + 1]);
                ++k;
            }
        }
        if (!found) return std::nullopt;
    }
    if (!rest.is_zero()) return std::nullopt;
    return exps;
}

IdentityReport deriv_t_check(int n_hi, const Rational& q, const Generators& gen) {
    return run_guarded("cheb_t_q_derivative", q, std::nullopt, 1, n_hi, [&] {
        ReportBuilder rb("cheb_t_q_derivative", q, std::nullopt, 1, n_hi);
        for (int n = 1; n <= n_hi && !rb.failed(); ++n)
            rb.expect_equal(n, q_deriv(gen.cheb_t(n, q), q), gen.cheb_u(n - 1, q) * q_int(n, q));
        return rb.finish();
    });
}

IdentityReport deriv_u_check(int n_hi, const Rational& q, const Generators& gen) {
    return run_guarded("cheb_u_q_derivative", q, std::nullopt, 1, n_hi, [&] {
        ReportBuilder rb("cheb_u_q_derivative", q, std::nullopt, 1, n_hi);
        const XsPoly x2_qs = kX * kX + kS * q;
        for (int n = 1; n <= n_hi && !rb.failed(); ++n) {
            const XsPoly u = gen.cheb_u(n - 1, q);
            const XsPoly lhs = x2_qs * q_deriv(dilate(u, q, 0, 2), q) + kX * u * power(q, n - 1);
            rb.expect_equal(n, lhs, gen.cheb_t(n, q) * q_int(n, q));
        }
        return rb.finish();
    });
}

IdentityReport qode_check(int n_hi, const Rational& q, const Generators& gen) {
    return run_guarded("cheb_q_difference_equations", q, std::nullopt, 0, n_hi, [&] {
        ReportBuilder rb("cheb_q_difference_equations", q, std::nullopt, 0, n_hi);
        const XsPoly x2_qs = kX * kX + kS * q;
        const Rational q_inv = inverse(q, "q");
        const Rational three = q_int(3, q);
        for (int n = 0; n <= n_hi && !rb.failed(); ++n) {
            const XsPoly t = gen.cheb_t(n, q);
            const XsPoly u = gen.cheb_u(n, q);
            const Rational nn = q_int(n, q) * q_int(n, q);
            const Rational n_n2 = q_int(n, q) * q_int(n + 2, q);
            const Rational qn1 = power(q, n - 1);
            if (!rb.expect_equal(n, x2_qs * d_n(dilate(t, q, 0, 2), q, 2) + kX * q_deriv(t, q) * qn1, t * nn))
                rb.set_note("T, dilated form");
            else if (!rb.expect_equal(n, x2_qs * d_n(dilate(u, q, 0, 2), q, 2) + kX * q_deriv(u, q) * (qn1 * three),
                                      u * n_n2))
                rb.set_note("U, dilated form");
            else if (!rb.expect_equal(n, (kX * kX * q + kS * q_inv) * d_n(t, q, 2) + kX * q_deriv(t, q),
                                      dilate(t, q, 1, 0) * (power(q, -n) * nn)))
                rb.set_note("T, x-scaled form");
            else if (!rb.expect_equal(n, (kX * kX * power(q, 3) + kS * q_inv) * d_n(u, q, 2) + kX * q_deriv(u, q) * three,
                                      dilate(u, q, 1, 0) * (power(q, -n) * n_n2)))
                rb.set_note("U, x-scaled form");
        }
        return rb.finish();
    });
}

IdentityReport h_series_check(const Rational& q, int order) {
    if (q == 1) return skipped_report("h_series", q, std::nullopt, 0, order - 1, "h is defined for q != 1 only");
    return run_guarded("h_series", q, std::nullopt, 0, order - 1, [&] {
        ReportBuilder rb("h_series", q, std::nullopt, 0, order - 1);
        const RSeries h = h_series(q, order);
        RSeries one_minus_x(order), one_minus_qx(order);
        one_minus_x[0] = 1;
        one_minus_qx[0] = 1;
        if (order > 1) {
            one_minus_x[1] = -1;
            one_minus_qx[1] = -q;
        }
        const RSeries lhs = h * one_minus_x;
        const RSeries rhs = one_minus_qx * series_substitute_power(h, q * q, 1, order);
        const RSeries inv = series_recip(h);
        for (int k = 0; k < order && !rb.failed(); ++k) {
            rb.expect_equal(k, lhs[k], rhs[k]);
            rb.expect_equal(k, h[k], sign(k) * power(q, static_cast<long>(k) * k) * q2_binom_half(-1, k, q));
            rb.expect_equal(k, inv[k], sign(k) * power(q, static_cast<long>(k) * k - k) * q2_binom_half(1, k, q));
        }
        return rb.finish();
    });
}

IdentityReport pearson_check(const SeriesContext& ctx) {
    const Rational& q = ctx.q;
    if (q == 1) return skipped_report("pearson", q, std::nullopt, 0, ctx.order - 1, "q != 1 only");
    return run_guarded("pearson", q, std::nullopt, 0, ctx.order - 1, [&] {
        ReportBuilder rb("pearson", q, std::nullopt, 0, ctx.order - 1);
        rb.set_note("s = " + to_string(ctx.s_val));
        const int big = ctx.order + 1;
        const RSeries w = h_of_square(q, -inverse(ctx.s_val, "s_val"), big);
        RSeries x2_s(big);
        x2_s[0] = ctx.s_val;
        if (big > 2) x2_s[2] = 1;
        const RSeries lhs = series_q_deriv(x2_s * w, q);
        const RSeries wq = series_substitute_power(w, q, 1, big);
        for (int k = 0; k < ctx.order && !rb.failed(); ++k)
            rb.expect_equal(k, lhs[k], k == 0 ? Rational(0) : q * wq[k - 1]);
        return rb.finish();
    });
}

IdentityReport rodrigues_check(int n_hi, const Rational& q, const Rational& s_val, int extra, const Generators& gen) {
    if (q == 1) return skipped_report("rodrigues", q, std::nullopt, 0, n_hi, "q != 1 only");
    return run_guarded("rodrigues", q, std::nullopt, 0, n_hi, [&] {
        ReportBuilder rb("rodrigues", q, std::nullopt, 0, n_hi);
        rb.set_note("s = " + to_string(s_val));
        for (int n = 0; n <= n_hi && !rb.failed(); ++n) {
            const SeriesContext ctx{q, s_val, 2 * n + extra};
            compare_series(rb, n, rodrigues_t(n, ctx), gen.cheb_t(n, q), s_val);
            if (!rb.failed()) compare_series(rb, n, rodrigues_u(n, ctx), gen.cheb_u(n, q), s_val);
        }
        return rb.finish();
    });
}

IdentityReport genfun_check(int order, const Rational& q, const Generators& gen) {
    return run_guarded("generating_functions", q, std::nullopt, 0, order - 1, [&] {
        ReportBuilder rb("generating_functions", q, std::nullopt, 0, order - 1);
        const PSeries u = genfun_u(order, q);
        const PSeries t = genfun_t(order, q);
        for (int n = 0; n < order && !rb.failed(); ++n) {
            rb.expect_equal(n, u[n], gen.cheb_u(n, q));
            rb.expect_equal(n, t[n], gen.cheb_t(n, q));
        }
        return rb.finish();
    });
}

namespace {

// Up to two equalities per identity; the second pair defaults to 0 == 0.
struct Sides {
    Sides(SLaurent l, SLaurent r, SLaurent l2 = {}, SLaurent r2 = {})
        : lhs(std::move(l)), rhs(std::move(r)), lhs2(std::move(l2)), rhs2(std::move(r2)) {}
    SLaurent lhs;
    SLaurent rhs;
    SLaurent lhs2;
    SLaurent rhs2;
};

struct RegistryEntry {
    int n_lo;
    bool uses_b;
    bool q_ne_1;
    std::function<Sides(int n, const ParamPoint& pt, const Generators& gen)> sides;
};

const std::map<std::string, RegistryEntry>& registry() {
    static const std::map<std::string, RegistryEntry> table = [] {
        std::map<std::string, RegistryEntry> t;
        const SLaurent x(kX);
        const SLaurent s(kS);
        using G = const Generators&;
        using P = const ParamPoint&;
        auto T = [](G g, P p, int n) { return g.cheb_t_any(n, p.q()); };
        auto U = [](G g, P p, int n) { return g.cheb_u_any(n, p.q()); };
        auto F = [](G g, P p, int n) { return SLaurent(g.gen_fib(n, p.q())); };
        auto L = [](G g, P p, int n) { return SLaurent(g.gen_lucas(n, p.q())); };
        auto ds = [](const SLaurent& v, P p, int m) { return dilate(v, p.q(), 0, m); };
        auto c = [](const Rational& r) { return SLaurent(XsPoly(r)); };

        t["lucas_qb_from_fib"] = {1, true, false, [=](int n, P p, G g) {
                                      const Rational& q = p.q();
                                      const Rational u = p.level(n - 1);
                                      const Rational k = power(q, 2 * n - 1) * p.b() *
                                                         inverse((1 - u) * (1 - q * u), "(1-q^(n-1)b)(1-q^n b)");
                                      return Sides{g.lucas_qb(n, p),
                                                   g.fib_qb(n + 1, p) - s * c(k) * g.fib_qb(n - 1, p)};
                                  }};
        t["gen_lucas_from_fib"] = {1, false, false, [=](int n, P p, G g) {
                                       const Rational& q = p.q();
                                       const Rational k = power(q, 2 * n - 1) *
                                                          inverse((1 + power(q, n - 1)) * (1 + power(q, n)), "pair");
                                       return Sides{L(g, p, n), F(g, p, n + 1) + s * c(k) * F(g, p, n - 1)};
                                   }};
        t["gen_lucas_fib_combination"] = {0, false, false, [=](int n, P p, G g) {
                                              const Rational qn = power(p.q(), n);
                                              return Sides{L(g, p, n),
                                                           c(1 + qn) * F(g, p, n + 1) - c(qn) * x * F(g, p, n)};
                                          }};
        t["gen_lucas_fib_dilated"] = {0, false, false, [=](int n, P p, G g) {
                                          const Rational qn = power(p.q(), n);
                                          return Sides{c(qn) * L(g, p, n), c(1 + qn) * ds(F(g, p, n + 1), p, 2) -
                                                                               x * ds(F(g, p, n), p, 2)};
                                      }};
        t["cheb_t_from_u"] = {0, false, false, [=](int n, P p, G g) {
                                  return Sides{T(g, p, n), U(g, p, n) - c(power(p.q(), n)) * x * U(g, p, n - 1)};
                              }};
        t["cheb_t_step"] = {0, false, false, [=](int n, P p, G g) {
                                const Rational& q = p.q();
                                return Sides{T(g, p, n + 1), c(power(q, n)) * x * T(g, p, n) +
                                                                 (x * x + c(q) * s) * ds(U(g, p, n - 1), p, 2)};
                            }};
        t["gen_lucas_step_dilated"] = {0, false, false, [=](int n, P p, G g) {
                                           const Rational& q = p.q();
                                           const Rational qn = power(q, n);
                                           return Sides{c(1 + qn) * L(g, p, n + 1) - c(qn) * x * L(g, p, n),
                                                        (x * x + c(q) * s) * ds(F(g, p, n), p, 2)};
                                       }};
        t["cheb_u_from_t_sum"] = {0, false, false, [=](int n, P p, G g) {
                                      SLaurent sum;
                                      for (int k = 0; k <= n; ++k)
                                          sum += c(power(p.q(), static_cast<long>(k) * n - binom2(k))) * SLaurent(x_pow(k)) *
                                                 T(g, p, n - k);
                                      return Sides{U(g, p, n), sum};
                                  }};
        t["cheb_t_next"] = {0, false, false, [=](int n, P p, G g) {
                                const Rational& q = p.q();
                                const SLaurent a = U(g, p, n + 1) - c(power(q, n + 1)) * x * U(g, p, n);
                                const SLaurent b = x * U(g, p, n) + c(power(q, n)) * s * U(g, p, n - 1);
                                return Sides{T(g, p, n + 1), a, a, b};
                            }};
        t["cheb_t_u_shift2"] = {0, false, false, [=](int n, P p, G g) {
                                    const Rational& q = p.q();
                                    return Sides{c(1 + power(q, n)) * T(g, p, n),
                                                 U(g, p, n) + c(power(q, 2 * n - 1)) * s * U(g, p, n - 2)};
                                }};
        t["cheb_u_odd_in_t"] = {0, false, false, [=](int n, P p, G g) {
                                    const Rational& q = p.q();
                                    SLaurent sum;
                                    for (int k = 0; k <= n; ++k)
                                        sum += c((1 + power(q, 2 * n + 1 - 2 * k)) * sign(k) *
                                                 power(q, 4L * k * n + 3L * k - 2L * k * k)) *
                                               SLaurent(XsPoly::monomial(Rational(1), 0, k)) * T(g, p, 2 * n + 1 - 2 * k);
                                    return Sides{U(g, p, 2 * n + 1), sum};
                                }};
        t["cheb_u_even_in_t"] = {0, false, false, [=](int n, P p, G g) {
                                     const Rational& q = p.q();
                                     SLaurent sum;
                                     for (int k = 0; k <= n - 1; ++k)
                                         sum += c((1 + power(q, 2 * n - 2 * k)) * sign(k) *
                                                  power(q, 4L * k * n + k - 2L * k * k)) *
                                                SLaurent(XsPoly::monomial(Rational(1), 0, k)) * T(g, p, 2 * n - 2 * k);
                                     sum += SLaurent(XsPoly::monomial(sign(n) * power(q, 2L * n * n + n), 0, n));
                                     return Sides{U(g, p, 2 * n), sum};
                                 }};
        t["cheb_t_s_dilation"] = {0, false, false, [=](int n, P p, G g) {
                                      const Rational& q = p.q();
                                      return Sides{ds(T(g, p, n), p, 2) - T(g, p, n),
                                                   c((power(q, n) - 1) * q) * s * ds(U(g, p, n - 2), p, 2)};
                                  }};
        t["cheb_t_from_u_dilated"] = {0, false, false, [=](int n, P p, G g) {
                                          const Rational& q = p.q();
                                          return Sides{c(1 + power(q, n)) * T(g, p, n),
                                                       ds(U(g, p, n), p, 2) + c(q) * s * ds(U(g, p, n - 2), p, 2)};
                                      }};
        t["cheb_t_next_x2_s"] = {0, false, false, [=](int n, P p, G g) {
                                     return Sides{T(g, p, n + 1) - x * T(g, p, n),
                                                  c(power(p.q(), n)) * (x * x + s) * U(g, p, n - 1)};
                                 }};
        t["cheb_tu_matrix_step"] = {0, false, false, [=](int n, P p, G g) {
                                        const Rational qn = power(p.q(), n);
                                        const SLaurent tn = T(g, p, n);
                                        const SLaurent u = U(g, p, n - 1);
                                        return Sides{T(g, p, n + 1), x * tn + c(qn) * (x * x + s) * u, U(g, p, n),
                                                     tn + c(qn) * x * u};
                                    }};
        t["hypergeom_gen_fib"] = {0, false, true, [=](int n, P p, G g) {
                                      return Sides{hypergeom_gen_fib(n, p.q()), F(g, p, n + 1)};
                                  }};
        t["hypergeom_gen_lucas"] = {1, false, true, [=](int n, P p, G g) {
                                        return Sides{hypergeom_gen_lucas(n, p.q()), L(g, p, n)};
                                    }};
        return t;
    }();
    return table;
}

}  // namespace

const std::vector<std::string>& registry_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, entry] : registry()) out.push_back(id);
        return out;
    }();
    return ids;
}

bool registry_uses_b(const std::string& id) { return registry().at(id).uses_b; }

IdentityReport registry_check(const std::string& id, int n_hi, const ParamPoint& pt, const Generators& gen) {
    const auto it = registry().find(id);
    if (it == registry().end()) throw std::invalid_argument("unknown registry identity: " + id);
    const RegistryEntry& e = it->second;
    std::optional<Rational> b;
    if (e.uses_b) b = pt.b();
    if (e.q_ne_1 && pt.classical()) return skipped_report(id, pt.q(), b, e.n_lo, n_hi, "q != 1 only");
    return run_guarded(id, pt.q(), b, e.n_lo, n_hi, [&] {
        ReportBuilder rb(id, pt.q(), b, e.n_lo, n_hi);
        for (int n = e.n_lo; n <= n_hi && !rb.failed(); ++n) {
            const Sides sides = e.sides(n, pt, gen);
            if (rb.expect_equal(n, sides.lhs, sides.rhs)) rb.expect_equal(n, sides.lhs2, sides.rhs2);
        }
        return rb.finish();
    });
}

}  // namespace qcheb
