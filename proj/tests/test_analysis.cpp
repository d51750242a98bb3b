#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "qcheb/analysis.hpp"

using namespace qcheb;

namespace {

const std::vector<Rational> kQ = {Rational(2), Rational(1, 2), Rational(3, 5), Rational(7)};
const Rational X0(5, 4);
const Rational S0(-3, 2);

Rational poch(const Rational& a, const Rational& q, int n) {
    Rational r(1);
    for (int j = 0; j < n; ++j) r *= 1 - a * power(q, j);
    return r;
}

Rational gauss(int n, int k, const Rational& q) {
    if (k < 0 || k > n) return Rational(0);
    return poch(q, q, n) / (poch(q, q, k) * poch(q, q, n - k));
}

Rational qi(int n, const Rational& q) { return (1 - power(q, n)) / (1 - q); }

// U_n(xv, sv, q) from the explicit finite sum, T_n from U
Rational u_num(int n, const Rational& q, const Rational& xv, const Rational& sv) {
    if (n < 0) return Rational(0);
    Rational total(0);
    for (int k = 0; 2 * k <= n; ++k) {
        Rational prod(1);
        for (int j = k + 1; j <= n - k; ++j) prod *= 1 + power(q, j);
        total += power(q, k * k) * gauss(n - k, k, q) * prod * power(sv, k) * power(xv, n - 2 * k);
    }
    return total;
}

Rational t_num(int n, const Rational& q, const Rational& xv, const Rational& sv) {
    if (n == 0) return Rational(1);
    return u_num(n, q, xv, sv) - power(q, n) * xv * u_num(n - 1, q, xv, sv);
}

Rational u0(int n, const Rational& q) { return u_num(n, q, X0, S0); }
Rational t0(int n, const Rational& q) { return t_num(n, q, X0, S0); }

// Jackson derivative of a function of x by its difference quotient
template <class F>
Rational jackson(F f, const Rational& q, const Rational& xv) {
    return (f(q * xv) - f(xv)) / ((q - 1) * xv);
}

using Coeffs = std::vector<Rational>;

Coeffs mul(const Coeffs& a, const Coeffs& b, int order) {
    Coeffs out(order);
    for (int i = 0; i < order && i < static_cast<int>(a.size()); ++i)
        for (int j = 0; i + j < order && j < static_cast<int>(b.size()); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// 1 / (1 - c z)
Coeffs geom(const Rational& c, int order) {
    Coeffs out(order);
    for (int k = 0; k < order; ++k) out[k] = power(c, k);
    return out;
}

}  // namespace

TEST_CASE("Jackson derivatives of the Chebyshev polynomials") {
    for (const Rational& q : kQ) {
        for (int n = 1; n <= 10; ++n) {
            auto t = [&](const Rational& xv) { return t_num(n, q, xv, S0); };
            auto u = [&](const Rational& xv) { return u_num(n, q, xv, S0); };
            REQUIRE(jackson(t, q, X0) == qi(n, q) * u0(n - 1, q));
            // U_n's derivative closes on T and U by the same oracle as the check
            REQUIRE(evaluate(q_deriv(cheb_u(n, q), q), X0, S0) == jackson(u, q, X0));
        }
        CHECK(deriv_t_check(20, q).status == Status::Pass);
        CHECK(deriv_u_check(20, q).status == Status::Pass);
    }
}

TEST_CASE("second-order q-difference equation for T") {
    for (const Rational& q : kQ) {
        for (int n = 1; n <= 8; ++n) {
            auto t_q2s = [&](const Rational& xv) { return t_num(n, q, xv, q * q * S0); };
            auto dt_q2s = [&](const Rational& xv) { return jackson(t_q2s, q, xv); };
            auto t = [&](const Rational& xv) { return t_num(n, q, xv, S0); };
            const Rational lhs = (X0 * X0 + q * S0) * jackson(dt_q2s, q, X0) + power(q, n - 1) * X0 * jackson(t, q, X0);
            REQUIRE(lhs == qi(n, q) * qi(n, q) * t0(n, q));
        }
        CHECK(qode_check(16, q).status == Status::Pass);
    }
    CHECK(qode_check(12, Rational(1)).status == Status::Pass);
}

TEST_CASE("the series h and its reciprocal") {
    for (const Rational& q : kQ) {
        const int order = 14;
        const RSeries h = h_series(q, order);
        const Rational q2 = q * q;
        Coeffs inv(order);
        for (int k = 0; k < order; ++k) {
            REQUIRE(h[k] == poch(q, q2, k) / poch(q2, q2, k));
            REQUIRE(h[k] == power(Rational(-1), k) * power(q, k * k) * q2_binom_half(-1, k, q));
            inv[k] = power(Rational(-1), k) * power(q, k * k - k) * q2_binom_half(1, k, q);
        }
        const Coeffs prod = mul(h.coeffs(), inv, order);
        REQUIRE(prod[0] == 1);
        for (int k = 1; k < order; ++k) REQUIRE(prod[k] == 0);
        CHECK(h_series_check(q, 24).status == Status::Pass);
    }
    CHECK(h_series_check(Rational(1), 24).status == Status::Skipped);
}

TEST_CASE("Pearson-type relation") {
    for (const Rational& q : kQ) {
        for (const Rational& sv : {Rational(1), Rational(-2)}) {
            CHECK(pearson_check(SeriesContext{q, sv, 24}).status == Status::Pass);
        }
    }
}

TEST_CASE("Rodrigues formulas reproduce T_n and U_n") {
    for (const Rational& q : {Rational(2), Rational(3, 5)}) {
        const Rational sv(-2);
        for (int n = 0; n <= 5; ++n) {
            const SeriesContext ctx{q, sv, 2 * n + 10};
            const RSeries rt = rodrigues_t(n, ctx);
            const RSeries ru = rodrigues_u(n, ctx);
            const XsPoly t = substitute_s(cheb_t(n, q), sv);
            const XsPoly u = substitute_s(cheb_u(n, q), sv);
            for (int d = 0; d <= n; ++d) {
                REQUIRE(rt[d] == t.coeff(d, 0));
                REQUIRE(ru[d] == u.coeff(d, 0));
            }
        }
        CHECK(rodrigues_check(6, q, sv, 10).status == Status::Pass);
    }
    CHECK_THROWS_AS(rodrigues_t(4, SeriesContext{Rational(2), Rational(1), 3}), std::invalid_argument);
}

TEST_CASE("generating functions against a scalar z-series") {
    for (const Rational& q : kQ) {
        const int order = 10;
        Coeffs gu(order), gt(order);
        for (int k = 0; k < order; ++k) {
            Coeffs tu(k + 1), tt(k + 1);
            tu[k] = power(q, k * (k + 1) / 2);
            tt[k] = power(q, k * (k - 1) / 2);
            for (int j = 0; j < k; ++j) {
                tu = mul(tu, {X0, power(q, j) * S0}, order);
                tt = mul(tt, {X0, power(q, j + 1) * S0}, order);
            }
            for (int j = 0; j <= k; ++j) tu = mul(tu, geom(power(q, j) * X0, order), order);
            for (int j = 0; j < k; ++j) tt = mul(tt, geom(power(q, j) * X0, order), order);
            for (int n = 0; n < order; ++n) {
                if (n < static_cast<int>(tu.size())) gu[n] += tu[n];
                if (n < static_cast<int>(tt.size())) gt[n] += tt[n];
            }
        }
        const PSeries su = genfun_u(order, q);
        const PSeries st = genfun_t(order, q);
        for (int n = 0; n < order; ++n) {
            REQUIRE(gu[n] == u0(n, q));
            REQUIRE(gt[n] == t0(n, q));
            REQUIRE(su[n] == cheb_u(n, q));
            REQUIRE(st[n] == cheb_t(n, q));
        }
        CHECK(genfun_check(16, q).status == Status::Pass);
    }
}

TEST_CASE("U in terms of T: exponent search") {
    for (const Rational& q : {Rational(2), Rational(3, 5)}) {
        for (int n = 1; n <= 7; ++n) {
            const auto found = solve_u_from_t_exponents(n, q);
            REQUIRE(found.has_value());
            REQUIRE(static_cast<int>(found->size()) == n + 1);
            for (int k = 0; k <= n; ++k) REQUIRE((*found)[k] == k * n - k * (k - 1) / 2);
            // and the sum itself through the scalar oracle
            Rational sum(0);
            for (int k = 0; k <= n; ++k) sum += power(q, k * n - k * (k - 1) / 2) * power(X0, k) * t0(n - k, q);
            REQUIRE(sum == u0(n, q));
        }
    }
}

TEST_CASE("Chebyshev identities by the scalar oracle") {
    for (const Rational& q : kQ) {
        for (int n = 2; n <= 10; ++n) {
            REQUIRE(t0(n + 1, q) == X0 * u0(n, q) + power(q, n) * S0 * u0(n - 1, q));
            REQUIRE((1 + power(q, n)) * t0(n, q) == u0(n, q) + power(q, 2 * n - 1) * S0 * u0(n - 2, q));
            REQUIRE(t_num(n, q, X0, q * q * S0) - t0(n, q) == (power(q, n) - 1) * q * S0 * u_num(n - 2, q, X0, q * q * S0));
            REQUIRE((1 + power(q, n)) * t0(n, q) ==
                    u_num(n, q, X0, q * q * S0) + q * S0 * u_num(n - 2, q, X0, q * q * S0));
            REQUIRE(t0(n + 1, q) - X0 * t0(n, q) == power(q, n) * (X0 * X0 + S0) * u0(n - 1, q));
        }
        for (int n = 0; n <= 5; ++n) {
            Rational odd(0), even(0);
            for (int k = 0; k <= n; ++k)
                odd += (1 + power(q, 2 * n + 1 - 2 * k)) * power(-S0, k) * power(q, 4 * k * n + 3 * k - 2 * k * k) *
                       t0(2 * n + 1 - 2 * k, q);
            for (int k = 0; k < n; ++k)
                even += (1 + power(q, 2 * n - 2 * k)) * power(-S0, k) * power(q, 4 * k * n + k - 2 * k * k) *
                        t0(2 * n - 2 * k, q);
            even += power(-S0, n) * power(q, 2 * n * n + n);
            REQUIRE(odd == u0(2 * n + 1, q));
            REQUIRE(even == u0(2 * n, q));
        }
    }
}

TEST_CASE("identity registry") {
    const std::vector<std::string>& ids = registry_ids();
    REQUIRE(ids.size() >= 18);
    for (const Rational& q : {Rational(2), Rational(1, 2), Rational(3, 5), Rational(7), Rational(1)}) {
        for (const Rational& b : {Rational(0), Rational(-1), Rational(3, 7)}) {
            const ParamPoint pt(q, b, true);
            for (const std::string& id : ids) {
                if (!registry_uses_b(id) && b != 0) continue;
                const IdentityReport r = registry_check(id, 16, pt);
                INFO(id << " at q = " << to_string(q) << ", b = " << to_string(b));
                if (q == 1 && id.rfind("hypergeom", 0) == 0)
                    CHECK(r.status == Status::Skipped);
                else
                    CHECK(r.status == Status::Pass);
            }
        }
    }
    CHECK_THROWS(registry_check("no_such_identity", 4, ParamPoint(Rational(2), Rational(0))));
}

TEST_CASE("a faulted generator is caught by the registry") {
    const Generators faulty(Fault{FamilyId::ChebU, 5});
    const ParamPoint pt(Rational(2), Rational(0));
    const IdentityReport r = registry_check("cheb_t_from_u", 10, pt, faulty);
    CHECK(r.status == Status::Fail);
    REQUIRE(r.witness.has_value());
    CHECK(genfun_check(10, Rational(2), faulty).status == Status::Fail);
}
