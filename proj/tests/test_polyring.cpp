#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qcheb/matrix2.hpp"
#include "qcheb/poly.hpp"
#include "qcheb/serialize.hpp"
#include "qcheb/series.hpp"

using namespace qcheb;

namespace {

const XsPoly x = XsPoly::x();
const XsPoly s = XsPoly::s();

XsPoly C(long n, long d = 1) { return XsPoly(make_rational(n, d)); }

XsPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 6), coef(-9, 9), count(0, 8);
    XsPoly p;
    for (int t = count(rng); t > 0; --t)
        p += XsPoly::monomial(make_rational(coef(rng), 1 + std::abs(coef(rng))), deg(rng), deg(rng));
    return p;
}

}  // namespace

TEST_CASE("ring arithmetic keeps the canonical form") {
    CHECK((x - x).is_zero());
    CHECK((x + s) * (x + s) == x * x + C(2) * x * s + s * s);
    CHECK((x + s) * (x - s) == x * x - s * s);
    const XsPoly p = x * x * C(3) + s * C(2, 5);
    CHECK(to_string(p) == "3*x^2 + 2/5*s");
    CHECK(p.degree_x() == 2);
    CHECK(XsPoly().degree_x() == -1);
    CHECK(power(x + C(1), 3) == x * x * x + C(3) * x * x + C(3) * x + C(1));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(20261016);
    for (int i = 0; i < 50; ++i) {
        const XsPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a - a).is_zero());
    }
}

TEST_CASE("dilation") {
    const Rational q(2);
    CHECK(dilate(x * x * s, q, 1, 2) == x * x * s * Rational(16));
    CHECK(dilate(x * s, q, -1, 0) == x * s * Rational(1, 2));
    CHECK(scale_vars(x * s * s, Rational(3), Rational(1, 2)) == x * s * s * Rational(3, 4));
}

TEST_CASE("q-derivative against the difference quotient") {
    CHECK(q_deriv(x * x * x, Rational(2)) == x * x * Rational(7));
    CHECK(q_deriv(s, Rational(2)).is_zero());
    std::mt19937 rng(7);
    const Rational q(3, 5), x0(4, 3), s0(-2, 7);
    for (int i = 0; i < 20; ++i) {
        const XsPoly f = random_poly(rng);
        const Rational diff = (evaluate(f, x0, s0) - evaluate(f, q * x0, s0)) / ((1 - q) * x0);
        REQUIRE(evaluate(q_deriv(f, q), x0, s0) == diff);
    }
    CHECK(classical_deriv(x * x * x * s) == x * x * s * Rational(3));
}

TEST_CASE("substitute_s and evaluate") {
    const XsPoly p = x * x * s + s * s * C(3);
    CHECK(substitute_s(p, Rational(-2)) == x * x * Rational(-2) + C(12));
    CHECK(evaluate(p, Rational(1, 2), Rational(2)) == Rational(25, 2));
    CHECK(evaluate(p, 0.5, 2.0) == doctest::Approx(12.5));
}

TEST_CASE("SLaurent normalizes s-power denominators") {
    const SLaurent v(x * s, 2);
    CHECK(v.s_power() == 1);
    CHECK(v.numerator() == x);
    CHECK(SLaurent(s * s, 2).is_polynomial());
    CHECK(SLaurent(s * s, 2).to_poly() == C(1));
    CHECK_THROWS(SLaurent(x, 1).to_poly());
    CHECK(SLaurent(x, 1) * SLaurent(s) == SLaurent(x));
    CHECK(inverse_s_monomial(Rational(3), 2) * SLaurent(s * s) == SLaurent(C(3)));
}

TEST_CASE("truncated series") {
    using RS = TruncSeries<Rational>;
    RS one_minus_t(std::vector<Rational>{Rational(1), Rational(-1)}, 8);
    const RS inv = series_recip(one_minus_t);
    for (int k = 0; k < 8; ++k) CHECK(inv[k] == 1);
    CHECK(series_geom(Rational(3), 5)[4] == 81);
    CHECK(series_mul(inv, one_minus_t)[0] == 1);
    for (int k = 1; k < 8; ++k) CHECK(series_mul(inv, one_minus_t)[k] == 0);
    // 1/(1 - t) at t -> 2 t^2
    const RS sub = series_substitute_power(inv, Rational(2), 2, 7);
    CHECK(sub[4] == 4);
    CHECK(sub[3] == 0);
    CHECK_THROWS_AS(series_substitute_power(inv, Rational(2), 2, 20), std::invalid_argument);
    const RS d = series_q_deriv(inv, Rational(2));
    CHECK(d.order() == 7);
    CHECK(d[2] == 7);
    CHECK_THROWS_AS(inv + RS(3), std::invalid_argument);
    // constant term s is not invertible in the coefficient ring
    TruncSeries<XsPoly> bad(std::vector<XsPoly>{s}, 3);
    CHECK_THROWS(series_recip(bad));
}

TEST_CASE("2x2 matrices") {
    const Mat2<XsPoly> m{x, s, C(1), C(0)};
    CHECK(m.det() == -s);
    CHECK((m * m).det() == s * s);
    CHECK(m * identity_mat2(C(1)) == m);
}

TEST_CASE("JSON round trip is exact and canonical") {
    std::mt19937 rng(99);
    for (int i = 0; i < 100; ++i) {
        const XsPoly p = random_poly(rng);
        const nlohmann::json j = poly_to_json(p);
        REQUIRE(poly_from_json(nlohmann::json::parse(j.dump())) == p);
        REQUIRE(poly_to_json(poly_from_json(j)).dump() == j.dump());
    }
    const nlohmann::json j = poly_to_json(x * x * Rational(1, 3) + s);
    CHECK(j.dump() == R"({"terms":[{"c":"1/3","ds":0,"dx":2},{"c":"1","ds":1,"dx":0}]})");
    CHECK_THROWS_AS(poly_from_json(nlohmann::json::parse(R"({"terms":[{"c":"0","ds":0,"dx":1}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        poly_from_json(nlohmann::json::parse(R"({"terms":[{"c":"1","ds":0,"dx":1},{"c":"2","ds":0,"dx":1}]})")),
        std::invalid_argument);
    CHECK(laurent_to_json(SLaurent(x, 2))["s_power"] == 2);
}
