#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "qcheb/moments.hpp"
#include "qcheb/qkernel.hpp"

using namespace qcheb;

namespace {

const XsPoly x = XsPoly::x();
const XsPoly s = XsPoly::s();
const std::vector<Rational> kQ = {Rational(2), Rational(1, 2), Rational(3, 5), Rational(7)};

XsPoly s_part(const XsPoly& p, int d) {
    XsPoly out;
    for (const auto& [mono, c] : p.terms())
        if (mono.dx == d) out.add_term(Monomial{0, mono.ds}, c);
    return out;
}

// Lambda(p_k) = [k == 0] for a monic basis, solved as a triangular system in
// the monomial coefficients of the basis polynomials
std::vector<XsPoly> moments_by_solve(const std::vector<XsPoly>& basis) {
    std::vector<XsPoly> m;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        REQUIRE(basis[k].degree_x() == static_cast<int>(k));
        REQUIRE(s_part(basis[k], static_cast<int>(k)) == XsPoly(Rational(1)));
        XsPoly acc(Rational(k == 0 ? 1 : 0));
        for (std::size_t j = 0; j < k; ++j) acc -= s_part(basis[k], static_cast<int>(j)) * m[j];
        m.push_back(acc);
    }
    return m;
}

std::vector<XsPoly> fib_basis(int count, const Rational& q) {
    std::vector<XsPoly> out;
    for (int k = 0; k < count; ++k) out.push_back(Generators::shared().gen_fib(k + 1, q));
    return out;
}

std::vector<XsPoly> lucas_star_basis(int count, const Rational& q) {
    std::vector<XsPoly> out{XsPoly(Rational(1))};
    for (int k = 1; k < count; ++k) out.push_back(Generators::shared().gen_lucas(k, q));
    return out;
}

std::vector<XsPoly> carlitz_basis(int count, const Rational& q) {
    std::vector<XsPoly> out;
    for (int k = 0; k < count; ++k) out.push_back(fib_carlitz(k + 1, q));
    return out;
}

}  // namespace

TEST_CASE("first moments of the generalized Fibonacci functional") {
    const Rational q(2);
    const std::vector<XsPoly> m = moments_from_recurrence(gen_fib_spec(q), 5);
    CHECK(m[0] == XsPoly(Rational(1)));
    CHECK(m[1].is_zero());
    CHECK(m[2] == s * Rational(-2, 15));
    CHECK(moments_fib_closed(0, q) == XsPoly(Rational(1)));
    CHECK(moments_fib_closed(1, q) == m[2]);
    // dropping q^n gives a different sequence
    for (const Rational& qq : kQ)
        for (int n = 0; n <= 8; ++n) {
            CHECK(moments_fib_without_qn(n, qq) * power(qq, n) == moments_fib_closed(n, qq));
            if (n > 0) CHECK(moments_fib_without_qn(n, qq) != moments_fib_closed(n, qq));
        }
}

TEST_CASE("basis elements follow the family polynomials") {
    for (const Rational& q : kQ) {
        for (int k = 0; k <= 12; ++k) {
            REQUIRE(basis_element(gen_fib_spec(q), k) == Generators::shared().gen_fib(k + 1, q));
            REQUIRE(basis_element(carlitz_spec(q), k) == fib_carlitz(k + 1, q));
            REQUIRE(basis_element(lucas_star_spec(q), k) == lucas_star_basis(k + 1, q).back());
        }
    }
}

TEST_CASE("recurrence moments against a triangular solve") {
    for (const Rational& q : kQ) {
        const int count = 18;
        const std::vector<XsPoly> fib = moments_from_recurrence(gen_fib_spec(q), count);
        const std::vector<XsPoly> luc = moments_from_recurrence(lucas_star_spec(q), count);
        const std::vector<XsPoly> car = moments_from_recurrence(carlitz_spec(q), count);
        CHECK(fib == moments_by_solve(fib_basis(count, q)));
        CHECK(luc == moments_by_solve(lucas_star_basis(count, q)));
        CHECK(car == moments_by_solve(carlitz_basis(count, q)));
        for (int n = 0; 2 * n < count; ++n) {
            REQUIRE(fib[2 * n] == moments_fib_closed(n, q));
            REQUIRE(luc[2 * n] == moments_lucas_closed(n, q));
            REQUIRE(car[2 * n] == moments_carlitz_closed(n, q));
            if (2 * n + 1 < count) REQUIRE(fib[2 * n + 1].is_zero());
        }
        CHECK(moments_fib_check(10, q).status == Status::Pass);
        CHECK(moments_lucas_check(10, q).status == Status::Pass);
        CHECK(moments_carlitz_check(10, q).status == Status::Pass);
        CHECK(moments_fib_forms_check(10, q).status == Status::Pass);
    }
}

TEST_CASE("Lucas and Carlitz moment examples") {
    const Rational q(2);
    CHECK(moments_lucas_closed(0, q) == XsPoly(Rational(1)));
    CHECK(moments_lucas_closed(1, q) == s * (-q / (1 + q)));
    CHECK(moments_carlitz_closed(0, q) == XsPoly(Rational(1)));
    CHECK(moments_carlitz_closed(1, q) == s * -q);
    // C_2(q) = 1 + q
    CHECK(moments_carlitz_closed(2, q) == s * s * (q * q * (1 + q)));
}

TEST_CASE("product form agrees from n = 1") {
    for (const Rational& q : kQ) {
        CHECK(moments_fib_product_form(0, q) != moments_fib_closed(0, q));
        for (int n = 1; n <= 10; ++n) REQUIRE(moments_fib_product_form(n, q) == moments_fib_closed(n, q));
    }
}

TEST_CASE("classical moments") {
    const std::vector<XsPoly> m = moments_from_recurrence(classical_spec(), 8);
    CHECK(m[2] == s * Rational(-1));
    CHECK(m[4] == s * s * Rational(2));
    CHECK(m[6] == s * s * s * Rational(-5));
    for (int n = 0; n <= 3; ++n) CHECK(moments_classical_closed(n) == m[2 * n]);
    CHECK(moments_classical_check(8).status == Status::Pass);
}

TEST_CASE("expansions of x^n") {
    const Rational q(2);
    CHECK(expand_x_fib(0, q) == std::vector<XsPoly>{XsPoly(Rational(1))});
    const std::vector<XsPoly> c2 = expand_x_fib(2, q);
    REQUIRE(c2.size() == 2);
    CHECK(c2[1] == s * Rational(-2, 15));
    CHECK(expand_x_lucas(0, q) == std::vector<XsPoly>{XsPoly(Rational(1))});
    CHECK(expand_x_lucas(1, q) == std::vector<XsPoly>{XsPoly(Rational(1))});
    for (const Rational& qq : kQ) {
        const std::vector<XsPoly> fb = fib_basis(16, qq);
        const std::vector<XsPoly> lb = lucas_star_basis(16, qq);
        for (int n = 0; n <= 14; ++n) {
            const std::vector<XsPoly> cf = expand_x_fib(n, qq);
            const std::vector<XsPoly> cl = expand_x_lucas(n, qq);
            XsPoly f_sum, l_sum;
            for (int k = 0; k < static_cast<int>(cf.size()); ++k) f_sum += cf[k] * fb[n - 2 * k];
            for (int k = 0; k < static_cast<int>(cl.size()); ++k) l_sum += cl[k] * lb[n - 2 * k];
            REQUIRE(f_sum == x_pow(n));
            REQUIRE(l_sum == x_pow(n));
            // same coefficients as a generic basis expansion
            const std::vector<XsPoly> generic = expand_in_basis(x_pow(n), fb);
            for (int k = 0; k < static_cast<int>(cf.size()); ++k) REQUIRE(generic[n - 2 * k] == cf[k]);
        }
        CHECK(expansion_fib_check(14, qq).status == Status::Pass);
        CHECK(expansion_lucas_check(14, qq).status == Status::Pass);
    }
}

TEST_CASE("functional application and basis expansion") {
    const Rational q(3, 5);
    const std::vector<XsPoly> m = moments_from_recurrence(gen_fib_spec(q), 12);
    const std::vector<XsPoly> fb = fib_basis(12, q);
    for (int k = 1; k < 12; ++k) CHECK(apply_functional(fb[k], m).is_zero());
    CHECK(apply_functional(fb[0], m) == XsPoly(Rational(1)));
    CHECK_THROWS_AS(apply_functional(x_pow(12), m), std::invalid_argument);
    CHECK_THROWS_AS(expand_in_basis(x_pow(3), {XsPoly(Rational(1)), x * Rational(2), x * x, x * x * x}),
                    std::invalid_argument);
    CHECK(expand_in_basis(XsPoly(), fb).empty());
}

TEST_CASE("orthogonality and its failure for the trace-Lucas family") {
    for (const Rational& q : kQ) {
        CHECK(orthogonality_check(10, q).status == Status::Pass);
        CHECK(nonorthogonality_check(q).status == Status::Pass);
    }
    // the defect by hand at q = 2
    const Rational q(2);
    const ParamPoint pt(q, Rational(0));
    const XsPoly l1 = lucas_trace(1, pt), l2 = lucas_trace(2, pt), l3 = lucas_trace(3, pt), l4 = lucas_trace(4, pt);
    CHECK(l1 * l3 - l4 + l2 * s * power(q, 3) + s * s * (q * q * (1 - q)) == XsPoly());
    CHECK(nonorthogonality_check(Rational(1)).status == Status::Skipped);
}
