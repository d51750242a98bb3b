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

#include "qcheb/operators.hpp"

#include <map>
#include <stdexcept>

namespace qcheb {

namespace {

const XsPoly kX = XsPoly::x();
const XsPoly kS = XsPoly::s();

// Y at level L multiplies by q (q^L s) / ((1 - q^(L+1) b)(1 - q^(L+2) b));
// this is the scalar in front of s.
Rational y_scalar(const ParamPoint& pt, int level) {
    const Rational u = pt.level(level + 1);
    return power(pt.q(), level + 1) * inverse((1 - u) * (1 - pt.q() * u), "(1 - q^(L+1) b)(1 - q^(L+2) b)");
}

void words_with(int x_left, int y_left, OpWord& cur, std::vector<OpWord>& out) {
    if (x_left == 0 && y_left == 0) {
        out.push_back(cur);
        return;
    }
    if (x_left > 0) {
        cur.push_back(Letter::X);
        words_with(x_left - 1, y_left, cur, out);
        cur.pop_back();
    }
    if (y_left > 0) {
        cur.push_back(Letter::Y);
        words_with(x_left, y_left - 1, cur, out);
        cur.pop_back();
    }
}

long binom2(long n) { return n * (n - 1) / 2; }

}  // namespace

int word_length(const OpWord& w) {
    int len = 0;
    for (Letter l : w) len += l == Letter::X ? 1 : l == Letter::Y ? 2 : 0;
    return len;
}

namespace {

// Per-level scalars for a point, so enumerations do not redo the inversions.
class LevelTable {
  public:
    LevelTable(const ParamPoint& pt, int max_level) : q_(pt.q()) {
        for (int lvl = 0; lvl <= max_level; ++lvl) {
            y_.push_back(y_scalar(pt, lvl));
            b_.push_back(pt.level(lvl));
        }
    }

    XsPoly apply(const OpWord& w, const TestMonomial& f) const {
        Rational c(1);
        int dx = 0;
        int ds = 0;
        int level = 0;
        for (Letter l : w) {
            switch (l) {
                case Letter::X:
                    ++dx;
                    ++level;
                    break;
                case Letter::Y:
                    c *= y_.at(level);
                    ++ds;
                    level += 2;
                    break;
                case Letter::B:
                    c *= b_.at(level);
                    break;
            }
        }
        // f(x, q^L b, q^L s) for f = x^i s^j b^m
        c *= power(q_, static_cast<long>(level) * f.j) * power(b_.at(level), f.m);
        return XsPoly::monomial(c, dx + f.i, ds + f.j);
    }

  private:
    Rational q_;
    std::vector<Rational> y_;
    std::vector<Rational> b_;
};

}  // namespace

XsPoly apply_word(const OpWord& w, const ParamPoint& pt, const TestMonomial& f) {
    return LevelTable(pt, word_length(w)).apply(w, f);
}

XsPoly word_sum_ck(int n, int k, const ParamPoint& pt) {
    if (k < 0 || k > n) return XsPoly();
    std::vector<OpWord> words;
    OpWord cur;
    words_with(n - k, k, cur, words);
    const LevelTable table(pt, n + k);
    XsPoly sum;
    for (const OpWord& w : words) sum += table.apply(w, {});
    return sum;
}

XsPoly ck_closed(int n, int k, const ParamPoint& pt) {
    if (k < 0 || k > n) return XsPoly();
    const Rational& q = pt.q();
    const Rational den = q_poch(power(q, n + 1) * pt.b(), q, k) * q_poch(q * pt.b(), q, k);
    return XsPoly::monomial(
        q_binom(n, k, q) * power(q, static_cast<long>(k) * k) * inverse(den, "(q^(n+1) b;q)_k (qb;q)_k"), n - k, k);
}

Rational binomial_coeff(int n, int k, const ParamPoint& pt, int level) {
    if (k < 0 || k > n) return Rational(0);
    const Rational& q = pt.q();
    const Rational b = pt.level(level);
    return q_binom(n, k, q) * q_poch(power(q, k + 1) * b, q, k) *
           inverse(q_poch(power(q, n + 1) * b, q, k), "(q^(n+1) b;q)_k");
}

Rational binomial_coeff_product(int n, int k, const ParamPoint& pt) {
    const Rational& q = pt.q();
    const Rational& b = pt.b();
    const int m = n - k;
    const Rational num = q_poch(power(q, k + 1) * b, q, m) * q_poch(power(q, k + 1), q, m);
    const Rational den = q_poch(power(q, 2 * k + 1) * b, q, m) * q_poch(q, q, m);
    return num * inverse(den, "(q^(2k+1) b;q)_(n-k) (q;q)_(n-k)");
}

XsPoly binomial_power(int n, const ParamPoint& pt) {
    if (n < 0) throw std::invalid_argument("binomial_power: n must be non-negative");
    // g[L] = ((X+Y)^m 1)(x, q^L b, q^L s)
    const int levels = 2 * n + 1;
    std::vector<XsPoly> g(static_cast<std::size_t>(levels) + 2, XsPoly(Rational(1)));
    for (int m = 1; m <= n; ++m) {
        std::vector<XsPoly> next(g.size());
        for (int lvl = 0; lvl + 2 < static_cast<int>(g.size()) && lvl <= 2 * (n - m); ++lvl)
            next[lvl] = kX * g[lvl + 1] + (kS * g[lvl + 2]) * y_scalar(pt, lvl);
        g = std::move(next);
    }
    return g[0];
}

std::vector<OpWord> fib_words(int n, bool append) {
    if (n < 0) throw std::invalid_argument("fib_words: n must be non-negative");
    std::vector<std::vector<OpWord>> table{{}, {OpWord{}}};
    for (int m = 2; m <= n; ++m) {
        std::vector<OpWord> next;
        auto extend = [&](const std::vector<OpWord>& src, Letter l) {
            for (OpWord w : src) {
                if (append)
                    w.push_back(l);
                else
                    w.insert(w.begin(), l);
                next.push_back(std::move(w));
            }
        };
        extend(table[m - 1], Letter::X);
        extend(table[m - 2], Letter::Y);
        table.push_back(std::move(next));
    }
    return table[n];
}

XsPoly fib_word_sum(int n, const ParamPoint& pt, bool append) {
    const LevelTable table(pt, n);
    XsPoly sum;
    for (const OpWord& w : fib_words(n, append)) sum += table.apply(w, {});
    return sum;
}

XsPoly binet_t(int n, const Rational& q) {
    if (n < 0) throw std::invalid_argument("binet_t: n must be non-negative");
    XsPoly out;
    XsPoly prod(Rational(1));
    for (int k = 0; 2 * k <= n; ++k) {
        if (k > 0) prod *= kX * kX + kS * power(q, 2 * k - 1);
        out += x_pow(n - 2 * k) * prod * (power(q, binom2(n - 2 * k)) * q_binom(n, 2 * k, q));
    }
    return out;
}

XsPoly binet_u(int n, const Rational& q) {
    if (n < 0) throw std::invalid_argument("binet_u: n must be non-negative");
    XsPoly out;
    XsPoly prod(Rational(1));
    for (int k = 0; 2 * k <= n; ++k) {
        if (k > 0) prod *= kX * kX + kS * power(q, 2 * k - 1);
        out += x_pow(n - 2 * k) * prod * (power(q, binom2(n - 2 * k)) * q_binom(n + 1, 2 * k + 1, q));
    }
    return out;
}

BinetParts binet_operator_parts(int n, const Rational& q) {
    if (n < 0) throw std::invalid_argument("binet_operator_parts: n must be non-negative");
    // coefficients of A^j in the product; x commutes with A
    std::vector<XsPoly> coef{XsPoly(Rational(1))};
    for (int i = 0; i < n; ++i) {
        std::vector<XsPoly> next(coef.size() + 1);
        for (std::size_t j = 0; j < coef.size(); ++j) {
            next[j] += coef[j] * kX * power(q, i);
            next[j + 1] += coef[j];
        }
        coef = std::move(next);
    }
    // A^(2m) 1 = (x^2 + q s)(x^2 + q^3 s)...(x^2 + q^(2m-1) s)
    BinetParts parts;
    XsPoly a_even(Rational(1));
    for (std::size_t j = 0; j < coef.size(); j += 2) {
        if (j > 0) a_even *= kX * kX + kS * power(q, static_cast<long>(j) - 1);
        parts.even += coef[j] * a_even;
        if (j + 1 < coef.size()) parts.odd += coef[j + 1] * a_even;
    }
    return parts;
}

std::vector<TestMonomial> default_test_monomials() {
    std::vector<TestMonomial> out;
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j)
            for (int m = 0; m <= 2; ++m) out.push_back({i, j, m});
    return out;
}

IdentityReport commutation_check(const ParamPoint& pt, const std::vector<TestMonomial>& monomials) {
    const int count = static_cast<int>(monomials.size());
    return run_guarded("operator_commutation", pt.q(), pt.b(), 0, count - 1, [&] {
        ReportBuilder rb("operator_commutation", pt, 0, count - 1);
        const Rational& q = pt.q();
        const Rational xy = q * (1 - q * pt.b()) * inverse(1 - power(q, 3) * pt.b(), "1 - q^3 b");
        using L = Letter;
        for (int idx = 0; idx < count && !rb.failed(); ++idx) {
            const TestMonomial& f = monomials[idx];
            // n indexes the test monomial; the note names the relation on failure
            if (!rb.expect_equal(idx, apply_word({L::X, L::Y}, pt, f), apply_word({L::Y, L::X}, pt, f) * xy))
                rb.set_note("XY relation");
            else if (!rb.expect_equal(idx, apply_word({L::X, L::B}, pt, f), apply_word({L::B, L::X}, pt, f) * q))
                rb.set_note("Xb relation");
            else if (!rb.expect_equal(idx, apply_word({L::Y, L::B}, pt, f), apply_word({L::B, L::Y}, pt, f) * (q * q)))
                rb.set_note("Yb relation");
        }
        return rb.finish();
    });
}

IdentityReport word_ck_check(int n_hi, const ParamPoint& pt) {
    return run_guarded("operator_word_ck", pt.q(), pt.b(), 0, n_hi, [&] {
        ReportBuilder rb("operator_word_ck", pt, 0, n_hi);
        for (int n = 0; n <= n_hi && !rb.failed(); ++n)
            for (int k = 0; k <= n && !rb.failed(); ++k) {
                if (!rb.expect_equal(n, word_sum_ck(n, k, pt), ck_closed(n, k, pt)))
                    rb.set_note("k = " + std::to_string(k));
            }
        return rb.finish();
    });
}

IdentityReport binomial_theorem_check(int n_hi, const ParamPoint& pt) {
    return run_guarded("operator_binomial", pt.q(), pt.b(), 0, n_hi, [&] {
        ReportBuilder rb("operator_binomial", pt, 0, n_hi);
        const Rational& q = pt.q();
        for (int n = 0; n <= n_hi && !rb.failed(); ++n) {
            XsPoly via_c;
            XsPoly via_closed;
            for (int k = 0; k <= n; ++k) {
                OpWord yx(static_cast<std::size_t>(k), Letter::Y);
                yx.insert(yx.end(), static_cast<std::size_t>(n - k), Letter::X);
                const Rational c = binomial_coeff(n, k, pt);
                via_c += apply_word(yx, pt) * c;
                via_closed += ck_closed(n, k, pt);
                rb.expect_equal(n, c, binomial_coeff_product(n, k, pt));
                if (k >= 1 && n >= 1) {
                    // c(n,k,b) = c(n-1,k-1,q^2 b) + q^k (1-qb)/(1-q^(2k+1) b) c(n-1,k,qb)
                    const Rational w = power(q, k) * (1 - q * pt.b()) *
                                       inverse(1 - power(q, 2 * k + 1) * pt.b(), "1 - q^(2k+1) b");
                    rb.expect_equal(n, c, binomial_coeff(n - 1, k - 1, pt, 2) + w * binomial_coeff(n - 1, k, pt, 1));
                }
            }
            const XsPoly lhs = binomial_power(n, pt);
            rb.expect_equal(n, lhs, via_c);
            rb.expect_equal(n, lhs, via_closed);
        }
        return rb.finish();
    });
}

IdentityReport fib_words_check(int n_hi, const ParamPoint& pt, const Generators& gen) {
    return run_guarded("fib_words", pt.q(), pt.b(), 0, n_hi, [&] {
        ReportBuilder rb("fib_words", pt, 0, n_hi);
        for (int n = 0; n <= n_hi && !rb.failed(); ++n) rb.expect_equal(n, fib_word_sum(n, pt), gen.fib_qb(n, pt));
        return rb.finish();
    });
}

IdentityReport fib_words_split_check(int n_hi, const ParamPoint& pt) {
    return run_guarded("fib_words_split", pt.q(), pt.b(), 0, n_hi, [&] {
        ReportBuilder rb("fib_words_split", pt, 0, n_hi);
        for (int n = 0; n <= n_hi && !rb.failed(); ++n)
            rb.expect_equal(n, fib_word_sum(n, pt, false), fib_word_sum(n, pt, true));
        return rb.finish();
    });
}

IdentityReport binet_check(int n_hi, const Rational& q, const Generators& gen) {
    return run_guarded("binet", q, std::nullopt, 0, n_hi, [&] {
        ReportBuilder rb("binet", q, std::nullopt, 0, n_hi);
        for (int n = 0; n <= n_hi && !rb.failed(); ++n) {
            rb.expect_equal(n, binet_t(n, q), gen.cheb_t(n, q));
            rb.expect_equal(n, binet_u(n, q), gen.cheb_u(n, q));
            const BinetParts parts = binet_operator_parts(n, q);
            rb.expect_equal(n, parts.even, binet_t(n, q));
            rb.expect_equal(n, parts.odd, n == 0 ? XsPoly() : binet_u(n - 1, q));
        }
        return rb.finish();
    });
}

IdentityReport q_binomial_product_check(int n_hi, const Rational& q) {
    return run_guarded("q_binomial_product", q, std::nullopt, 0, n_hi, [&] {
        ReportBuilder rb("q_binomial_product", q, std::nullopt, 0, n_hi);
        XsPoly prod(Rational(1));
        for (int n = 0; n <= n_hi && !rb.failed(); ++n) {
            if (n > 0) prod *= kX * power(q, n - 1) + kS;
            XsPoly sum;
            for (int k = 0; k <= n; ++k)
                sum += XsPoly::monomial(power(q, binom2(k)) * q_binom(n, k, q), k, n - k);
            rb.expect_equal(n, prod, sum);
        }
        return rb.finish();
    });
}

}  // namespace qcheb
