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

#pragma once

#include <vector>

#include "qcheb/families.hpp"
#include "qcheb/report.hpp"

namespace qcheb {

/// X = x eta, Y = q s / ((1 - qb)(1 - q^2 b)) eta^2, B = multiplication by b,
/// where eta maps f(x, b, s) to f(x, qb, qs).
enum class Letter { X, Y, B };

using OpWord = std::vector<Letter>;

/// lambda(w) = #X + 2 #Y; B does not move the level.
int word_length(const OpWord& w);

/// Test monomial x^i s^j b^m for the commutation relations.
struct TestMonomial {
    int i = 0;
    int j = 0;
    int m = 0;
};

/// Applies w to f, rightmost letter first. A letter's scalar is taken at the
/// level reached by the letters to its left, and f itself at level lambda(w).
XsPoly apply_word(const OpWord& w, const ParamPoint& pt, const TestMonomial& f = {});

/// All words with k letters Y and n - k letters X, applied to 1 and summed.
XsPoly word_sum_ck(int n, int k, const ParamPoint& pt);

/// [n over k] q^(k^2) / ((q^(n+1) b;q)_k (qb;q)_k) s^k x^(n-k).
XsPoly ck_closed(int n, int k, const ParamPoint& pt);

/// c(n,k,b) = [n over k] (q^(k+1) b;q)_k / (q^(n+1) b;q)_k at b = q^level b.
Rational binomial_coeff(int n, int k, const ParamPoint& pt, int level = 0);

/// The product form of the same coefficient.
Rational binomial_coeff_product(int n, int k, const ParamPoint& pt);

/// (X + Y)^n 1 by a dynamic program over (power, level).
XsPoly binomial_power(int n, const ParamPoint& pt);

/// All Fibonacci words of length n - 1, built by prepending (X F_(n-1) + Y F_(n-2))
/// or by appending (F_(n-1) X + F_(n-2) Y).
std::vector<OpWord> fib_words(int n, bool append);
XsPoly fib_word_sum(int n, const ParamPoint& pt, bool append = false);

/// Right sides of the Binet-like sums for T_n and U_n.
XsPoly binet_t(int n, const Rational& q);
XsPoly binet_u(int n, const Rational& q);

/// Even and odd parts of (x + A)(qx + A)...(q^(n-1) x + A) 1, with A^2 acting as
/// (x^2 + q s) eta^2. The odd part is returned divided by A.
struct BinetParts {
    XsPoly even;
    XsPoly odd;
};
BinetParts binet_operator_parts(int n, const Rational& q);

IdentityReport commutation_check(const ParamPoint& pt, const std::vector<TestMonomial>& monomials);
std::vector<TestMonomial> default_test_monomials();

IdentityReport word_ck_check(int n_hi, const ParamPoint& pt);
IdentityReport binomial_theorem_check(int n_hi, const ParamPoint& pt);
IdentityReport fib_words_check(int n_hi, const ParamPoint& pt, const Generators& gen = Generators::shared());
IdentityReport fib_words_split_check(int n_hi, const ParamPoint& pt);
IdentityReport binet_check(int n_hi, const Rational& q, const Generators& gen = Generators::shared());
IdentityReport q_binomial_product_check(int n_hi, const Rational& q);

}  // namespace qcheb
