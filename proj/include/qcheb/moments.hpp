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

#include <functional>
#include <string>
#include <vector>

#include "qcheb/families.hpp"
#include "qcheb/report.hpp"

namespace qcheb {

/// Monic three-term recurrence p_0 = 1, p_1 = x, p_k = x p_(k-1) + t(k) p_(k-2).
/// t(k) is a scalar times s.
///
/// Fibonacci-type families are shifted by one: p_k = F_(k+1).
struct RecurrenceSpec {
    std::string name;
    std::function<XsPoly(int k)> t;
};

RecurrenceSpec gen_fib_spec(const Rational& q);      // p_k = F_(k+1)(x,-1,s,q)
RecurrenceSpec lucas_star_spec(const Rational& q);   // p_0 = 1, p_k = L_k(x,-1,s,q)
RecurrenceSpec carlitz_spec(const Rational& q);      // p_k = F_(k+1)(x,s,q)
RecurrenceSpec classical_spec();                     // p_k = F_(k+1)(x,s)

/// The k-th basis element built from the spec's own recurrence.
XsPoly basis_element(const RecurrenceSpec& spec, int k);

/// Lambda(x^m) for m = 0 .. count-1, where Lambda(p_k) = [k = 0].
std::vector<XsPoly> moments_from_recurrence(const RecurrenceSpec& spec, int count);

/// Lambda applied to an arbitrary polynomial through a moment list.
XsPoly apply_functional(const XsPoly& p, const std::vector<XsPoly>& moments);

/// Coefficients of x^n in a monic basis {b_0, b_1, ...} (b_k of x-degree k),
/// by eliminating leading terms. b_0 may be non-monic; its coefficient is
/// reported for b_0 normalized to 1.
std::vector<XsPoly> expand_in_basis(const XsPoly& p, const std::vector<XsPoly>& basis);

/// Coefficient of F_(n+1-2k)(x,-1,s,q) in x^n, k = 0 .. n/2.
std::vector<XsPoly> expand_x_fib(int n, const Rational& q);
/// Coefficient of L*_(n-2k)(x,s,q) in x^n, k = 0 .. n/2.
std::vector<XsPoly> expand_x_lucas(int n, const Rational& q);

/// Lambda_F(x^(2n)) for the F_(n+1)(x,-1,s,q) basis. The closed form carries a
/// factor q^n; `moments_fib_without_qn` is the same expression without it.
XsPoly moments_fib_closed(int n, const Rational& q);
XsPoly moments_fib_without_qn(int n, const Rational& q);
/// Same value with the denominator written as (1+q)(1+q^(n+1)) prod_(j=2..n) (1+q^j)^2.
XsPoly moments_fib_product_form(int n, const Rational& q);

/// Lambda_L(x^(2n)) = [2n over n] (-qs)^n / (-q;q)_n^2.
XsPoly moments_lucas_closed(int n, const Rational& q);

/// (-qs)^n C_n(q).
XsPoly moments_carlitz_closed(int n, const Rational& q);

/// (-s)^n C(2n,n)/(n+1).
XsPoly moments_classical_closed(int n);

IdentityReport moments_fib_check(int n_hi, const Rational& q);
IdentityReport moments_fib_forms_check(int n_hi, const Rational& q);
IdentityReport moments_lucas_check(int n_hi, const Rational& q);
IdentityReport moments_carlitz_check(int n_hi, const Rational& q);
IdentityReport moments_classical_check(int n_hi, const Generators& gen = Generators::shared());
IdentityReport expansion_fib_check(int n_hi, const Rational& q, const Generators& gen = Generators::shared());
IdentityReport expansion_lucas_check(int n_hi, const Rational& q, const Generators& gen = Generators::shared());
IdentityReport orthogonality_check(int sum_hi, const Rational& q, const Generators& gen = Generators::shared());
/// l_1 l_3 = l_4 - q^3 s l_2 - q^2 (1-q) s^2 at b = 0, and Lambda(l_1 l_3) != 0.
/// Skipped at q = 1.
IdentityReport nonorthogonality_check(const Rational& q, const Generators& gen = Generators::shared());

}  // namespace qcheb
