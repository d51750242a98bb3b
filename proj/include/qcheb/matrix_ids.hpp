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

#include "qcheb/families.hpp"
#include "qcheb/matrix2.hpp"
#include "qcheb/report.hpp"

namespace qcheb {

/// C(x, q^j b, q^j s, q) = [[0, 1], [q^j s / ((1 - q^j b)(1 - q^(j+1) b)), x]].
Mat2<XsPoly> fib_transfer(int level, const ParamPoint& pt);

/// C(x, q^(n-1) b, q^(n-1) s, q) ... C(x, b, s, q), multiplied out left to right.
Mat2<XsPoly> fib_matrix_product(int n, const ParamPoint& pt);

/// Inverse product for negative exponents: C(level -n)^-1 ... C(level -1)^-1.
Mat2<SLaurent> fib_matrix_product_negative(int n, const ParamPoint& pt);

/// V_k(x, s, q) = [[q^k x, q^k (x^2 + q s)], [1, x]].
Mat2<XsPoly> cheb_transfer(int k, const Rational& q);

/// V_0 V_1 ... V_(n-1).
Mat2<XsPoly> cheb_matrix_product(int n, const Rational& q);

/// Determinants of the tridiagonal matrices with diagonal (1 + q^k) x resp.
/// x, (1 + q) x, ..., super-diagonal q^k s and sub-diagonal -1.
XsPoly tridiag_u(int n, const Rational& q);
XsPoly tridiag_t(int n, const Rational& q);

/// Cassini left side F_(n-1)(qb,qs) F_(n+1) - F_n F_n(qb,qs) and its closed value.
SLaurent cassini_lhs(int n, const ParamPoint& pt, const Generators& gen = Generators::shared());
SLaurent cassini_rhs(int n, const ParamPoint& pt);

/// d(n,k,b,s) from the Fibonacci values and from its product formula.
SLaurent cassini_euler_lhs(int n, int k, const ParamPoint& pt, const Generators& gen = Generators::shared());
SLaurent cassini_euler_rhs(int n, int k, const ParamPoint& pt, const Generators& gen = Generators::shared());

IdentityReport fib_matrix_check(int n_hi, const ParamPoint& pt, const Generators& gen = Generators::shared());
IdentityReport fib_matrix_negative_check(int n_hi, const ParamPoint& pt,
                                         const Generators& gen = Generators::shared());
IdentityReport trace_matrix_check(int n_hi, const ParamPoint& pt, const Generators& gen = Generators::shared());
IdentityReport cassini_check(int n_lo, int n_hi, const ParamPoint& pt, const Generators& gen = Generators::shared());
IdentityReport cassini_euler_check(int n_hi, int k_hi, const ParamPoint& pt,
                                   const Generators& gen = Generators::shared());
IdentityReport cheb_matrix_check(int n_hi, const Rational& q, const Generators& gen = Generators::shared());
IdentityReport cheb_det_check(int n_hi, const Rational& q, const Generators& gen = Generators::shared());
/// The square-root form of the determinant identity at q = r^2.
IdentityReport cheb_det_sqrt_check(int n_hi, const Rational& r, const Generators& gen = Generators::shared());
IdentityReport tridiag_check(int n_hi, const Rational& q, const Generators& gen = Generators::shared());

}  // namespace qcheb
