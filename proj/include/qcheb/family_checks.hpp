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

/// Recurrence output against the explicit coefficient formula, n = 0..n_hi.
/// b-free families ignore pt.b() and report no b.
IdentityReport dual_route_check(FamilyId id, int n_hi, const ParamPoint& pt,
                                const Generators& gen = Generators::shared());

/// Fixed-parameter recurrence against the parameter-dilated one. Defined for
/// FIB_CARLITZ, FIB_QB and LUCAS_QB.
IdentityReport dilated_route_check(FamilyId id, int n_hi, const ParamPoint& pt,
                                   const Generators& gen = Generators::shared());

/// Backward-run recurrence against the closed negative-index forms for
/// n = -n_hi..-1. Defined for FIB_QB, LUCAS_TRACE, GEN_LUCAS, CHEB_U, CHEB_T.
IdentityReport negative_index_check(FamilyId id, int n_hi, const ParamPoint& pt,
                                    const Generators& gen = Generators::shared());

/// T_n(qx, q^2 s) = q^n T_n and the same for U.
IdentityReport homogeneity_check(int n_hi, const Rational& q, const Generators& gen = Generators::shared());

/// Cross-family aliases that only involve q: U and T against the b = -1
/// families, U against Al-Salam-Ismail, the b = -1 and b = 0 specializations.
IdentityReport alias_check(int n_hi, const Rational& q, const Generators& gen = Generators::shared());

/// F_(n+1)(x,b,s,q) (qb;q)_n = u_n(x; -qb, -qs).
IdentityReport alsalam_fib_check(int n_hi, const ParamPoint& pt, const Generators& gen = Generators::shared());

/// U_0..U_3, T_0..T_4 and l_0..l_4 (b = 0) against explicit coefficient
/// expressions in q.
IdentityReport first_terms_check(const Rational& q, const Generators& gen = Generators::shared());

/// q = 1, b = 0 reductions to the classical Fibonacci, Lucas and Chebyshev
/// polynomials, one report per identity.
std::vector<IdentityReport> classical_checks(int n_hi, const Generators& gen = Generators::shared());

/// |F_n(3,1) - Binet| and |L_n(3,1) - Binet| below tol, alpha and beta in
/// extended precision.
IdentityReport binet_float_check(int n_hi, long double tol = 1e-6L, const Generators& gen = Generators::shared());

/// T_n^2 - (x^2 - 1) U_(n-1)^2 = 1 at q = 1, s = -1.
IdentityReport pell_check(int n_hi, const Generators& gen = Generators::shared());

}  // namespace qcheb
