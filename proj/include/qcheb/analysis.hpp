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

#include <optional>
#include <string>
#include <vector>

#include "qcheb/families.hpp"
#include "qcheb/report.hpp"
#include "qcheb/series.hpp"

namespace qcheb {

using RSeries = TruncSeries<Rational>;
using PSeries = TruncSeries<XsPoly>;

/// q and a nonzero substitution for s; series live in x modulo x^order.
struct SeriesContext {
    Rational q;
    Rational s_val;
    int order = 0;
};

/// Truncation orders used by the verification suites.
struct AnalysisConfig {
    int pearson_order = 24;
    int rodrigues_extra = 10;  // Rodrigues order is 2n + this
    int genfun_order = 16;
};

/// h(y) = sum_k (q;q^2)_k / (q^2;q^2)_k y^k.
RSeries h_series(const Rational& q, int order);

/// [a over k]_(q^2) for half-integer a = a2/2, i.e. with q^(2a) = q^a2.
Rational q2_binom_half(int a2, int k, const Rational& q);

/// Right sides of the two Rodrigues-type formulae, as series in x with s = s_val.
/// The U formula carries the factor q^(n(n+1)) (see README).
RSeries rodrigues_t(int n, const SeriesContext& ctx);
RSeries rodrigues_u(int n, const SeriesContext& ctx);

/// Generating functions sum_n U_n z^n and sum_n T_n z^n from their k-sums.
PSeries genfun_u(int order, const Rational& q);
PSeries genfun_t(int order, const Rational& q);

/// Exponents e_k with U_n = sum_k q^(e_k) x^k T_(n-k), found by search.
std::optional<std::vector<int>> solve_u_from_t_exponents(int n, const Rational& q);

IdentityReport deriv_t_check(int n_hi, const Rational& q, const Generators& gen = Generators::shared());
IdentityReport deriv_u_check(int n_hi, const Rational& q, const Generators& gen = Generators::shared());
/// The four second-order q-difference equations.
IdentityReport qode_check(int n_hi, const Rational& q, const Generators& gen = Generators::shared());
/// h(x)(1 - x) = (1 - qx) h(q^2 x), and the two bracket forms of h and 1/h.
IdentityReport h_series_check(const Rational& q, int order);
IdentityReport pearson_check(const SeriesContext& ctx);
IdentityReport rodrigues_check(int n_hi, const Rational& q, const Rational& s_val, int extra,
                               const Generators& gen = Generators::shared());
IdentityReport genfun_check(int order, const Rational& q, const Generators& gen = Generators::shared());

/// Identity registry: polynomial identities among the families, each checked
/// as lhs == rhs for n = n_lo .. n_hi.
const std::vector<std::string>& registry_ids();
bool registry_uses_b(const std::string& id);
IdentityReport registry_check(const std::string& id, int n_hi, const ParamPoint& pt,
                              const Generators& gen = Generators::shared());

}  // namespace qcheb
