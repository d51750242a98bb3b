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

#include "qcheb/qkernel.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcheb {

Rational q_int(int n, const Rational& q) {
    Rational sum(0);
    Rational term(1);
    for (int j = 0; j < n; ++j) {
        sum += term;
        term *= q;
    }
    return sum;
}

Rational q_binom(int n, int k, const Rational& q) {
    if (n < 0 || k < 0 || k > n) return Rational(0);
    k = std::min(k, n - k);
    if (q == 1) return Rational(binomial(n, k));
    if (q == -1) {
        // (1 - q^j) vanishes for even j; fall back to the Pascal rule.
        std::vector<Rational> row(static_cast<std::size_t>(k) + 1, Rational(0));
        row[0] = 1;
        for (int m = 1; m <= n; ++m)
            for (int j = std::min(m, k); j >= 1; --j) row[j] = power(q, j) * row[j] + row[j - 1];
        return row[k];
    }
    // prod_{j=1..k} (1 - q^(n-k+j)) / (1 - q^j)
    Rational num(1);
    Rational den(1);
    Rational top = power(q, n - k + 1);
    Rational bottom = q;
    for (int j = 1; j <= k; ++j) {
        num *= 1 - top;
        den *= 1 - bottom;
        top *= q;
        bottom *= q;
    }
    return num / den;
}

Rational q_poch(const Rational& a, const Rational& q, int n) {
    if (n >= 0) {
        Rational result(1);
        Rational factor = a;
        for (int j = 0; j < n; ++j) {
            result *= 1 - factor;
            factor *= q;
        }
        return result;
    }
    const Rational shifted = power(q, n) * a;
    return inverse(q_poch(shifted, q, -n), "negative-order q-Pochhammer symbol");
}

CatalanTable::CatalanTable(Rational q) : q_(std::move(q)) { memo_.emplace_back(1); }

Rational CatalanTable::at(int n) {
    if (n < 0) throw std::invalid_argument("q_catalan: negative index");
    std::lock_guard lock(mutex_);
    while (static_cast<int>(memo_.size()) <= n) {
        const int m = static_cast<int>(memo_.size());
        Rational sum(0);
        Rational qk(1);
        for (int k = 0; k < m; ++k) {
            sum += qk * memo_[k] * memo_[m - 1 - k];
            qk *= q_;
        }
        memo_.push_back(sum);
    }
    return memo_[n];
}

Rational q_catalan(int n, const Rational& q) {
    CatalanTable table(q);
    return table.at(n);
}

ParamPoint::ParamPoint(Rational q, Rational b, bool allow_classical) : q_(std::move(q)), b_(std::move(b)) {
    if (q_ == 0) throw std::invalid_argument("q must be nonzero");
    if (q_ == 1 && !allow_classical) throw std::invalid_argument("q = 1 requires an explicit classical-limit request");
}

ParamPoint ParamPoint::guarded(Rational q, Rational b, int lo_level, int hi_level, bool allow_classical) {
    ParamPoint p(std::move(q), std::move(b), allow_classical);
    p.require_pole_free(lo_level, hi_level);
    return p;
}

Rational ParamPoint::level(int j) const { return power(q_, j) * b_; }

ParamPoint ParamPoint::shifted(int j) const {
    ParamPoint p = *this;
    p.b_ = level(j);
    return p;
}

bool ParamPoint::pole_free(int lo, int hi) const {
    Rational qj = power(q_, lo);
    for (int j = lo; j <= hi; ++j) {
        if (qj * b_ == 1 || qj == -1) return false;
        qj *= q_;
    }
    return true;
}

void ParamPoint::require_pole_free(int lo, int hi) const {
    if (!pole_free(lo, hi))
        throw PoleError("parameter point q=" + to_string(q_) + ", b=" + to_string(b_) + " has a pole on levels [" +
                        std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

}  // namespace qcheb
