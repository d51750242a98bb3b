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

#include <mutex>
#include <vector>

#include "qcheb/rational.hpp"

namespace qcheb {

/// q-integer [n] = 1 + q + ... + q^(n-1). Summed directly so q = 1 gives n.
Rational q_int(int n, const Rational& q);

/// Gaussian binomial coefficient [n over k] at q. Zero when k < 0 or k > n
/// (and for n < 0).
Rational q_binom(int n, int k, const Rational& q);

/// q-Pochhammer symbol (a;q)_n for any integer n. For n < 0 it is
/// 1/(q^n a;q)_{-n}; a vanishing factor there raises PoleError.
Rational q_poch(const Rational& a, const Rational& q, int n);

/// Carlitz q-Catalan numbers C_n(q) from the convolution
/// C_n = sum_k q^k C_k C_{n-1-k}, memoized for one fixed q.
class CatalanTable {
  public:
    explicit CatalanTable(Rational q);

    const Rational& q() const { return q_; }
    Rational at(int n);

  private:
    Rational q_;
    std::vector<Rational> memo_;
    std::mutex mutex_;
};

Rational q_catalan(int n, const Rational& q);

/// A concrete substitution for the parameters q and b; x and s stay formal.
///
/// A "level" j refers to the dilated parameter q^j b. Denominators that appear
/// in the families are products of (1 - q^j b) and (1 + q^j), so a point is
/// usable for an index range exactly when those factors are nonzero for every
/// level the range touches.
class ParamPoint {
  public:
    /// Rejects q = 0, and q = 1 unless `allow_classical` is set.
    ParamPoint(Rational q, Rational b, bool allow_classical = false);

    /// Same as the constructor but also rejects points with a pole on any
    /// level in [lo_level, hi_level].
    static ParamPoint guarded(Rational q, Rational b, int lo_level, int hi_level, bool allow_classical = false);

    const Rational& q() const { return q_; }
    const Rational& b() const { return b_; }
    bool classical() const { return q_ == 1; }

    /// q^j b.
    Rational level(int j) const;

    /// The point with b replaced by q^j b.
    ParamPoint shifted(int j) const;

    /// (1 - q^j b) != 0 and (1 + q^j) != 0 for all lo <= j <= hi.
    bool pole_free(int lo, int hi) const;
    void require_pole_free(int lo, int hi) const;

    friend bool operator==(const ParamPoint& a, const ParamPoint& b) { return a.q_ == b.q_ && a.b_ == b.b_; }

  private:
    Rational q_;
    Rational b_;
};

}  // namespace qcheb
