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

#include <stdexcept>
#include <vector>

#include "qcheb/poly.hpp"
#include "qcheb/qkernel.hpp"

namespace qcheb {

namespace detail {

inline Rational unit_inverse(const Rational& c) { return inverse(c, "series constant term"); }

inline XsPoly unit_inverse(const XsPoly& c) {
    if (!(c.size() == 1 && c.coeff(0, 0) != 0))
        throw std::domain_error("series reciprocal: constant term is not an invertible scalar");
    return XsPoly(inverse(c.coeff(0, 0), "series constant term"));
}

}  // namespace detail

/// Truncated power series sum_{k < order} c_k t^k in one auxiliary variable t.
/// Every operation returns a result that is exact modulo t^order.
template <class C>
class TruncSeries {
  public:
    explicit TruncSeries(int order) : coeffs_(static_cast<std::size_t>(check(order))) {}

    TruncSeries(std::vector<C> coeffs, int order) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(static_cast<std::size_t>(check(order)));
    }

    int order() const { return static_cast<int>(coeffs_.size()); }

    const C& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    C& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

    const std::vector<C>& coeffs() const { return coeffs_; }

    /// Drops everything at or above t^new_order.
    TruncSeries truncated(int new_order) const {
        if (new_order > order()) throw std::invalid_argument("TruncSeries: cannot raise truncation order");
        return TruncSeries(std::vector<C>(coeffs_.begin(), coeffs_.begin() + new_order), new_order);
    }

    TruncSeries& operator+=(const TruncSeries& o) {
        same_order(o);
        for (int k = 0; k < order(); ++k) coeffs_[k] += o.coeffs_[k];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        same_order(o);
        for (int k = 0; k < order(); ++k) coeffs_[k] -= o.coeffs_[k];
        return *this;
    }
    TruncSeries& operator*=(const Rational& c) {
        for (auto& v : coeffs_) v *= c;
        return *this;
    }

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(TruncSeries a, const Rational& c) { return a *= c; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return series_mul(a, b); }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

  private:
    static int check(int order) {
        if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
        return order;
    }
    void same_order(const TruncSeries& o) const {
        if (o.order() != order()) throw std::invalid_argument("TruncSeries: order mismatch");
    }

    std::vector<C> coeffs_;
};

template <class C>
TruncSeries<C> series_mul(const TruncSeries<C>& a, const TruncSeries<C>& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series_mul: order mismatch");
    const int n = a.order();
    TruncSeries<C> out(n);
    for (int i = 0; i < n; ++i) {
        if (a[i] == C{}) continue;
        for (int j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

/// 1/f modulo t^order; the constant term must be invertible.
template <class C>
TruncSeries<C> series_recip(const TruncSeries<C>& f) {
    const int n = f.order();
    TruncSeries<C> g(n);
    if (n == 0) return g;
    const C inv0 = detail::unit_inverse(f[0]);
    g[0] = inv0;
    for (int k = 1; k < n; ++k) {
        C acc{};
        for (int j = 1; j <= k; ++j) acc += f[j] * g[k - j];
        g[k] = -(acc * inv0);
    }
    return g;
}

/// sum_k c^k t^k, the expansion of 1/(1 - c t).
template <class C>
TruncSeries<C> series_geom(const C& c, int order) {
    TruncSeries<C> out(order);
    if (order == 0) return out;
    out[0] = C(Rational(1));
    for (int k = 1; k < order; ++k) out[k] = out[k - 1] * c;
    return out;
}

/// The polynomial sum_k p_k t^k as a series of the given order.
template <class C>
TruncSeries<C> series_from(std::vector<C> coeffs, int order) {
    return TruncSeries<C>(std::move(coeffs), order);
}

/// f(c t^m) modulo t^new_order.
template <class C>
TruncSeries<C> series_substitute_power(const TruncSeries<C>& f, const Rational& c, int m, int new_order) {
    if (m < 1) throw std::invalid_argument("series_substitute_power: exponent must be positive");
    if ((new_order + m - 1) / m > f.order())
        throw std::invalid_argument("series_substitute_power: source order too small for requested order");
    TruncSeries<C> out(new_order);
    Rational ck(1);
    for (int k = 0; k < f.order() && k * m < new_order; ++k) {
        out[k * m] = f[k] * ck;
        ck *= c;
    }
    return out;
}

/// Termwise q-derivative t^k -> [k] t^(k-1); the result has order one less.
template <class C>
TruncSeries<C> series_q_deriv(const TruncSeries<C>& f, const Rational& q) {
    const int n = f.order();
    TruncSeries<C> out(n > 0 ? n - 1 : 0);
    for (int k = 1; k < n; ++k) out[k - 1] = f[k] * q_int(k, q);
    return out;
}

}  // namespace qcheb
