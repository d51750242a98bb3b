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

#include <map>
#include <ostream>
#include <string>

#include "qcheb/rational.hpp"

namespace qcheb {

/// Exponent pair of a monomial x^dx s^ds.
struct Monomial {
    int dx = 0;
    int ds = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical order: descending deg_x, then ascending deg_s.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return a.dx != b.dx ? a.dx > b.dx : a.ds < b.ds;
    }
};

/// Sparse polynomial in the formal variables x and s with rational
/// coefficients. Zero coefficients are never stored, so the zero polynomial is
/// the empty map and equality is structural.
class XsPoly {
  public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    XsPoly() = default;
    explicit XsPoly(const Rational& constant);

    static XsPoly monomial(const Rational& c, int dx, int ds);
    static XsPoly x() { return monomial(Rational(1), 1, 0); }
    static XsPoly s() { return monomial(Rational(1), 0, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(int dx, int ds) const;
    /// -1 for the zero polynomial.
    int degree_x() const;
    /// Smallest s-exponent present; 0 for the zero polynomial.
    int min_degree_s() const;
    /// True when no term involves x.
    bool x_free() const;

    /// Adds c x^dx s^ds in place, dropping the term if it cancels.
    void add_term(const Monomial& m, const Rational& c);

    XsPoly& operator+=(const XsPoly& other);
    XsPoly& operator-=(const XsPoly& other);
    XsPoly& operator*=(const XsPoly& other);
    XsPoly& operator*=(const Rational& c);

    friend XsPoly operator+(XsPoly a, const XsPoly& b) { return a += b; }
    friend XsPoly operator-(XsPoly a, const XsPoly& b) { return a -= b; }
    friend XsPoly operator*(const XsPoly& a, const XsPoly& b);
    friend XsPoly operator*(XsPoly a, const Rational& c) { return a *= c; }
    friend XsPoly operator*(const Rational& c, XsPoly a) { return a *= c; }
    friend XsPoly operator-(XsPoly a);

    friend bool operator==(const XsPoly& a, const XsPoly& b) { return a.terms_ == b.terms_; }

  private:
    TermMap terms_;
};

XsPoly x_pow(int k);
XsPoly s_pow(int k);
XsPoly power(const XsPoly& p, int k);

/// Substitutes x -> q^mx x and s -> q^ms s (exponents may be negative).
XsPoly dilate(const XsPoly& p, const Rational& q, int mx, int ms);

/// Substitutes x -> ax x and s -> as s.
XsPoly scale_vars(const XsPoly& p, const Rational& ax, const Rational& as);

/// Jackson q-derivative in x, applied termwise as x^k -> [k] x^(k-1).
XsPoly q_deriv(const XsPoly& p, const Rational& q);

/// Ordinary derivative in x.
XsPoly classical_deriv(const XsPoly& p);

/// Replaces s by a rational value, leaving a polynomial in x alone.
XsPoly substitute_s(const XsPoly& p, const Rational& s_val);

Rational evaluate(const XsPoly& p, const Rational& x, const Rational& s);
double evaluate(const XsPoly& p, double x, double s);

/// Human-readable form, e.g. "3x^2 + 2/5s".
std::string to_string(const XsPoly& p);
std::ostream& operator<<(std::ostream& os, const XsPoly& p);

/// A Laurent element numer / s^k. Negative-index family members have pure
/// s-power denominators, which the polynomial ring cannot represent.
///
/// Canonical form: k >= 0 and, when k > 0, s does not divide numer.
class SLaurent {
  public:
    SLaurent() = default;
    SLaurent(XsPoly p);  // NOLINT(google-explicit-constructor)
    SLaurent(XsPoly numer, int s_power);

    const XsPoly& numerator() const { return numer_; }
    int s_power() const { return s_power_; }
    bool is_polynomial() const { return s_power_ == 0; }
    bool is_zero() const { return numer_.is_zero(); }
    /// Throws std::logic_error when an s-power denominator remains.
    const XsPoly& to_poly() const;

    SLaurent& operator+=(const SLaurent& other);
    SLaurent& operator-=(const SLaurent& other);
    SLaurent& operator*=(const SLaurent& other);
    SLaurent& operator*=(const Rational& c);

    friend SLaurent operator+(SLaurent a, const SLaurent& b) { return a += b; }
    friend SLaurent operator-(SLaurent a, const SLaurent& b) { return a -= b; }
    friend SLaurent operator*(SLaurent a, const SLaurent& b) { return a *= b; }
    friend SLaurent operator*(SLaurent a, const Rational& c) { return a *= c; }
    friend SLaurent operator*(const Rational& c, SLaurent a) { return a *= c; }
    friend SLaurent operator-(SLaurent a) { return a *= Rational(-1); }

    friend bool operator==(const SLaurent& a, const SLaurent& b) {
        return a.s_power_ == b.s_power_ && a.numer_ == b.numer_;
    }

  private:
    void normalize();

    XsPoly numer_;
    int s_power_ = 0;
};

/// c / s^k.
SLaurent inverse_s_monomial(const Rational& c, int k);

SLaurent dilate(const SLaurent& p, const Rational& q, int mx, int ms);

std::string to_string(const SLaurent& p);
std::ostream& operator<<(std::ostream& os, const SLaurent& p);

}  // namespace qcheb
