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

#include "qcheb/poly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qcheb/qkernel.hpp"

namespace qcheb {

XsPoly::XsPoly(const Rational& constant) {
    if (sgn(constant) != 0) terms_.emplace(Monomial{0, 0}, constant);
}

XsPoly XsPoly::monomial(const Rational& c, int dx, int ds) {
    if (dx < 0 || ds < 0) throw std::invalid_argument("XsPoly: negative exponent");
    XsPoly p;
    if (sgn(c) != 0) p.terms_.emplace(Monomial{dx, ds}, c);
    return p;
}

Rational XsPoly::coeff(int dx, int ds) const {
    const auto it = terms_.find(Monomial{dx, ds});
    return it == terms_.end() ? Rational(0) : it->second;
}

int XsPoly::degree_x() const { return terms_.empty() ? -1 : terms_.begin()->first.dx; }

int XsPoly::min_degree_s() const {
    if (terms_.empty()) return 0;
    int m = terms_.begin()->first.ds;
    for (const auto& [mono, c] : terms_) m = std::min(m, mono.ds);
    return m;
}

bool XsPoly::x_free() const { return terms_.empty() || terms_.begin()->first.dx == 0; }

void XsPoly::add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

XsPoly& XsPoly::operator+=(const XsPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

XsPoly& XsPoly::operator-=(const XsPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

XsPoly operator*(const XsPoly& a, const XsPoly& b) {
    XsPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(Monomial{ma.dx + mb.dx, ma.ds + mb.ds}, ca * cb);
    return out;
}

XsPoly& XsPoly::operator*=(const XsPoly& other) { return *this = *this * other; }

XsPoly& XsPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

XsPoly operator-(XsPoly a) { return a *= Rational(-1); }

XsPoly x_pow(int k) { return XsPoly::monomial(Rational(1), k, 0); }
XsPoly s_pow(int k) { return XsPoly::monomial(Rational(1), 0, k); }

XsPoly power(const XsPoly& p, int k) {
    if (k < 0) throw std::invalid_argument("XsPoly power: negative exponent");
    XsPoly out(Rational(1));
    for (int i = 0; i < k; ++i) out *= p;
    return out;
}

XsPoly dilate(const XsPoly& p, const Rational& q, int mx, int ms) {
    if (mx == 0 && ms == 0) return p;
    XsPoly out;
    for (const auto& [m, c] : p.terms()) out.add_term(m, c * power(q, static_cast<long>(mx) * m.dx + static_cast<long>(ms) * m.ds));
    return out;
}

XsPoly scale_vars(const XsPoly& p, const Rational& ax, const Rational& as) {
    XsPoly out;
    for (const auto& [m, c] : p.terms()) out.add_term(m, c * power(ax, m.dx) * power(as, m.ds));
    return out;
}

XsPoly q_deriv(const XsPoly& p, const Rational& q) {
    XsPoly out;
    for (const auto& [m, c] : p.terms())
        if (m.dx >= 1) out.add_term(Monomial{m.dx - 1, m.ds}, c * q_int(m.dx, q));
    return out;
}

XsPoly classical_deriv(const XsPoly& p) {
    XsPoly out;
    for (const auto& [m, c] : p.terms())
        if (m.dx >= 1) out.add_term(Monomial{m.dx - 1, m.ds}, c * m.dx);
    return out;
}

XsPoly substitute_s(const XsPoly& p, const Rational& s_val) {
    XsPoly out;
    for (const auto& [m, c] : p.terms()) out.add_term(Monomial{m.dx, 0}, c * power(s_val, m.ds));
    return out;
}

Rational evaluate(const XsPoly& p, const Rational& x, const Rational& s) {
    Rational sum(0);
    for (const auto& [m, c] : p.terms()) sum += c * power(x, m.dx) * power(s, m.ds);
    return sum;
}

double evaluate(const XsPoly& p, double x, double s) {
    double sum = 0.0;
    for (const auto& [m, c] : p.terms()) sum += c.get_d() * std::pow(x, m.dx) * std::pow(s, m.ds);
    return sum;
}

std::string to_string(const XsPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        const bool has_var = m.dx > 0 || m.ds > 0;
        bool need_star = false;
        if (!has_var || mag != 1) {
            os << to_string(mag);
            need_star = true;
        }
        if (m.dx > 0) {
            if (need_star) os << '*';
            os << 'x';
            if (m.dx > 1) os << '^' << m.dx;
            need_star = true;
        }
        if (m.ds > 0) {
            if (need_star) os << '*';
            os << 's';
            if (m.ds > 1) os << '^' << m.ds;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const XsPoly& p) { return os << to_string(p); }

SLaurent::SLaurent(XsPoly p) : numer_(std::move(p)) {}

SLaurent::SLaurent(XsPoly numer, int s_power) : numer_(std::move(numer)), s_power_(s_power) { normalize(); }

const XsPoly& SLaurent::to_poly() const {
    if (s_power_ != 0) throw std::logic_error("SLaurent: value has an s-power denominator");
    return numer_;
}

void SLaurent::normalize() {
    if (numer_.is_zero()) {
        s_power_ = 0;
        return;
    }
    if (s_power_ < 0) {
        numer_ *= s_pow(-s_power_);
        s_power_ = 0;
        return;
    }
    const int common = std::min(s_power_, numer_.min_degree_s());
    if (common == 0) return;
    XsPoly reduced;
    for (const auto& [m, c] : numer_.terms()) reduced.add_term(Monomial{m.dx, m.ds - common}, c);
    numer_ = std::move(reduced);
    s_power_ -= common;
}

SLaurent& SLaurent::operator+=(const SLaurent& other) {
    const int k = std::max(s_power_, other.s_power_);
    numer_ = numer_ * s_pow(k - s_power_) + other.numer_ * s_pow(k - other.s_power_);
    s_power_ = k;
    normalize();
    return *this;
}

SLaurent& SLaurent::operator-=(const SLaurent& other) { return *this += -other; }

SLaurent& SLaurent::operator*=(const SLaurent& other) {
    numer_ *= other.numer_;
    s_power_ += other.s_power_;
    normalize();
    return *this;
}

SLaurent& SLaurent::operator*=(const Rational& c) {
    numer_ *= c;
    normalize();
    return *this;
}

SLaurent inverse_s_monomial(const Rational& c, int k) { return SLaurent(XsPoly(c), k); }

SLaurent dilate(const SLaurent& p, const Rational& q, int mx, int ms) {
    // numer(q^mx x, q^ms s) / (q^ms s)^k
    XsPoly n = dilate(p.numerator(), q, mx, ms) * power(q, -static_cast<long>(ms) * p.s_power());
    return SLaurent(std::move(n), p.s_power());
}

std::string to_string(const SLaurent& p) {
    if (p.s_power() == 0) return to_string(p.numerator());
    std::string out = "(" + to_string(p.numerator()) + ")/s";
    if (p.s_power() > 1) out += "^" + std::to_string(p.s_power());
    return out;
}

std::ostream& operator<<(std::ostream& os, const SLaurent& p) { return os << to_string(p); }

}  // namespace qcheb
