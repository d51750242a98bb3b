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

#include "qcheb/families.hpp"

#include <stdexcept>

namespace qcheb {

namespace {

const XsPoly kX = XsPoly::x();
const XsPoly kS = XsPoly::s();

void perturb(XsPoly& p) {
    if (p.is_zero()) {
        p = XsPoly(Rational(1));
        return;
    }
    p.add_term(p.terms().begin()->first, Rational(1));
}

void maybe_perturb(std::vector<XsPoly>& v, int k, int fault_index) {
    if (k == fault_index) perturb(v[k]);
}

// 1 / ((1 - u)(1 - qu)) with u = q^j b, i.e. the denominator pair of the
// index-dependent recurrence coefficient.
Rational pair_inverse(const Rational& q, const Rational& b, int j) {
    const Rational u = power(q, j) * b;
    return inverse((1 - u) * (1 - q * u), "(1 - q^j b)(1 - q^(j+1) b)");
}

// F_m = x F_{m-1} + q^(m-2) s / ((1 - q^(m-2) b)(1 - q^(m-1) b)) F_{m-2}
std::vector<XsPoly> build_fib_qb(int n, const Rational& q, const Rational& b, const XsPoly&, int fault) {
    std::vector<XsPoly> v;
    v.reserve(static_cast<std::size_t>(n) + 1);
    v.emplace_back();
    maybe_perturb(v, 0, fault);
    if (n >= 1) {
        v.emplace_back(Rational(1));
        maybe_perturb(v, 1, fault);
    }
    for (int m = 2; m <= n; ++m) {
        const Rational c = power(q, m - 2) * pair_inverse(q, b, m - 2);
        v.push_back(kX * v[m - 1] + (kS * v[m - 2]) * c);
        maybe_perturb(v, m, fault);
    }
    return v;
}

// L_0 = 1 - b, L_1 = x, L_m = x L_{m-1} + q^(m-1) s / ((1 - q^(m-2) b)(1 - q^(m-1) b)) L_{m-2}
std::vector<XsPoly> build_lucas_qb(int n, const Rational& q, const Rational& b, const XsPoly&, int fault) {
    std::vector<XsPoly> v;
    v.reserve(static_cast<std::size_t>(n) + 1);
    v.emplace_back(Rational(1 - b));
    maybe_perturb(v, 0, fault);
    if (n >= 1) {
        v.push_back(kX);
        maybe_perturb(v, 1, fault);
    }
    for (int m = 2; m <= n; ++m) {
        const Rational c = power(q, m - 1) * pair_inverse(q, b, m - 2);
        v.push_back(kX * v[m - 1] + (kS * v[m - 2]) * c);
        maybe_perturb(v, m, fault);
    }
    return v;
}

// U_0 = 1, U_1 = (1+q) x, U_m = (1 + q^m) x U_{m-1} + q^(m-1) s U_{m-2}
std::vector<XsPoly> build_cheb_u(int n, const Rational& q, const Rational&, const XsPoly&, int fault) {
    std::vector<XsPoly> v;
    v.emplace_back(Rational(1));
    maybe_perturb(v, 0, fault);
    for (int m = 1; m <= n; ++m) {
        XsPoly next = kX * v[m - 1] * Rational(1 + power(q, m));
        if (m >= 2) next += (kS * v[m - 2]) * power(q, m - 1);
        v.push_back(std::move(next));
        maybe_perturb(v, m, fault);
    }
    return v;
}

// T_0 = 1, T_1 = x, T_m = (1 + q^(m-1)) x T_{m-1} + q^(m-1) s T_{m-2}
std::vector<XsPoly> build_cheb_t(int n, const Rational& q, const Rational&, const XsPoly&, int fault) {
    std::vector<XsPoly> v;
    v.emplace_back(Rational(1));
    maybe_perturb(v, 0, fault);
    if (n >= 1) {
        v.push_back(kX);
        maybe_perturb(v, 1, fault);
    }
    for (int m = 2; m <= n; ++m) {
        v.push_back(kX * v[m - 1] * Rational(1 + power(q, m - 1)) + (kS * v[m - 2]) * power(q, m - 1));
        maybe_perturb(v, m, fault);
    }
    return v;
}

// u_0 = 1, u_1 = (1+a) x, u_m = x (1 + q^(m-1) a) u_{m-1} - q^(m-2) beta u_{m-2}
std::vector<XsPoly> build_alsalam_ismail(int n, const Rational& q, const Rational& a, const XsPoly& beta, int fault) {
    std::vector<XsPoly> v;
    v.emplace_back(Rational(1));
    maybe_perturb(v, 0, fault);
    if (n >= 1) {
        v.push_back(kX * Rational(1 + a));
        maybe_perturb(v, 1, fault);
    }
    for (int m = 2; m <= n; ++m) {
        v.push_back(kX * v[m - 1] * Rational(1 + power(q, m - 1) * a) - (beta * v[m - 2]) * power(q, m - 2));
        maybe_perturb(v, m, fault);
    }
    return v;
}

// Carlitz: the (q,b) recurrence at b = 0, F_m = x F_{m-1} + q^(m-2) s F_{m-2}.
std::vector<XsPoly> build_fib_carlitz(int n, const Rational& q, const Rational&, const XsPoly& extra, int fault) {
    return build_fib_qb(n, q, Rational(0), extra, fault);
}

void require_nonnegative(int n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + ": index must be non-negative");
}

}  // namespace

std::string_view family_tag(FamilyId id) {
    switch (id) {
        case FamilyId::FibCarlitz: return "FIB_CARLITZ";
        case FamilyId::FibQb: return "FIB_QB";
        case FamilyId::LucasTrace: return "LUCAS_TRACE";
        case FamilyId::LucasQb: return "LUCAS_QB";
        case FamilyId::GenFib: return "GEN_FIB";
        case FamilyId::GenLucas: return "GEN_LUCAS";
        case FamilyId::ChebU: return "CHEB_U";
        case FamilyId::ChebT: return "CHEB_T";
        case FamilyId::AlSalamIsmail: return "ALSALAM_ISMAIL";
    }
    return "?";
}

std::optional<FamilyId> parse_family(std::string_view name) {
    for (FamilyId id : kAllFamilies)
        if (family_tag(id) == name) return id;
    if (name == "T") return FamilyId::ChebT;
    if (name == "U") return FamilyId::ChebU;
    if (name == "F" || name == "CARLITZ") return FamilyId::FibCarlitz;
    if (name == "F_QB") return FamilyId::FibQb;
    if (name == "L_QB" || name == "L") return FamilyId::LucasQb;
    if (name == "l") return FamilyId::LucasTrace;
    return std::nullopt;
}

bool family_uses_b(FamilyId id) {
    return id == FamilyId::FibQb || id == FamilyId::LucasTrace || id == FamilyId::LucasQb;
}

const Generators& Generators::shared() {
    static const Generators instance;
    return instance;
}

std::vector<XsPoly> Generators::sequence(FamilyId id, int n, const Rational& q, const Rational& b,
                                         const XsPoly& extra, Builder build) const {
    std::string key = std::string(family_tag(id)) + "|" + to_string(q) + "|" + to_string(b);
    if (!extra.is_zero()) key += "|" + to_string(extra);
    {
        std::lock_guard lock(mutex_);
        const auto it = memo_.find(key);
        if (it != memo_.end() && static_cast<int>(it->second.size()) > n)
            return std::vector<XsPoly>(it->second.begin(), it->second.begin() + n + 1);
    }
    const int fault_index = fault_ && fault_->family == id ? fault_->index : -1;
    std::vector<XsPoly> values = build(n, q, b, extra, fault_index);
    std::lock_guard lock(mutex_);
    auto& slot = memo_[key];
    if (slot.size() < values.size()) slot = values;
    return values;
}

XsPoly Generators::fib_carlitz(int n, const Rational& q) const {
    require_nonnegative(n, "fib_carlitz");
    return sequence(FamilyId::FibCarlitz, n, q, Rational(0), XsPoly(), build_fib_carlitz).back();
}

XsPoly Generators::fib_qb(int n, const ParamPoint& pt) const {
    require_nonnegative(n, "fib_qb");
    return sequence(FamilyId::FibQb, n, pt.q(), pt.b(), XsPoly(), build_fib_qb).back();
}

XsPoly Generators::lucas_qb(int n, const ParamPoint& pt) const {
    require_nonnegative(n, "lucas_qb");
    return sequence(FamilyId::LucasQb, n, pt.q(), pt.b(), XsPoly(), build_lucas_qb).back();
}

XsPoly Generators::gen_fib(int n, const Rational& q) const {
    require_nonnegative(n, "gen_fib");
    return sequence(FamilyId::GenFib, n, q, Rational(-1), XsPoly(), build_fib_qb).back();
}

XsPoly Generators::gen_lucas(int n, const Rational& q) const {
    require_nonnegative(n, "gen_lucas");
    return sequence(FamilyId::GenLucas, n, q, Rational(-1), XsPoly(), build_lucas_qb).back();
}

XsPoly Generators::cheb_u(int n, const Rational& q) const {
    require_nonnegative(n, "cheb_u");
    return sequence(FamilyId::ChebU, n, q, Rational(0), XsPoly(), build_cheb_u).back();
}

XsPoly Generators::cheb_t(int n, const Rational& q) const {
    require_nonnegative(n, "cheb_t");
    return sequence(FamilyId::ChebT, n, q, Rational(0), XsPoly(), build_cheb_t).back();
}

XsPoly Generators::alsalam_ismail(int n, const Rational& a, const XsPoly& beta, const Rational& q) const {
    require_nonnegative(n, "alsalam_ismail");
    // An all-zero beta would collide with the "no extra" key; it is harmless
    // because the key also carries a in the b slot.
    return sequence(FamilyId::AlSalamIsmail, n, q, a, beta, build_alsalam_ismail).back();
}

SLaurent Generators::fib_qb_any(int n, const ParamPoint& pt) const {
    if (n >= 0) return fib_qb(n, pt);
    const Rational& q = pt.q();
    // F_{m-2} = (F_m - x F_{m-1}) (1 - q^(m-2) b)(1 - q^(m-1) b) / (q^(m-2) s)
    SLaurent hi = fib_qb(1, pt);
    SLaurent lo = fib_qb(0, pt);
    for (int m = 1; m - 2 >= n; --m) {
        const Rational u = pt.level(m - 2);
        const Rational scale = (1 - u) * (1 - q * u) * power(q, -(m - 2));
        SLaurent next = (hi - SLaurent(kX) * lo) * inverse_s_monomial(scale, 1);
        hi = std::move(lo);
        lo = std::move(next);
    }
    return lo;
}

XsPoly Generators::lucas_trace(int n, const ParamPoint& pt) const {
    require_nonnegative(n, "lucas_trace");
    return lucas_trace_any(n, pt).to_poly();
}

SLaurent Generators::lucas_trace_any(int n, const ParamPoint& pt) const {
    // l_n = F_{n+1}(x,b,s) + s/((1-b)(1-qb)) F_{n-1}(x,qb,qs)
    const Rational& q = pt.q();
    const SLaurent shifted = dilate(fib_qb_any(n - 1, pt.shifted(1)), q, 0, 1);
    const Rational c = inverse((1 - pt.b()) * (1 - q * pt.b()), "(1 - b)(1 - qb)");
    SLaurent out = fib_qb_any(n + 1, pt) + SLaurent(kS * c) * shifted;
    if (n >= 0 && fault_ && fault_->family == FamilyId::LucasTrace && fault_->index == n) {
        XsPoly p = out.to_poly();
        perturb(p);
        return p;
    }
    return out;
}

SLaurent Generators::gen_lucas_any(int n, const Rational& q) const {
    if (n >= 0) return gen_lucas(n, q);
    // L_{m-2} = (L_m - x L_{m-1}) (1 + q^(m-2))(1 + q^(m-1)) / (q^(m-1) s)
    SLaurent hi = gen_lucas(1, q);
    SLaurent lo = gen_lucas(0, q);
    for (int m = 1; m - 2 >= n; --m) {
        const Rational scale = (1 + power(q, m - 2)) * (1 + power(q, m - 1)) * power(q, -(m - 1));
        SLaurent next = (hi - SLaurent(kX) * lo) * inverse_s_monomial(scale, 1);
        hi = std::move(lo);
        lo = std::move(next);
    }
    return lo;
}

SLaurent Generators::cheb_u_any(int n, const Rational& q) const {
    if (n >= 0) return cheb_u(n, q);
    // U_{m-2} = (U_m - (1 + q^m) x U_{m-1}) / (q^(m-1) s)
    SLaurent hi = cheb_u(1, q);
    SLaurent lo = cheb_u(0, q);
    for (int m = 1; m - 2 >= n; --m) {
        SLaurent next = (hi - SLaurent(kX * Rational(1 + power(q, m))) * lo) *
                        inverse_s_monomial(power(q, -(m - 1)), 1);
        hi = std::move(lo);
        lo = std::move(next);
    }
    return lo;
}

SLaurent Generators::cheb_t_any(int n, const Rational& q) const {
    if (n >= 0) return cheb_t(n, q);
    // T_{m-2} = (T_m - (1 + q^(m-1)) x T_{m-1}) / (q^(m-1) s)
    SLaurent hi = cheb_t(1, q);
    SLaurent lo = cheb_t(0, q);
    for (int m = 1; m - 2 >= n; --m) {
        SLaurent next = (hi - SLaurent(kX * Rational(1 + power(q, m - 1))) * lo) *
                        inverse_s_monomial(power(q, -(m - 1)), 1);
        hi = std::move(lo);
        lo = std::move(next);
    }
    return lo;
}

XsPoly Generators::value(FamilyId id, int n, const ParamPoint& pt) const {
    const Rational& q = pt.q();
    switch (id) {
        case FamilyId::FibCarlitz: return fib_carlitz(n, q);
        case FamilyId::FibQb: return fib_qb(n, pt);
        case FamilyId::LucasTrace: return lucas_trace(n, pt);
        case FamilyId::LucasQb: return lucas_qb(n, pt);
        case FamilyId::GenFib: return gen_fib(n, q);
        case FamilyId::GenLucas: return gen_lucas(n, q);
        case FamilyId::ChebU: return cheb_u(n, q);
        case FamilyId::ChebT: return cheb_t(n, q);
        case FamilyId::AlSalamIsmail: return alsalam_ismail(n, q, kS * Rational(-q), q);
    }
    throw std::invalid_argument("unknown family");
}

XsPoly fib_carlitz(int n, const Rational& q) { return Generators::shared().fib_carlitz(n, q); }
XsPoly fib_qb(int n, const ParamPoint& pt) { return Generators::shared().fib_qb(n, pt); }
XsPoly lucas_trace(int n, const ParamPoint& pt) { return Generators::shared().lucas_trace(n, pt); }
XsPoly lucas_qb(int n, const ParamPoint& pt) { return Generators::shared().lucas_qb(n, pt); }
XsPoly cheb_u(int n, const Rational& q) { return Generators::shared().cheb_u(n, q); }
XsPoly cheb_t(int n, const Rational& q) { return Generators::shared().cheb_t(n, q); }
XsPoly alsalam_ismail(int n, const Rational& a, const XsPoly& beta, const Rational& q) {
    return Generators::shared().alsalam_ismail(n, a, beta, q);
}
SLaurent gen_lucas_negative(int n, const Rational& q) {
    if (n <= 0) throw std::invalid_argument("gen_lucas_negative: n must be positive");
    return Generators::shared().gen_lucas_any(-n, q);
}
XsPoly hypergeom_gen_fib(int n, const Rational& q) { return closed::hypergeom_gen_fib(n, q); }
XsPoly hypergeom_gen_lucas(int n, const Rational& q) { return closed::hypergeom_gen_lucas(n, q); }

namespace closed {

XsPoly fib_carlitz(int n, const Rational& q) {
    require_nonnegative(n, "closed::fib_carlitz");
    XsPoly out;
    for (int k = 0; 2 * k <= n - 1; ++k)
        out.add_term(Monomial{n - 1 - 2 * k, k}, power(q, static_cast<long>(k) * k) * q_binom(n - 1 - k, k, q));
    return out;
}

XsPoly fib_qb(int n, const ParamPoint& pt) {
    require_nonnegative(n, "closed::fib_qb");
    const Rational& q = pt.q();
    const Rational& b = pt.b();
    XsPoly out;
    for (int k = 0; 2 * k <= n - 1; ++k) {
        const Rational den = q_poch(q * b, q, k) * q_poch(power(q, n - k) * b, q, k);
        out.add_term(Monomial{n - 1 - 2 * k, k},
                     power(q, static_cast<long>(k) * k) * q_binom(n - k - 1, k, q) * inverse(den, "(qb;q)_k (q^(n-k)b;q)_k"));
    }
    return out;
}

SLaurent fib_qb_negative(int n, const ParamPoint& pt) {
    if (n <= 0) throw std::invalid_argument("closed::fib_qb_negative: n must be positive");
    const Rational& q = pt.q();
    const Rational& b = pt.b();
    const long tri = static_cast<long>(n) * (n + 1) / 2;
    const Rational scale = (n % 2 == 1 ? 1 : -1) * power(q, tri) * q_poch(b * power(q, -(n - 1)), q, n) *
                           q_poch(b * power(q, -n), q, n);
    const XsPoly inner = dilate(closed::fib_qb(n, pt.shifted(-n)), q, 0, -n);
    return SLaurent(inner * scale, n);
}

XsPoly lucas_trace(int n, const ParamPoint& pt) {
    require_nonnegative(n, "closed::lucas_trace");
    if (n == 0) return XsPoly(Rational(2));
    const Rational& q = pt.q();
    const Rational& b = pt.b();
    XsPoly out;
    for (int k = 0; 2 * k <= n; ++k) {
        const Rational den = q_poch(b, q, k) * q_poch(power(q, n - k + 1) * b, q, k);
        const Rational c = power(q, static_cast<long>(k) * k - k) * q_int(n, q) / q_int(n - k, q) *
                           q_binom(n - k, k, q) * inverse(den, "(b;q)_k (q^(n-k+1)b;q)_k");
        out.add_term(Monomial{n - 2 * k, k}, c);
    }
    return out;
}

SLaurent lucas_trace_negative(int n, const ParamPoint& pt) {
    if (n <= 0) throw std::invalid_argument("closed::lucas_trace_negative: n must be positive");
    const Rational& q = pt.q();
    const Rational& b = pt.b();
    const long tri = static_cast<long>(n) * (n + 1) / 2;
    const Rational scale = (n % 2 == 0 ? 1 : -1) * power(q, tri) * q_poch(b * power(q, -n), q, n) *
                           q_poch(b * power(q, -(n - 1)), q, n);
    const XsPoly inner = dilate(closed::lucas_trace(n, pt.shifted(-n)), q, 0, -n);
    return SLaurent(inner * scale, n);
}

XsPoly lucas_qb(int n, const ParamPoint& pt) {
    require_nonnegative(n, "closed::lucas_qb");
    const Rational& q = pt.q();
    const Rational& b = pt.b();
    if (n == 0) return XsPoly(Rational(1 - b));
    XsPoly out;
    for (int k = 0; 2 * k <= n; ++k) {
        const Rational num = q_binom(n - k, k, q) - power(q, n - k) * b * q_binom(n - 1 - k, k - 1, q);
        const Rational den = q_poch(q * b, q, k) * q_poch(power(q, n - k) * b, q, k);
        out.add_term(Monomial{n - 2 * k, k}, power(q, static_cast<long>(k) * k) * num * inverse(den, "(qb;q)_k (q^(n-k)b;q)_k"));
    }
    return out;
}

XsPoly gen_fib(int n, const Rational& q) {
    require_nonnegative(n, "closed::gen_fib");
    const int m = n - 1;
    XsPoly out;
    for (int k = 0; 2 * k <= m; ++k) {
        const Rational den = q_poch(-q, q, k) * q_poch(-power(q, m + 1 - k), q, k);
        out.add_term(Monomial{m - 2 * k, k},
                     power(q, static_cast<long>(k) * k) * q_binom(m - k, k, q) * inverse(den, "(-q;q)_k (-q^(n-k);q)_k"));
    }
    return out;
}

XsPoly gen_lucas(int n, const Rational& q) {
    require_nonnegative(n, "closed::gen_lucas");
    if (n == 0) return XsPoly(Rational(2));
    XsPoly out;
    for (int k = 0; 2 * k <= n; ++k) {
        const Rational den = q_poch(-q, q, k) * q_poch(-power(q, n - k), q, k);
        const Rational c = power(q, static_cast<long>(k) * k) * q_int(n, q) / q_int(n - k, q) * q_binom(n - k, k, q) *
                           inverse(den, "(-q;q)_k (-q^(n-k);q)_k");
        out.add_term(Monomial{n - 2 * k, k}, c);
    }
    return out;
}

SLaurent gen_lucas_negative(int n, const Rational& q) {
    if (n <= 0) throw std::invalid_argument("closed::gen_lucas_negative: n must be positive");
    const long tri = static_cast<long>(n) * (n + 1) / 2;
    const Rational scale =
        (n % 2 == 0 ? 1 : -1) * q_poch(-q, q, n) * q_poch(Rational(-1), q, n) * power(q, -tri);
    return SLaurent(gen_lucas(n, q) * scale, n);
}

XsPoly cheb_u(int n, const Rational& q) {
    require_nonnegative(n, "closed::cheb_u");
    XsPoly out;
    for (int k = 0; 2 * k <= n; ++k) {
        Rational prod(1);
        for (int j = k + 1; j <= n - k; ++j) prod *= 1 + power(q, j);
        out.add_term(Monomial{n - 2 * k, k}, power(q, static_cast<long>(k) * k) * q_binom(n - k, k, q) * prod);
    }
    return out;
}

SLaurent cheb_u_negative(int n, const Rational& q) {
    if (n >= 0) throw std::invalid_argument("closed::cheb_u_negative: n must be negative");
    if (n == -1) return SLaurent();
    const int m = -n - 2;  // U_{-m-2} = (-1)^m (q/s)^(m+1) U_m
    return SLaurent(cheb_u(m, q) * Rational((m % 2 == 0 ? 1 : -1) * power(q, m + 1)), m + 1);
}

XsPoly cheb_t(int n, const Rational& q) {
    require_nonnegative(n, "closed::cheb_t");
    if (n == 0) return XsPoly(Rational(1));
    const Rational lead = q_poch(-q, q, n - 1);
    XsPoly out;
    for (int k = 0; 2 * k <= n; ++k) {
        const Rational den = q_poch(-q, q, k) * q_poch(-power(q, n - k), q, k);
        const Rational c = power(q, static_cast<long>(k) * k) * q_int(n, q) / q_int(n - k, q) * q_binom(n - k, k, q) *
                           lead * inverse(den, "(-q;q)_k (-q^(n-k);q)_k");
        out.add_term(Monomial{n - 2 * k, k}, c);
    }
    return out;
}

SLaurent cheb_t_negative(int n, const Rational& q) {
    if (n <= 0) throw std::invalid_argument("closed::cheb_t_negative: n must be positive");
    return SLaurent(cheb_t(n, q) * Rational(n % 2 == 0 ? 1 : -1), n);
}

XsPoly alsalam_ismail(int n, const Rational& a, const XsPoly& beta, const Rational& q) {
    require_nonnegative(n, "closed::alsalam_ismail");
    XsPoly out;
    const XsPoly minus_beta = -beta;
    for (int k = 0; 2 * k <= n; ++k) {
        const Rational c = power(q, static_cast<long>(k) * k - k) * q_binom(n - k, k, q) *
                           q_poch(-power(q, k) * a, q, n - 2 * k);
        out += x_pow(n - 2 * k) * power(minus_beta, k) * c;
    }
    return out;
}

XsPoly hypergeom_gen_fib(int n, const Rational& q) {
    require_nonnegative(n, "hypergeom_gen_fib");
    const Rational q2 = q * q;
    XsPoly out;
    for (int k = 0; 2 * k <= n; ++k) {
        const Rational num = q_poch(power(q, -n), q2, k) * q_poch(power(q, 1 - n), q2, k);
        const Rational den = q_poch(power(q, -2 * n), q2, k) * q_poch(q2, q2, k);
        const Rational c = num * inverse(den, "(q^-2n;q^2)_k (q^2;q^2)_k") * (k % 2 == 0 ? 1 : -1);
        out.add_term(Monomial{n - 2 * k, k}, c);
    }
    return out;
}

XsPoly hypergeom_gen_lucas(int n, const Rational& q) {
    require_nonnegative(n, "hypergeom_gen_lucas");
    const Rational q2 = q * q;
    XsPoly out;
    for (int k = 0; 2 * k <= n; ++k) {
        const Rational num = q_poch(power(q, -n), q2, k) * q_poch(power(q, 1 - n), q2, k);
        const Rational den = q_poch(power(q, 2 - 2 * n), q2, k) * q_poch(q2, q2, k);
        const Rational c = num * inverse(den, "(q^(2-2n);q^2)_k (q^2;q^2)_k") * power(-q2, k);
        out.add_term(Monomial{n - 2 * k, k}, c);
    }
    return out;
}

}  // namespace closed

namespace dilated {

XsPoly fib_carlitz(int n, const Rational& q) {
    require_nonnegative(n, "dilated::fib_carlitz");
    // F_m(x,s) = x F_{m-1}(x,qs) + q s F_{m-2}(x,q^2 s)
    std::vector<XsPoly> v{XsPoly(), XsPoly(Rational(1))};
    for (int m = 2; m <= n; ++m)
        v.push_back(kX * dilate(v[m - 1], q, 0, 1) + (kS * dilate(v[m - 2], q, 0, 2)) * q);
    return v[n];
}

namespace {

// table[m][lvl] = P_m(x, q^lvl b, s) for the recurrence
// P_m(b,s) = x P_{m-1}(qb,qs) + q s/((1-qb)(1-q^2 b)) P_{m-2}(q^2 b,q^2 s).
template <class Init>
XsPoly run_dilated(int n, const ParamPoint& pt, Init init) {
    const Rational& q = pt.q();
    const int levels = 2 * n + 2;
    std::vector<std::vector<XsPoly>> table(static_cast<std::size_t>(n) + 1,
                                           std::vector<XsPoly>(static_cast<std::size_t>(levels) + 1));
    for (int lvl = 0; lvl <= levels; ++lvl) {
        table[0][lvl] = init(0, lvl);
        if (n >= 1) table[1][lvl] = init(1, lvl);
    }
    for (int m = 2; m <= n; ++m) {
        for (int lvl = 0; lvl + 2 <= levels && lvl <= 2 * (n - m); ++lvl) {
            const Rational c = q * pair_inverse(q, pt.b(), lvl + 1);
            table[m][lvl] =
                kX * dilate(table[m - 1][lvl + 1], q, 0, 1) + (kS * dilate(table[m - 2][lvl + 2], q, 0, 2)) * c;
        }
    }
    return table[n][0];
}

}  // namespace

XsPoly fib_qb(int n, const ParamPoint& pt) {
    require_nonnegative(n, "dilated::fib_qb");
    return run_dilated(n, pt, [](int m, int) { return m == 0 ? XsPoly() : XsPoly(Rational(1)); });
}

XsPoly lucas_qb(int n, const ParamPoint& pt) {
    require_nonnegative(n, "dilated::lucas_qb");
    return run_dilated(n, pt, [&pt](int m, int lvl) { return m == 0 ? XsPoly(Rational(1 - pt.level(lvl))) : kX; });
}

}  // namespace dilated

}  // namespace qcheb
