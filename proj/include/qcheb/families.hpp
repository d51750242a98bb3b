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

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcheb/poly.hpp"
#include "qcheb/qkernel.hpp"

namespace qcheb {

enum class FamilyId {
    FibCarlitz,     // Carlitz q-Fibonacci F_n(x,s,q)
    FibQb,          // (q,b)-Fibonacci F_n(x,b,s,q)
    LucasTrace,     // trace-Lucas l_n(x,b,s,q)
    LucasQb,        // (q,b)-Lucas L_n(x,b,s,q)
    GenFib,         // F_n(x,-1,s,q)
    GenLucas,       // L_n(x,-1,s,q)
    ChebU,          // q-Chebyshev, second kind
    ChebT,          // q-Chebyshev, first kind
    AlSalamIsmail,  // u_n(x;a,beta)
};

inline constexpr std::array<FamilyId, 9> kAllFamilies = {
    FamilyId::FibCarlitz, FamilyId::FibQb,  FamilyId::LucasTrace, FamilyId::LucasQb,      FamilyId::GenFib,
    FamilyId::GenLucas,   FamilyId::ChebU, FamilyId::ChebT,      FamilyId::AlSalamIsmail};

/// Wire name, e.g. "CHEB_T".
std::string_view family_tag(FamilyId id);

/// Accepts wire names and the short aliases T, U, F, F_QB, L_QB, l, CARLITZ.
std::optional<FamilyId> parse_family(std::string_view name);

/// Whether the family depends on the parameter b.
bool family_uses_b(FamilyId id);

/// Deliberate corruption of one generated value, used to prove that the
/// verification harness notices a broken generator.
struct Fault {
    FamilyId family;
    int index;
};

/// Primary generators. Every family is built by its fixed-parameter three-term
/// recurrence and memoized per (family, q, b). Negative indices run the same
/// recurrence backwards, so they come back as s-Laurent values.
///
/// The memo table is internally synchronized; one instance may be shared by
/// worker threads.
class Generators {
  public:
    Generators() = default;
    explicit Generators(std::optional<Fault> fault) : fault_(fault) {}

    Generators(const Generators&) = delete;
    Generators& operator=(const Generators&) = delete;

    /// Process-wide fault-free instance.
    static const Generators& shared();

    XsPoly fib_carlitz(int n, const Rational& q) const;
    XsPoly fib_qb(int n, const ParamPoint& pt) const;
    XsPoly lucas_trace(int n, const ParamPoint& pt) const;
    XsPoly lucas_qb(int n, const ParamPoint& pt) const;
    XsPoly gen_fib(int n, const Rational& q) const;
    XsPoly gen_lucas(int n, const Rational& q) const;
    XsPoly cheb_u(int n, const Rational& q) const;
    XsPoly cheb_t(int n, const Rational& q) const;
    /// beta may involve s (the specializations used here are beta = c s).
    XsPoly alsalam_ismail(int n, const Rational& a, const XsPoly& beta, const Rational& q) const;

    SLaurent fib_qb_any(int n, const ParamPoint& pt) const;
    SLaurent lucas_trace_any(int n, const ParamPoint& pt) const;
    SLaurent gen_lucas_any(int n, const Rational& q) const;
    SLaurent cheb_u_any(int n, const Rational& q) const;
    SLaurent cheb_t_any(int n, const Rational& q) const;

    /// Dispatch by id for n >= 0. b-free families ignore pt.b(); the
    /// Al-Salam-Ismail family is taken at a = q, beta = -q s, where it
    /// coincides with U_n.
    XsPoly value(FamilyId id, int n, const ParamPoint& pt) const;

  private:
    // (n, q, b, extra, fault_index) -> values 0..n; fault_index < 0 means none.
    using Builder = std::vector<XsPoly> (*)(int, const Rational&, const Rational&, const XsPoly&, int);

    std::vector<XsPoly> sequence(FamilyId id, int n, const Rational& q, const Rational& b, const XsPoly& extra,
                                 Builder build) const;

    std::optional<Fault> fault_;
    mutable std::mutex mutex_;
    mutable std::map<std::string, std::vector<XsPoly>> memo_;
};

// Free-function forms of the primary generators (shared instance).
XsPoly fib_carlitz(int n, const Rational& q);
XsPoly fib_qb(int n, const ParamPoint& pt);
XsPoly lucas_trace(int n, const ParamPoint& pt);
XsPoly lucas_qb(int n, const ParamPoint& pt);
XsPoly cheb_u(int n, const Rational& q);
XsPoly cheb_t(int n, const Rational& q);
XsPoly alsalam_ismail(int n, const Rational& a, const XsPoly& beta, const Rational& q);
/// L_{-n}(x,-1,s,q) for n > 0.
SLaurent gen_lucas_negative(int n, const Rational& q);
/// F_{n+1}(x,-1,s,q) from the terminating basic hypergeometric sum.
XsPoly hypergeom_gen_fib(int n, const Rational& q);
/// L_n(x,-1,s,q) from its hypergeometric sum; gives 1 at n = 0.
XsPoly hypergeom_gen_lucas(int n, const Rational& q);

/// Explicit coefficient formulas. These never touch the recurrences or the
/// memo table, so they serve as the second route for every family.
namespace closed {

XsPoly fib_carlitz(int n, const Rational& q);
XsPoly fib_qb(int n, const ParamPoint& pt);
/// F_{-n}(x,b,s,q), n > 0.
SLaurent fib_qb_negative(int n, const ParamPoint& pt);
XsPoly lucas_trace(int n, const ParamPoint& pt);
/// l_{-n}(x,b,s,q), n > 0.
SLaurent lucas_trace_negative(int n, const ParamPoint& pt);
XsPoly lucas_qb(int n, const ParamPoint& pt);
/// F_n(x,-1,s,q).
XsPoly gen_fib(int n, const Rational& q);
/// L_n(x,-1,s,q); equals 2 at n = 0.
XsPoly gen_lucas(int n, const Rational& q);
SLaurent gen_lucas_negative(int n, const Rational& q);
XsPoly cheb_u(int n, const Rational& q);
/// U_n for n < 0 (U_{-1} = 0).
SLaurent cheb_u_negative(int n, const Rational& q);
XsPoly cheb_t(int n, const Rational& q);
/// T_{-n}, n > 0.
SLaurent cheb_t_negative(int n, const Rational& q);
/// sum_k q^(k^2-k) [n-k over k] (-q^k a;q)_{n-2k} (-beta)^k x^(n-2k)
XsPoly alsalam_ismail(int n, const Rational& a, const XsPoly& beta, const Rational& q);
XsPoly hypergeom_gen_fib(int n, const Rational& q);
XsPoly hypergeom_gen_lucas(int n, const Rational& q);

}  // namespace closed

/// Recurrences that move the parameters (b -> qb, s -> qs) instead of
/// carrying an index-dependent coefficient. Used only as verification routes.
namespace dilated {

XsPoly fib_carlitz(int n, const Rational& q);
XsPoly fib_qb(int n, const ParamPoint& pt);
XsPoly lucas_qb(int n, const ParamPoint& pt);

}  // namespace dilated

}  // namespace qcheb
