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

#include "qcheb/serialize.hpp"

#include <stdexcept>

namespace qcheb {

nlohmann::json poly_to_json(const XsPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) terms.push_back({{"dx", m.dx}, {"ds", m.ds}, {"c", to_string(c)}});
    return {{"terms", terms}};
}

XsPoly poly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
        throw std::invalid_argument("polynomial JSON must be an object with a \"terms\" array");
    XsPoly out;
    for (const auto& t : j.at("terms")) {
        if (!t.is_object() || !t.contains("dx") || !t.contains("ds") || !t.contains("c"))
            throw std::invalid_argument("polynomial term needs dx, ds and c");
        if (!t.at("dx").is_number_integer() || !t.at("ds").is_number_integer() || !t.at("c").is_string())
            throw std::invalid_argument("polynomial term has wrongly typed fields");
        const int dx = t.at("dx").get<int>();
        const int ds = t.at("ds").get<int>();
        if (dx < 0 || ds < 0) throw std::invalid_argument("polynomial term has a negative exponent");
        const Rational c = parse_rational(t.at("c").get<std::string>());
        if (c == 0) throw std::invalid_argument("polynomial JSON stores a zero coefficient");
        if (out.coeff(dx, ds) != 0) throw std::invalid_argument("polynomial JSON repeats a monomial");
        out.add_term(Monomial{dx, ds}, c);
    }
    return out;
}

nlohmann::json laurent_to_json(const SLaurent& p) {
    nlohmann::json j = poly_to_json(p.numerator());
    if (p.s_power() != 0) j["s_power"] = p.s_power();
    return j;
}

}  // namespace qcheb
