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

#include <string>

#include "json.hpp"
#include "qcheb/poly.hpp"

namespace qcheb {

/// {"terms":[{"dx":int,"ds":int,"c":"num/den"}, ...]} in canonical order.
nlohmann::json poly_to_json(const XsPoly& p);

/// Inverse of poly_to_json. Throws std::invalid_argument on schema errors,
/// zero coefficients or repeated monomials (so the canonical form is unique).
XsPoly poly_from_json(const nlohmann::json& j);

/// Laurent values add an "s_power" field when a denominator s^k remains.
nlohmann::json laurent_to_json(const SLaurent& p);

}  // namespace qcheb
