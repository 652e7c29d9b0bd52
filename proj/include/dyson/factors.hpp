/*
 * Copyright 2026 the dysonize authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyson/core.hpp"

namespace dyson {

enum class FactorVariant { dyson, anti_dyson, super_dyson, super_anti_dyson };

inline const char* to_string(FactorVariant v) {
  switch (v) {
    case FactorVariant::dyson: return "dyson";
    case FactorVariant::anti_dyson: return "anti_dyson";
    case FactorVariant::super_dyson: return "super_dyson";
    case FactorVariant::super_anti_dyson: return "super_anti_dyson";
  }
  return "?";
}

inline bool is_anti(FactorVariant v) {
  return v == FactorVariant::anti_dyson || v == FactorVariant::super_anti_dyson;
}
inline bool is_super(FactorVariant v) {
  return v == FactorVariant::super_dyson || v == FactorVariant::super_anti_dyson;
}

/// Basis-change normalization factors, indexed by the ladder rung u.
///
/// F_u = prod_{k=1}^{u-1} (1 - k/2s)^(1/2) for the plain Dyson basis,
/// the exponent flips sign for the anti-Dyson basis, and the super variants
/// extend the product to k = u-1+a where a is the fermion sector. `values`
/// holds exactly the physical range (every entry strictly positive);
/// rungs past it carry factor zero ("weightless") for the Dyson-type
/// variants and do not exist for the anti-type ones.
struct FactorTable {
  DoubledSpin s;
  FactorVariant variant = FactorVariant::dyson;
  int fermion_sector = 0;  // meaningful for super variants only
  std::vector<double> values;

  double value_or_zero(int u) const {
    if (u < 0) throw std::out_of_range("FactorTable: negative rung");
    if (u < static_cast<int>(values.size())) return values[u];
    if (is_anti(variant))
      throw std::out_of_range("FactorTable: anti-Dyson factor beyond physical range");
    return 0.0;
  }
};

namespace detail {
// Running product keeps the relative error at machine epsilon even for
// 2s of order 100, where re-evaluating the product per rung would not.
inline FactorTable make_factors(DoubledSpin s, FactorVariant variant, int a) {
  s.require_physical("factors");
  const int two_s = s.two_s;
  // physical rungs: u = 0..2s for a = 0, u = 0..2s-1 for a = 1
  const int u_max = two_s - a;
  FactorTable t{s, variant, a, {}};
  t.values.reserve(u_max + 1);
  double running = 1.0;  // prod_{k=1}^{u-1+a} (1 - k/2s)
  for (int u = 0; u <= u_max; ++u) {
    if (u >= 1) {
      const int k = u - 1 + a;
      if (k >= 1) running *= 1.0 - double(k) / double(two_s);
    }
    const double f = std::sqrt(running);
    t.values.push_back(is_anti(variant) ? 1.0 / f : f);
  }
  return t;
}
}  // namespace detail

inline FactorTable dyson_factors(DoubledSpin s) {
  return detail::make_factors(s, FactorVariant::dyson, 0);
}

inline FactorTable anti_dyson_factors(DoubledSpin s) {
  return detail::make_factors(s, FactorVariant::anti_dyson, 0);
}

inline FactorTable super_factors(DoubledSpin s, int fermion_sector, FactorVariant variant) {
  if (fermion_sector != 0 && fermion_sector != 1)
    throw std::invalid_argument("super_factors: fermion_sector must be 0 or 1");
  if (!is_super(variant))
    throw std::invalid_argument("super_factors: variant must be a super variant");
  return detail::make_factors(s, variant, fermion_sector);
}

}  // namespace dyson
