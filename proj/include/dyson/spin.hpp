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
#include <string>

#include "dyson/core.hpp"

namespace dyson {

/// Ladder and z-component matrices for one spin-s multiplet.
///
/// Basis: |s,m> with m = -s..s ascending, so row/column i holds m = -s + i.
/// All matrix elements are square roots of exact integer products, e.g.
/// <m+1|S+|m> = sqrt((2s - i)(i + 1)) at i = m + s.
struct SpinOperators {
  DoubledSpin s;
  OperatorMatrix S_plus, S_minus, S_z;
};

inline std::string spin_basis_id(DoubledSpin s) {
  return "spin[2s=" + std::to_string(s.two_s) + ",m asc]";
}

inline SpinOperators spin_operators(DoubledSpin s) {
  s.require_physical("spin_operators");
  const int d = s.multiplet_dim();
  const std::string basis = spin_basis_id(s);
  Matrix sp = Matrix::Zero(d, d);
  Matrix sz = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    sz(i, i) = -s.s() + i;
    if (i + 1 < d) {
      // s - m = 2s - i, s + m + 1 = i + 1 (exact integers)
      sp(i + 1, i) = std::sqrt(double(s.two_s - i) * double(i + 1));
    }
  }
  Matrix sm = sp.adjoint();
  return {s,
          {"S_plus", basis, std::move(sp)},
          {"S_minus", basis, std::move(sm)},
          {"S_z", basis, std::move(sz)}};
}

/// The eight generators acting on one super-multiplet: a spin-s multiplet
/// (charge 0) followed by a spin-(s-1/2) multiplet (charge +e), 4s+1 states.
///
/// Basis: the 2s+1 states |s,m> (m ascending), then the 2s states
/// |s-1/2,m> (m ascending). R+/T+ move a state from the first multiplet into
/// the second, lowering/raising m by one half; A distinguishes the
/// multiplets (eigenvalue s resp. s+1/2); S+/S-/S_z act blockwise.
struct SuperOperators {
  DoubledSpin s;
  OperatorMatrix S_plus, S_minus, S_z, A, R_plus, R_minus, T_plus, T_minus;
};

inline std::string super_basis_id(DoubledSpin s) {
  return "super[2s=" + std::to_string(s.two_s) + ",s-block then (s-1/2)-block,m asc]";
}

inline SuperOperators super_operators(DoubledSpin s) {
  s.require_physical("super_operators");
  const int two_s = s.two_s;
  const int d1 = two_s + 1;  // spin-s block
  const int d2 = two_s;      // spin-(s-1/2) block
  const int d = d1 + d2;
  const std::string basis = super_basis_id(s);

  Matrix sp = Matrix::Zero(d, d);
  Matrix sz = Matrix::Zero(d, d);
  Matrix a = Matrix::Zero(d, d);
  Matrix rp = Matrix::Zero(d, d);
  Matrix tp = Matrix::Zero(d, d);

  // spin-s block, m = -s + i
  for (int i = 0; i < d1; ++i) {
    sz(i, i) = -s.s() + i;
    a(i, i) = s.s();
    if (i + 1 < d1) sp(i + 1, i) = std::sqrt(double(two_s - i) * double(i + 1));
    // R+ |s,m> = sqrt(s+m) |s-1/2, m-1/2>; s+m = i, target block-2 slot i-1
    if (i >= 1) rp(d1 + (i - 1), i) = std::sqrt(double(i));
    // T+ |s,m> = sqrt(s-m) |s-1/2, m+1/2>; s-m = 2s-i, target slot i
    if (i <= two_s - 1) tp(d1 + i, i) = std::sqrt(double(two_s - i));
  }
  // spin-(s-1/2) block, m = -(s-1/2) + k; its own spin is s' = s - 1/2
  for (int k = 0; k < d2; ++k) {
    sz(d1 + k, d1 + k) = -(s.s() - 0.5) + k;
    a(d1 + k, d1 + k) = s.s() + 0.5;
    if (k + 1 < d2) {
      // s' - m = 2s' - k = (2s-1) - k, s' + m + 1 = k + 1
      sp(d1 + k + 1, d1 + k) = std::sqrt(double(two_s - 1 - k) * double(k + 1));
    }
  }

  Matrix sm = sp.adjoint();
  Matrix rm = rp.adjoint();
  Matrix tm = tp.adjoint();
  return {s,
          {"S_plus", basis, std::move(sp)},
          {"S_minus", basis, std::move(sm)},
          {"S_z", basis, std::move(sz)},
          {"A", basis, std::move(a)},
          {"R_plus", basis, std::move(rp)},
          {"R_minus", basis, std::move(rm)},
          {"T_plus", basis, std::move(tp)},
          {"T_minus", basis, std::move(tm)}};
}

}  // namespace dyson
