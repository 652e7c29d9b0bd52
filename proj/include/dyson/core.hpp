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

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace dyson {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Spin quantum number stored as the integer 2s, so half-integer spins
/// never touch floating point until a matrix element is evaluated.
struct DoubledSpin {
  int two_s = 1;

  DoubledSpin() = default;
  explicit DoubledSpin(int t) : two_s(t) {
    if (t < 0) throw std::invalid_argument("DoubledSpin: 2s must be non-negative");
  }

  double s() const { return 0.5 * static_cast<double>(two_s); }
  int multiplet_dim() const { return two_s + 1; }   // 2s+1
  int super_dim() const { return 2 * two_s + 1; }   // 4s+1

  /// The Dyson/anti-Dyson normalization factors divide by 2s, so every
  /// physical construction requires 2s >= 1.
  void require_physical(const char* who) const {
    if (two_s < 1)
      throw std::invalid_argument(std::string(who) + ": degenerate spin (2s = 0)");
  }

  bool operator==(const DoubledSpin&) const = default;
};

/// Entry-wise max absolute value. All residuals and pass/fail thresholds in
/// this library are expressed in this norm.
inline double max_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

/// A labeled dense complex square matrix tied to a named ordered basis.
/// Two operators may be combined only if their basis_id strings agree.
struct OperatorMatrix {
  std::string label;
  std::string basis_id;
  Matrix entries;

  Eigen::Index dim() const { return entries.rows(); }

  OperatorMatrix() = default;
  OperatorMatrix(std::string lbl, std::string basis, Matrix m)
      : label(std::move(lbl)), basis_id(std::move(basis)), entries(std::move(m)) {
    if (entries.rows() != entries.cols())
      throw std::invalid_argument("OperatorMatrix '" + label + "': matrix must be square");
  }
};

inline void require_same_basis(const OperatorMatrix& x, const OperatorMatrix& y,
                               const char* op) {
  if (x.basis_id != y.basis_id)
    throw std::invalid_argument(std::string(op) + ": basis mismatch ('" + x.basis_id +
                                "' vs '" + y.basis_id + "')");
}

inline OperatorMatrix product(const OperatorMatrix& x, const OperatorMatrix& y) {
  require_same_basis(x, y, "product");
  return {x.label + "*" + y.label, x.basis_id, x.entries * y.entries};
}

inline OperatorMatrix commutator(const OperatorMatrix& x, const OperatorMatrix& y) {
  require_same_basis(x, y, "commutator");
  return {"[" + x.label + "," + y.label + "]", x.basis_id,
          x.entries * y.entries - y.entries * x.entries};
}

inline OperatorMatrix anticommutator(const OperatorMatrix& x, const OperatorMatrix& y) {
  require_same_basis(x, y, "anticommutator");
  return {"{" + x.label + "," + y.label + "}", x.basis_id,
          x.entries * y.entries + y.entries * x.entries};
}

}  // namespace dyson
