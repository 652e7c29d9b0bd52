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
#include <catch2/catch_amalgamated.hpp>

#include "dyson/many_body.hpp"
#include "dyson/spin.hpp"

using namespace dyson;

namespace {
Matrix kron(const Matrix& x, const Matrix& y) {
  Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
  return out;
}
}  // namespace

TEST_CASE("embedding the identity gives the global identity") {
  const SpinOperators ops = spin_operators(DoubledSpin(1));
  OperatorMatrix eye{"I", ops.S_z.basis_id, Matrix::Identity(2, 2)};
  const ManyBodyOperator g = embed(eye, 1, {2, 2, 2}, "b");
  CHECK(max_norm(g.entries - Matrix::Identity(8, 8)) == 0.0);
}

TEST_CASE("embeddings at different sites commute exactly") {
  const SpinOperators ops = spin_operators(DoubledSpin(2));
  const std::vector<int> dims{3, 3, 3};
  const ManyBodyOperator a = embed(ops.S_plus, 0, dims, "b");
  const ManyBodyOperator b = embed(ops.S_minus, 2, dims, "b");
  CHECK(max_norm(a.entries * b.entries - b.entries * a.entries) == 0.0);
}

TEST_CASE("two-site Sz Sz diagonal against a hand Kronecker product") {
  const SpinOperators ops = spin_operators(DoubledSpin(1));
  const std::vector<int> dims{2, 2};
  const ManyBodyOperator z0 = embed(ops.S_z, 0, dims, "b");
  const ManyBodyOperator z1 = embed(ops.S_z, 1, dims, "b");
  const Matrix prod = z0.entries * z1.entries;
  RealVector expected(4);
  expected << 0.25, -0.25, -0.25, 0.25;  // site-0-major ordering
  for (int i = 0; i < 4; ++i) CHECK(prod(i, i) == Complex(expected[i]));
}

TEST_CASE("embed agrees with the explicit Kronecker product") {
  const SpinOperators ops = spin_operators(DoubledSpin(2));
  const Matrix i3 = Matrix::Identity(3, 3);
  const ManyBodyOperator mid = embed(ops.S_plus, 1, {3, 3, 3}, "b");
  CHECK(max_norm(mid.entries - kron(kron(i3, ops.S_plus.entries), i3)) == 0.0);
}

TEST_CASE("two-site placement matches products of embeddings") {
  const SpinOperators ops = spin_operators(DoubledSpin(1));
  const std::vector<int> dims{2, 2, 2};
  Matrix h = Matrix::Zero(8, 8);
  detail::add_two_site(h, ops.S_plus.entries, 0, ops.S_minus.entries, 2, dims,
                       Complex(0.5));
  const Matrix expect = 0.5 * embed(ops.S_plus, 0, dims, "b").entries *
                        embed(ops.S_minus, 2, dims, "b").entries;
  CHECK(max_norm(h - expect) == 0.0);
}

TEST_CASE("dimension mismatches and the Hilbert-space guardrail") {
  const SpinOperators ops = spin_operators(DoubledSpin(2));  // dim 3
  CHECK_THROWS_AS(embed(ops.S_z, 0, {2, 2}, "b"), std::invalid_argument);
  CHECK_THROWS_AS(embed(ops.S_z, 5, {3, 3}, "b"), std::invalid_argument);
  // 3^9 = 19683 > 2^14
  const std::vector<int> huge(9, 3);
  CHECK_THROWS_AS(embed(ops.S_z, 0, huge, "b"), std::invalid_argument);
}
