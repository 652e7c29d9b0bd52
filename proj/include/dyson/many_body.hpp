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

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyson/core.hpp"

namespace dyson {

/// Dense operator on a tensor product of site-local spaces. Site 0 is the
/// slowest (leftmost Kronecker) factor; the guardrail keeps everything at
/// desk scale where dense storage and solvers are the right tool.
struct ManyBodyOperator {
  std::string basis_id;
  std::vector<int> site_dims;
  Matrix entries;

  Eigen::Index dim() const { return entries.rows(); }
};

namespace detail {

constexpr long kMaxHilbertDim = 1L << 14;

inline long product_dim(const std::vector<int>& dims) {
  long d = 1;
  for (int x : dims) {
    if (x < 1) throw std::invalid_argument("site_dims entries must be >= 1");
    d *= x;
    if (d > kMaxHilbertDim)
      throw std::invalid_argument(
          "Hilbert space exceeds the 2^14 guardrail; this toolkit is for desk-scale clusters");
  }
  return d;
}

/// Strides of the row-major site ordering (site 0 slowest).
inline std::vector<long> strides(const std::vector<int>& dims) {
  std::vector<long> st(dims.size(), 1);
  for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k)
    st[k] = st[k + 1] * dims[k + 1];
  return st;
}

/// H += coeff * X(site), with X acting on one site and identity elsewhere.
inline void add_one_site(Matrix& h, const Matrix& x, int site,
                         const std::vector<int>& dims, Complex coeff) {
  const auto st = strides(dims);
  const long D = h.rows();
  const int d = dims[site];
  const long stride = st[site];
  for (long col = 0; col < D; ++col) {
    const int ci = static_cast<int>((col / stride) % d);
    const long base = col - ci * stride;
    for (int ri = 0; ri < d; ++ri) {
      const Complex v = x(ri, ci);
      if (v != Complex(0.0)) h(base + ri * stride, col) += coeff * v;
    }
  }
}

/// H += coeff * X(site_i) Y(site_j), distinct sites, identity elsewhere.
inline void add_two_site(Matrix& h, const Matrix& x, int si, const Matrix& y,
                         int sj, const std::vector<int>& dims, Complex coeff) {
  if (si == sj) throw std::invalid_argument("add_two_site: sites must differ");
  const auto st = strides(dims);
  const long D = h.rows();
  const int di = dims[si], dj = dims[sj];
  const long sti = st[si], stj = st[sj];
  for (long col = 0; col < D; ++col) {
    const int ci = static_cast<int>((col / sti) % di);
    const int cj = static_cast<int>((col / stj) % dj);
    const long base = col - ci * sti - cj * stj;
    for (int ri = 0; ri < di; ++ri) {
      const Complex xv = x(ri, ci);
      if (xv == Complex(0.0)) continue;
      for (int rj = 0; rj < dj; ++rj) {
        const Complex yv = y(rj, cj);
        if (yv != Complex(0.0)) h(base + ri * sti + rj * stj, col) += coeff * xv * yv;
      }
    }
  }
}

}  // namespace detail

inline std::string many_body_basis_id(const std::string& cluster_id,
                                      const std::string& local_basis_id) {
  return "cluster[" + cluster_id + "]x" + local_basis_id;
}

/// Kronecker embedding I x ... x local_op x ... x I at the given site.
inline ManyBodyOperator embed(const OperatorMatrix& local_op, int site,
                              const std::vector<int>& site_dims,
                              const std::string& basis_id) {
  if (site < 0 || site >= static_cast<int>(site_dims.size()))
    throw std::invalid_argument("embed: site index out of range");
  if (local_op.dim() != site_dims[site])
    throw std::invalid_argument("embed: local operator dimension does not match site_dims");
  const long D = detail::product_dim(site_dims);
  ManyBodyOperator out{basis_id, site_dims, Matrix::Zero(D, D)};
  detail::add_one_site(out.entries, local_op.entries, site, site_dims, Complex(1.0));
  return out;
}

}  // namespace dyson
