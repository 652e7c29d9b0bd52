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
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "dyson/core.hpp"
#include "dyson/factors.hpp"
#include "dyson/spin.hpp"

namespace dyson {

/// Diagonal positive-definite weight matrix defining an inner product.
/// The kinematic inner product has all weights 1; the dynamical one carries
/// the squared basis-change factors. Restricted to the physical subspace the
/// weights are strictly positive, so the metric is always invertible.
struct Metric {
  std::string basis_id;
  RealVector weights;

  Eigen::Index dim() const { return weights.size(); }

  Metric() = default;
  Metric(std::string basis, RealVector w) : basis_id(std::move(basis)), weights(std::move(w)) {
    for (Eigen::Index i = 0; i < weights.size(); ++i)
      if (!(weights[i] > 0.0))
        throw std::invalid_argument("Metric: weights must be strictly positive");
  }

  static Metric identity(const std::string& basis, Eigen::Index d) {
    return {basis, RealVector::Ones(d)};
  }
  bool is_identity() const { return (weights.array() == 1.0).all(); }
};

// ---------------------------------------------------------------------------
// Quasi-particle ladder operators (hard-truncated boson, two-level fermion)
// ---------------------------------------------------------------------------

struct BosonOperators {
  int n_max = 0;
  OperatorMatrix b, b_dagger, number;
};

inline std::string boson_basis_id(int n_max) {
  return "boson[n=0.." + std::to_string(n_max) + "]";
}

/// Truncated ladder: b†|u) = sqrt(u+1)|u+1) for u < n_max and b†|n_max) = 0.
/// The truncation leaves [b,b†] = 1 everywhere except the top rung, where
/// the diagonal entry is -n_max instead of +1.
inline BosonOperators boson_ops(int n_max) {
  if (n_max < 1) throw std::invalid_argument("boson_ops: n_max must be >= 1");
  const int d = n_max + 1;
  const std::string basis = boson_basis_id(n_max);
  Matrix bdag = Matrix::Zero(d, d);
  Matrix num = Matrix::Zero(d, d);
  for (int u = 0; u < d; ++u) {
    if (u + 1 < d) bdag(u + 1, u) = std::sqrt(double(u + 1));
    num(u, u) = u;
  }
  Matrix b = bdag.adjoint();
  return {n_max,
          {"b", basis, std::move(b)},
          {"b_dagger", basis, std::move(bdag)},
          {"b_dagger_b", basis, std::move(num)}};
}

struct FermionOperators {
  OperatorMatrix a, a_dagger, number;
};

/// Two-level fermion: {a,a†} = 1 and a² = a†² = 0 hold exactly.
inline FermionOperators fermion_ops() {
  const std::string basis = "fermion[n=0,1]";
  Matrix adag = Matrix::Zero(2, 2);
  adag(1, 0) = 1.0;
  Matrix a = adag.adjoint();
  Matrix num = Matrix::Zero(2, 2);
  num(1, 1) = 1.0;
  return {{"a", basis, std::move(a)},
          {"a_dagger", basis, std::move(adag)},
          {"a_dagger_a", basis, std::move(num)}};
}

// ---------------------------------------------------------------------------
// Single-site mapped operator sets
// ---------------------------------------------------------------------------

inline std::string mapped_spin_basis_id(DoubledSpin s, FactorVariant v) {
  return std::string("boson[") + to_string(v) + ",2s=" + std::to_string(s.two_s) + "]";
}

/// Interleaved bose-fermi basis: index 2u+a for rung u and fermion sector a,
/// with the weightless state (u = 2s, a = 1) removed; dimension 4s+1.
inline std::string mapped_super_basis_id(DoubledSpin s, FactorVariant v) {
  return std::string("bosefermi[") + to_string(v) + ",2s=" + std::to_string(s.two_s) + "]";
}

inline Metric dynamical_metric(DoubledSpin s, FactorVariant variant) {
  s.require_physical("dynamical_metric");
  if (!is_super(variant)) {
    const FactorTable t = detail::make_factors(s, variant, 0);
    RealVector w(t.values.size());
    for (size_t u = 0; u < t.values.size(); ++u) w[u] = t.values[u] * t.values[u];
    return {mapped_spin_basis_id(s, variant), std::move(w)};
  }
  const FactorTable t0 = super_factors(s, 0, variant);
  const FactorTable t1 = super_factors(s, 1, variant);
  RealVector w(s.super_dim());
  for (int u = 0; u <= s.two_s; ++u) {
    w[2 * u] = t0.values[u] * t0.values[u];
    if (u < s.two_s) w[2 * u + 1] = t1.values[u] * t1.values[u];
  }
  return {mapped_super_basis_id(s, variant), std::move(w)};
}

struct MappedSpinSet {
  FactorVariant variant;
  SpinOperators ops;
  Metric metric;
};

/// Spin operators rendered on the truncated boson space.
///
///   dyson:       S+ -> sqrt(2s) b†,  S- -> sqrt(2s)[1 - n/2s] b,  Sz -> -s + n
///   anti_dyson:  S+ -> sqrt(2s) b,   S- -> sqrt(2s) b†[1 - n/2s], Sz ->  s - n
inline MappedSpinSet map_spin(DoubledSpin s, FactorVariant variant) {
  s.require_physical("map_spin");
  if (is_super(variant))
    throw std::invalid_argument("map_spin: use map_super for the super variants");
  const BosonOperators bo = boson_ops(s.two_s);
  const int d = s.two_s + 1;
  const double rt2s = std::sqrt(double(s.two_s));
  const Matrix& b = bo.b.entries;
  const Matrix& bd = bo.b_dagger.entries;
  const Matrix& n = bo.number.entries;
  const Matrix hole = Matrix::Identity(d, d) - n / double(s.two_s);

  Matrix sp, sm, sz;
  if (variant == FactorVariant::dyson) {
    sp = rt2s * bd;
    sm = rt2s * hole * b;
    sz = -s.s() * Matrix::Identity(d, d) + n;
  } else {
    sp = rt2s * b;
    sm = rt2s * bd * hole;
    sz = s.s() * Matrix::Identity(d, d) - n;
  }
  const std::string basis = mapped_spin_basis_id(s, variant);
  SpinOperators ops{s,
                    {"S_plus", basis, std::move(sp)},
                    {"S_minus", basis, std::move(sm)},
                    {"S_z", basis, std::move(sz)}};
  return {variant, std::move(ops), dynamical_metric(s, variant)};
}

struct MappedSuperSet {
  FactorVariant variant;
  SuperOperators ops;
  Metric metric;
};

namespace detail {
/// Drop the weightless (u = 2s, a = 1) row and column, i.e. the last index
/// of the u-major interleaved bose-fermi product space.
inline Matrix drop_weightless(const Matrix& m) {
  return m.topLeftCorner(m.rows() - 1, m.cols() - 1);
}
}  // namespace detail

/// Super-multiplet generators rendered on the bose-fermi space, built from
/// the substitution tables on the full product space and then restricted to
/// the 4s+1 physical states.
///
/// Two matrix elements deviate from a naive reading of the substitution
/// tables; both are forced by the defining algebra relations (and agree with
/// the diagonal basis-change transcription of super_operators):
///   A -> s + a†a/2             (the anticommutators {R+,R-} = A + Sz and
///                               {T+,T-} = A - Sz pin A's normalization)
///   anti variant R+ -> sqrt(2s)[1 - b†b/2s] a†   (R+ switches multiplets,
///                               so it must carry the fermion creator)
inline MappedSuperSet map_super(DoubledSpin s, FactorVariant variant) {
  s.require_physical("map_super");
  if (!is_super(variant))
    throw std::invalid_argument("map_super: use map_spin for the pure-spin variants");
  const int two_s = s.two_s;
  const int db = two_s + 1;
  const int dfull = 2 * db;
  const double rt2s = std::sqrt(double(two_s));
  const BosonOperators bo = boson_ops(two_s);
  const FermionOperators fo = fermion_ops();

  auto kron = [](const Matrix& x, const Matrix& y) {
    Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      for (Eigen::Index j = 0; j < x.cols(); ++j)
        out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    return out;
  };
  const Matrix i2 = Matrix::Identity(2, 2);
  const Matrix ib = Matrix::Identity(db, db);
  const Matrix B = kron(bo.b.entries, i2);
  const Matrix Bd = kron(bo.b_dagger.entries, i2);
  const Matrix Nb = kron(bo.number.entries, i2);
  const Matrix Af = kron(ib, fo.a.entries);
  const Matrix Afd = kron(ib, fo.a_dagger.entries);
  const Matrix Na = kron(ib, fo.number.entries);
  const Matrix I = Matrix::Identity(dfull, dfull);
  const Matrix hole = I - (Nb + Na) / double(two_s);

  Matrix sp, sm, sz, a, rp, rm, tp, tm;
  if (variant == FactorVariant::super_dyson) {
    sp = rt2s * Bd;
    sm = hole * (rt2s * B);
    sz = -s.s() * I + Nb + 0.5 * Na;
    a = s.s() * I + 0.5 * Na;
    tp = rt2s * Afd;
    tm = hole * (rt2s * Af);
    rp = B * Afd;
    rm = Af * Bd;
  } else {
    sp = rt2s * B;
    sm = rt2s * Bd * hole;
    sz = s.s() * I - Nb - 0.5 * Na;
    a = s.s() * I + 0.5 * Na;
    rp = rt2s * (I - Nb / double(two_s)) * Afd;
    rm = rt2s * Af;
    tp = B * Afd;
    tm = Bd * Af;
  }

  const std::string basis = mapped_super_basis_id(s, variant);
  auto phys = [&](const char* label, const Matrix& m) {
    return OperatorMatrix{label, basis, detail::drop_weightless(m)};
  };
  SuperOperators ops{s,
                     phys("S_plus", sp),
                     phys("S_minus", sm),
                     phys("S_z", sz),
                     phys("A", a),
                     phys("R_plus", rp),
                     phys("R_minus", rm),
                     phys("T_plus", tp),
                     phys("T_minus", tm)};
  return {variant, std::move(ops), dynamical_metric(s, variant)};
}

// ---------------------------------------------------------------------------
// Basis-change similarity (quasi-particle coordinates -> spin coordinates)
// ---------------------------------------------------------------------------

/// Column u holds the spin-space coordinates of the u-th relabeled basis
/// state, so conjugating a spin-space operator X as S^{-1} X S reproduces the
/// corresponding mapped operator. For the anti variants the relabeling also
/// reverses the m-order (rung 0 sits at m = +s).
inline Matrix spin_similarity(DoubledSpin s, FactorVariant variant) {
  s.require_physical("spin_similarity");
  if (!is_super(variant)) {
    const FactorTable t = detail::make_factors(s, variant, 0);
    const int d = s.two_s + 1;
    Matrix sim = Matrix::Zero(d, d);
    for (int u = 0; u < d; ++u) {
      const int row = (variant == FactorVariant::dyson) ? u : (s.two_s - u);
      sim(row, u) = t.values[u];
    }
    return sim;
  }
  const FactorTable t0 = super_factors(s, 0, variant);
  const FactorTable t1 = super_factors(s, 1, variant);
  const int two_s = s.two_s;
  const int d = s.super_dim();
  const bool anti = (variant == FactorVariant::super_anti_dyson);
  Matrix sim = Matrix::Zero(d, d);
  for (int u = 0; u <= two_s; ++u) {
    for (int a = 0; a <= 1; ++a) {
      if (a == 1 && u == two_s) continue;  // weightless
      const int col = 2 * u + a;
      const double f = (a == 0) ? t0.values[u] : t1.values[u];
      int row;
      if (a == 0)
        row = anti ? (two_s - u) : u;
      else
        row = (two_s + 1) + (anti ? (two_s - 1 - u) : u);
      sim(row, col) = f;
    }
  }
  return sim;
}

// ---------------------------------------------------------------------------
// Star adjoint (adjoint with respect to a diagonal metric)
// ---------------------------------------------------------------------------

/// X* = g^{-1} X† g, evaluated with explicit diagonal weights:
/// (X*)_{ij} = (w_j / w_i) conj(X_{ji}).
inline OperatorMatrix star_adjoint(const OperatorMatrix& x, const Metric& g) {
  if (x.basis_id != g.basis_id)
    throw std::invalid_argument("star_adjoint: basis mismatch ('" + x.basis_id +
                                "' vs '" + g.basis_id + "')");
  if (x.dim() != g.dim())
    throw std::invalid_argument("star_adjoint: dimension mismatch");
  const Eigen::Index d = x.dim();
  Matrix out(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      out(i, j) = (g.weights[j] / g.weights[i]) * std::conj(x.entries(j, i));
  return {x.label + "*", x.basis_id, std::move(out)};
}

}  // namespace dyson
