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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "dyson/core.hpp"
#include "dyson/hamiltonian.hpp"
#include "dyson/many_body.hpp"
#include "dyson/quasi.hpp"

namespace dyson {

/// ||g H - H† g|| in the max-norm; zero iff H is self-adjoint under the
/// inner product defined by g.
inline double self_adjointness_residual(const ManyBodyOperator& h, const Metric& g) {
  if (h.dim() != g.dim())
    throw std::invalid_argument("self_adjointness_residual: dimension mismatch");
  const auto& w = g.weights;
  double worst = 0.0;
  for (Eigen::Index i = 0; i < h.dim(); ++i)
    for (Eigen::Index j = 0; j < h.dim(); ++j)
      worst = std::max(worst,
                       std::abs(w[i] * h.entries(i, j) - std::conj(h.entries(j, i)) * w[j]));
  return worst;
}

struct Spectrum {
  enum class Method { hermitized, general };
  std::vector<Complex> eigenvalues;  // sorted by (real, imag)
  double max_imag = 0.0;
  Method method = Method::general;
  bool defective_warning = false;
};

inline const char* to_string(Spectrum::Method m) {
  return m == Spectrum::Method::hermitized ? "hermitized" : "general";
}

namespace detail {
inline void sort_eigenvalues(std::vector<Complex>& ev) {
  std::sort(ev.begin(), ev.end(), [](const Complex& x, const Complex& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
}
}  // namespace detail

/// Eigenvalues of H. With a metric, H is first conjugated by the diagonal
/// square root, K = g^{1/2} H g^{-1/2}; for a quasi-Hermitian H this K is
/// Hermitian (asserted to 1e-10) and a symmetric solver returns exactly real
/// eigenvalues. Without a metric a general solver runs, with a warning flag
/// when the eigenvector matrix is numerically rank-deficient.
inline Spectrum spectrum(const ManyBodyOperator& h, const Metric* g = nullptr,
                         double residual_threshold = 1e-10) {
  Spectrum out;
  if (g != nullptr) {
    const double resid = self_adjointness_residual(h, *g);
    if (resid > residual_threshold) {
      std::ostringstream msg;
      msg << "spectrum: H is not self-adjoint under the supplied metric (residual "
          << resid << " > threshold " << residual_threshold << ")";
      throw std::invalid_argument(msg.str());
    }
    const Eigen::Index d = h.dim();
    const RealVector root = g->weights.array().sqrt().matrix();
    Matrix k(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j)
        k(i, j) = (root[i] / root[j]) * h.entries(i, j);
    const double herm = max_norm(Matrix(k - k.adjoint()));
    if (herm > 1e-10) {
      std::ostringstream msg;
      msg << "spectrum: similarity-transformed matrix is not Hermitian (defect " << herm
          << ")";
      throw std::invalid_argument(msg.str());
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver((k + Matrix(k.adjoint())) / 2.0,
                                                 Eigen::EigenvaluesOnly);
    out.method = Spectrum::Method::hermitized;
    out.eigenvalues.reserve(d);
    for (Eigen::Index i = 0; i < d; ++i)
      out.eigenvalues.emplace_back(solver.eigenvalues()[i], 0.0);
    out.max_imag = 0.0;
    detail::sort_eigenvalues(out.eigenvalues);
    return out;
  }

  Eigen::ComplexEigenSolver<Matrix> solver(h.entries, /*computeEigenvectors=*/true);
  out.method = Spectrum::Method::general;
  out.eigenvalues.reserve(h.dim());
  for (Eigen::Index i = 0; i < h.dim(); ++i) {
    out.eigenvalues.push_back(solver.eigenvalues()[i]);
    out.max_imag = std::max(out.max_imag, std::abs(solver.eigenvalues()[i].imag()));
  }
  Eigen::JacobiSVD<Matrix> svd(solver.eigenvectors());
  const double smin = svd.singularValues()(svd.singularValues().size() - 1);
  const double smax = svd.singularValues()(0);
  out.defective_warning = !(smin > 1e-8 * smax);
  detail::sort_eigenvalues(out.eigenvalues);
  return out;
}

struct ComparisonReport {
  double max_abs_difference = 0.0;
  bool matched = false;
  double tolerance = 0.0;
  long dim_a = 0, dim_b = 0;
  std::string note;
};

inline ComparisonReport compare_spectra(const Spectrum& a, const Spectrum& b, double tol) {
  ComparisonReport r;
  r.tolerance = tol;
  r.dim_a = static_cast<long>(a.eigenvalues.size());
  r.dim_b = static_cast<long>(b.eigenvalues.size());
  if (r.dim_a != r.dim_b) {
    r.matched = false;
    r.max_abs_difference = std::numeric_limits<double>::infinity();
    r.note = "dimension mismatch: " + std::to_string(r.dim_a) + " vs " +
             std::to_string(r.dim_b);
    return r;
  }
  double worst = 0.0;
  for (size_t i = 0; i < a.eigenvalues.size(); ++i)
    worst = std::max(worst, std::abs(a.eigenvalues[i] - b.eigenvalues[i]));
  r.max_abs_difference = worst;
  r.matched = worst <= tol;
  return r;
}

// ---------------------------------------------------------------------------
// Symmetry scans
// ---------------------------------------------------------------------------

/// ||[H, X_tot]|| for each requested element, in the representation named by
/// the spec. The plain convention sums bare site operators; the graded one
/// attaches electron-parity strings to the charge-type elements.
inline std::vector<std::pair<std::string, double>> symmetry_scan(
    const HamiltonianSpec& spec, const Cluster& c, const std::vector<std::string>& elements,
    ChargeConvention convention = ChargeConvention::plain) {
  const BuildResult build = build_hamiltonian(spec, c);
  std::vector<std::pair<std::string, double>> out;
  out.reserve(elements.size());
  for (const std::string& el : elements) {
    const ManyBodyOperator tot = total_operator(el, spec, c, convention);
    const Matrix comm = build.h.entries * tot.entries - tot.entries * build.h.entries;
    out.emplace_back(el, max_norm(comm));
  }
  return out;
}

struct SusySweepRow {
  double tau = 0.0;
  double max_norm_plain = 0.0;  // bare totals against the bare t-J energy
  double max_norm_susy = 0.0;   // graded charges against the counterterm-completed energy
};

/// Commutator scan over a hopping-amplitude grid, locating the coupling
/// point |2 tau| = |J|.
///
/// The plain column takes the t-J energy and bare summed generators at face
/// value; it stays bounded away from zero everywhere because the bare charge
/// sums ignore fermion statistics and the doping chemical potential. The susy
/// column adds the per-bond counterterm J[(2s - A(r)) + (2s - A(r'))] and
/// sums the charge-type generators with electron-parity strings; on chain
/// clusters it vanishes identically at 2 tau = J, which is the numerical
/// content of the symmetric-point condition. (Strings follow the row-major
/// site order, so exact zeros are expected on open chains; genuinely
/// two-dimensional clusters admit no such string convention.)
inline std::vector<SusySweepRow> susy_point_sweep(const Cluster& c, DoubledSpin s,
                                                  double j,
                                                  const std::vector<double>& tau_values) {
  std::vector<SusySweepRow> rows;
  rows.reserve(tau_values.size());
  static const std::vector<std::string> all8 = {"S_plus", "S_minus", "S_z", "A",
                                                "R_plus", "R_minus", "T_plus", "T_minus"};
  for (double tau : tau_values) {
    HamiltonianSpec spec{Model::tJ_ferro, Representation::spin, j, tau, s};
    const BuildResult build = build_hamiltonian(spec, c);
    const ManyBodyOperator ct = susy_counterterm(spec, c);
    const Matrix h_susy = build.h.entries + ct.entries;
    SusySweepRow row;
    row.tau = tau;
    for (const std::string& el : all8) {
      const Matrix plain_tot = total_operator(el, spec, c, ChargeConvention::plain).entries;
      row.max_norm_plain = std::max(
          row.max_norm_plain, max_norm(build.h.entries * plain_tot - plain_tot * build.h.entries));
      const Matrix graded_tot =
          total_operator(el, spec, c, ChargeConvention::graded).entries;
      row.max_norm_susy = std::max(
          row.max_norm_susy, max_norm(h_susy * graded_tot - graded_tot * h_susy));
    }
    rows.push_back(row);
  }
  return rows;
}

/// Reference-state energy expectation against the true ground energy.
/// Energies are measured from the reference state, so the expectation is the
/// (near-zero) diagonal matrix element at the reference configuration and
/// the ground energy is the smallest eigenvalue.
struct ReferenceStateReport {
  double reference_expectation = 0.0;
  double ground_energy = 0.0;
};

inline ReferenceStateReport reference_vs_ground(const HamiltonianSpec& spec,
                                                const Cluster& c) {
  const BuildResult build = build_hamiltonian(spec, c);
  const long ref = detail::reference_state_index(spec.model, spec.representation, c,
                                                 spec.s, build.h.site_dims);
  const Spectrum sp = spectrum(build.h, &build.metric);
  ReferenceStateReport r;
  r.reference_expectation = build.h.entries(ref, ref).real();
  r.ground_energy = sp.eigenvalues.front().real();
  return r;
}

}  // namespace dyson
