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

// Short tour: map a spin-1 ferromagnet on two sites to bosons, confirm the
// mapped energy is non-Hermitian under the kinematic inner product yet
// self-adjoint under the dynamical one, and that both pictures share one
// spectrum.

#include <iostream>

#include "dyson/dyson.hpp"

int main() {
  using namespace dyson;
  const DoubledSpin s(2);  // spin 1

  const Cluster chain = square_cluster(2, 1, Boundary::open);
  const HamiltonianSpec spin_spec{Model::heisenberg_FM, Representation::spin, 1.0, 0.0, s};
  const HamiltonianSpec boson_spec{Model::heisenberg_FM, Representation::mapped_substituted,
                                   1.0, 0.0, s};

  const BuildResult spin_h = build_hamiltonian(spin_spec, chain);
  const BuildResult boson_h = build_hamiltonian(boson_spec, chain);

  const Metric kinematic = Metric::identity(boson_h.metric.basis_id, boson_h.h.dim());
  std::cout << "||gH - H†g|| dynamical: "
            << self_adjointness_residual(boson_h.h, boson_h.metric) << "\n";
  std::cout << "||H - H†||  kinematic: "
            << self_adjointness_residual(boson_h.h, kinematic) << "\n";

  const Spectrum a = spectrum(spin_h.h, &spin_h.metric);
  const Spectrum b = spectrum(boson_h.h, &boson_h.metric);
  const ComparisonReport cmp = compare_spectra(a, b, 1e-9);
  std::cout << "spectra match: " << (cmp.matched ? "yes" : "no")
            << " (max diff " << cmp.max_abs_difference << ")\n";
  return cmp.matched ? 0 : 1;
}
