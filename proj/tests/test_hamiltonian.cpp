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

#include <Eigen/Eigenvalues>
#include <map>

#include "dyson/hamiltonian.hpp"
#include "dyson/spectral.hpp"

using namespace dyson;
using Catch::Matchers::WithinAbs;

namespace {

Matrix kron(const Matrix& x, const Matrix& y) {
  Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
  return out;
}

std::vector<double> sorted_real_eigs(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian);
  std::vector<double> ev(solver.eigenvalues().data(),
                         solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(ev.begin(), ev.end());
  return ev;
}

const std::vector<Representation> kMappedReps = {Representation::mapped_substituted,
                                                 Representation::mapped_transcribed};

}  // namespace

TEST_CASE("golden: two-site spin-1/2 ferromagnet against a hand-built oracle") {
  // Oracle: assemble the 4x4 from raw 2x2 ladder matrices, independent of the
  // library builders, with the same sum convention (-J/2 per directed bond,
  // two directed traversals of the single undirected bond).
  const double J = 1.0;
  Matrix sp(2, 2), sz(2, 2);
  sp << 0, 0, 1, 0;
  sz << -0.5, 0, 0, 0.5;
  const Matrix sm = sp.adjoint();
  const Matrix term = kron(sz, sz) + 0.5 * kron(sp, sm) + 0.5 * kron(sm, sp);
  Matrix oracle = -J / 2.0 * 2.0 * term;     // both directed traversals
  const double e_ref = oracle(0, 0).real();  // all-down reference energy
  oracle -= e_ref * Matrix::Identity(4, 4);
  const std::vector<double> oracle_eigs = sorted_real_eigs(oracle);

  // frozen values: raw spectrum of -J S.S' is {-J/4 (x3), +3J/4}; the shift
  // moves the triplet to zero and the singlet to +J
  CHECK_THAT(e_ref, WithinAbs(-0.25, 1e-15));
  const std::vector<double> frozen = {0.0, 0.0, 0.0, 1.0};
  for (int i = 0; i < 4; ++i) CHECK_THAT(oracle_eigs[i], WithinAbs(frozen[i], 1e-13));

  const Cluster chain = square_cluster(2, 1, Boundary::open);
  const HamiltonianSpec spec{Model::heisenberg_FM, Representation::spin, J, 0.0,
                             DoubledSpin(1)};
  const BuildResult b = build_hamiltonian(spec, chain);
  CHECK_THAT(b.reference_energy, WithinAbs(-0.25, 1e-15));
  const Spectrum sp_build = spectrum(b.h, &b.metric);
  for (int i = 0; i < 4; ++i)
    CHECK_THAT(sp_build.eigenvalues[i].real(), WithinAbs(oracle_eigs[i], 1e-13));
}

TEST_CASE("FM transcription equals substitution entrywise") {
  for (int two_s : {1, 2, 3}) {
    for (const Cluster& c : {square_cluster(2, 1, Boundary::open),
                             square_cluster(2, 2, Boundary::periodic)}) {
      const DoubledSpin s(two_s);
      const BuildResult t = build_hamiltonian(
          {Model::heisenberg_FM, Representation::mapped_transcribed, 1.0, 0.0, s}, c);
      const BuildResult u = build_hamiltonian(
          {Model::heisenberg_FM, Representation::mapped_substituted, 1.0, 0.0, s}, c);
      INFO("2s = " << two_s << " cluster " << c.id());
      CHECK(max_norm(t.h.entries - u.h.entries) < 1e-12);
    }
  }
}

TEST_CASE("AFM transcription equals substitution entrywise (no typo found)") {
  for (int two_s : {1, 2, 3}) {
    for (const Cluster& c : {square_cluster(2, 1, Boundary::open),
                             square_cluster(2, 2, Boundary::periodic)}) {
      const DoubledSpin s(two_s);
      const BuildResult t = build_hamiltonian(
          {Model::heisenberg_AFM, Representation::mapped_transcribed, 1.0, 0.0, s}, c);
      const BuildResult u = build_hamiltonian(
          {Model::heisenberg_AFM, Representation::mapped_substituted, 1.0, 0.0, s}, c);
      INFO("2s = " << two_s << " cluster " << c.id());
      CHECK(max_norm(t.h.entries - u.h.entries) < 1e-12);
    }
  }
}

TEST_CASE("FM mapped energies annihilate the boson vacuum") {
  for (int two_s : {1, 2}) {
    for (const Cluster& c : {square_cluster(2, 1, Boundary::open),
                             square_cluster(2, 2, Boundary::periodic)}) {
      for (Representation rep : kMappedReps) {
        const BuildResult b = build_hamiltonian(
            {Model::heisenberg_FM, rep, 1.0, 0.0, DoubledSpin(two_s)}, c);
        INFO("2s = " << two_s << " " << to_string(rep) << " " << c.id());
        CHECK(max_norm(b.h.entries.col(0)) < 1e-12);  // vacuum is global index 0
      }
    }
  }
}

TEST_CASE("isospectrality of spin and substituted representations") {
  const Cluster chain = square_cluster(2, 1, Boundary::open);
  const Cluster plaquette = square_cluster(2, 2, Boundary::periodic);
  const std::vector<Model> models = {Model::heisenberg_FM, Model::heisenberg_AFM,
                                     Model::tJ_ferro, Model::tJ_AF};
  for (Model model : models) {
    for (int two_s : {1, 2, 3}) {
      std::vector<Cluster> clusters = {chain};
      // spin 3/2 t-J plaquettes (dim 7^4) live in the slow tagged test below
      if (two_s <= 2 || !is_tj(model)) clusters.push_back(plaquette);
      for (const Cluster& c : clusters) {
        const DoubledSpin s(two_s);
        const HamiltonianSpec spin_spec{model, Representation::spin, 0.8, 0.3, s};
        const HamiltonianSpec sub_spec{model, Representation::mapped_substituted, 0.8,
                                       0.3, s};
        const BuildResult a = build_hamiltonian(spin_spec, c);
        const BuildResult b = build_hamiltonian(sub_spec, c);
        const Spectrum sa = spectrum(a.h, &a.metric);
        const Spectrum sb = spectrum(b.h, &b.metric);
        const ComparisonReport cmp = compare_spectra(sa, sb, 1e-9);
        INFO(to_string(model) << " 2s=" << two_s << " " << c.id() << " diff "
                              << cmp.max_abs_difference);
        CHECK(cmp.matched);
      }
    }
  }
}

TEST_CASE("isospectrality at the guardrail: spin-3/2 t-J plaquettes", "[slow]") {
  const Cluster plaquette = square_cluster(2, 2, Boundary::periodic);
  const DoubledSpin s(3);
  for (Model model : {Model::tJ_ferro, Model::tJ_AF}) {
    const BuildResult a =
        build_hamiltonian({model, Representation::spin, 0.8, 0.3, s}, plaquette);
    const BuildResult b = build_hamiltonian(
        {model, Representation::mapped_substituted, 0.8, 0.3, s}, plaquette);
    const ComparisonReport cmp =
        compare_spectra(spectrum(a.h, &a.metric), spectrum(b.h, &b.metric), 1e-9);
    INFO(to_string(model) << " diff " << cmp.max_abs_difference);
    CHECK(cmp.matched);
  }
}

TEST_CASE("mapped Hamiltonians are dynamically self-adjoint") {
  for (Model model :
       {Model::heisenberg_FM, Model::heisenberg_AFM, Model::tJ_ferro, Model::tJ_AF}) {
    for (int two_s : {1, 2}) {
      const Cluster c = square_cluster(2, 2, Boundary::periodic);
      const BuildResult b = build_hamiltonian(
          {model, Representation::mapped_substituted, 1.0, 0.4, DoubledSpin(two_s)}, c);
      INFO(to_string(model) << " 2s=" << two_s);
      CHECK(self_adjointness_residual(b.h, b.metric) < 1e-12);
    }
  }
}

TEST_CASE("total Sz commutes with every model in every representation") {
  const Cluster c = square_cluster(2, 1, Boundary::open);
  for (Model model :
       {Model::heisenberg_FM, Model::heisenberg_AFM, Model::tJ_ferro, Model::tJ_AF}) {
    std::vector<Representation> reps = {Representation::spin,
                                        Representation::mapped_substituted,
                                        Representation::mapped_transcribed};
    if (is_tj(model)) reps.push_back(Representation::mapped_truncated);
    for (Representation rep : reps) {
      for (int two_s : {1, 2}) {
        const HamiltonianSpec spec{model, rep, 0.9, 0.35, DoubledSpin(two_s)};
        const BuildResult b = build_hamiltonian(spec, c);
        const ManyBodyOperator tot = total_operator("S_z", spec, c);
        const Matrix comm = b.h.entries * tot.entries - tot.entries * b.h.entries;
        INFO(to_string(model) << " " << to_string(rep) << " 2s=" << two_s);
        CHECK(max_norm(comm) < 1e-12);
      }
    }
  }
}

TEST_CASE("total A counts charge and commutes with the t-J energy") {
  const Cluster c = square_cluster(2, 1, Boundary::open);
  for (Model model : {Model::tJ_ferro, Model::tJ_AF}) {
    for (Representation rep :
         {Representation::spin, Representation::mapped_substituted,
          Representation::mapped_transcribed, Representation::mapped_truncated}) {
      const HamiltonianSpec spec{model, rep, 1.0, 0.45, DoubledSpin(1)};
      const BuildResult b = build_hamiltonian(spec, c);
      const ManyBodyOperator tot = total_operator("A", spec, c);
      const Matrix comm = b.h.entries * tot.entries - tot.entries * b.h.entries;
      INFO(to_string(model) << " " << to_string(rep));
      CHECK(max_norm(comm) < 1e-12);
    }
  }
}

TEST_CASE("unknown total elements are rejected per local algebra") {
  const Cluster c = square_cluster(2, 1, Boundary::open);
  const HamiltonianSpec fm{Model::heisenberg_FM, Representation::spin, 1.0, 0.0,
                           DoubledSpin(1)};
  CHECK_THROWS_AS(total_operator("R_plus", fm, c), std::invalid_argument);
  CHECK_THROWS_AS(total_operator("bogus", fm, c), std::invalid_argument);
}

TEST_CASE("the no-fermion sector of the ferro t-J is the magnon block") {
  // on fermion-free states the t-J energy reduces to the ferromagnet with
  // exchange -2 J_tJ, in both the spin and the mapped pictures
  const Cluster c = square_cluster(2, 1, Boundary::open);
  const double Jtj = -0.7, tau = 0.3;
  for (int two_s : {1, 2}) {
    const DoubledSpin s(two_s);

    // mapped: fermion-free local states are the even interleaved indices
    const BuildResult tj = build_hamiltonian(
        {Model::tJ_ferro, Representation::mapped_substituted, Jtj, tau, s}, c);
    const BuildResult fm = build_hamiltonian(
        {Model::heisenberg_FM, Representation::mapped_substituted, -2.0 * Jtj, 0.0, s},
        c);
    const int d_super = s.super_dim();
    const int d_spin = s.multiplet_dim();
    std::vector<long> keep;
    for (int u0 = 0; u0 < d_spin; ++u0)
      for (int u1 = 0; u1 < d_spin; ++u1) keep.push_back((2 * u0) * d_super + 2 * u1);
    Matrix block(keep.size(), keep.size());
    for (size_t r = 0; r < keep.size(); ++r)
      for (size_t cidx = 0; cidx < keep.size(); ++cidx)
        block(r, cidx) = tj.h.entries(keep[r], keep[cidx]);
    INFO("2s = " << two_s);
    CHECK(max_norm(block - fm.h.entries) < 1e-12);

    // spin picture: fermion-free local states are the leading multiplet block
    const BuildResult tj_spin =
        build_hamiltonian({Model::tJ_ferro, Representation::spin, Jtj, tau, s}, c);
    const BuildResult fm_spin = build_hamiltonian(
        {Model::heisenberg_FM, Representation::spin, -2.0 * Jtj, 0.0, s}, c);
    std::vector<long> keep_spin;
    for (int m0 = 0; m0 < d_spin; ++m0)
      for (int m1 = 0; m1 < d_spin; ++m1) keep_spin.push_back(m0 * d_super + m1);
    Matrix block_spin(keep_spin.size(), keep_spin.size());
    for (size_t r = 0; r < keep_spin.size(); ++r)
      for (size_t cidx = 0; cidx < keep_spin.size(); ++cidx)
        block_spin(r, cidx) = tj_spin.h.entries(keep_spin[r], keep_spin[cidx]);
    CHECK(max_norm(block_spin - fm_spin.h.entries) < 1e-12);
  }
}

TEST_CASE("two-sublattice models reject non-bipartite bond lists") {
  const Cluster ring3 = square_cluster(3, 1, Boundary::periodic);
  const HamiltonianSpec afm{Model::heisenberg_AFM, Representation::spin, 1.0, 0.0,
                            DoubledSpin(1)};
  CHECK_THROWS_AS(build_hamiltonian(afm, ring3), std::invalid_argument);
  const HamiltonianSpec tjaf{Model::tJ_AF, Representation::spin, 1.0, 0.4,
                             DoubledSpin(1)};
  CHECK_THROWS_AS(build_hamiltonian(tjaf, ring3), std::invalid_argument);
}

TEST_CASE("model/representation validation and notes") {
  const Cluster c = square_cluster(2, 1, Boundary::open);
  CHECK_THROWS_AS(build_hamiltonian({Model::heisenberg_FM, Representation::mapped_truncated,
                                     1.0, 0.0, DoubledSpin(1)},
                                    c),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      build_hamiltonian(
          {Model::heisenberg_FM, Representation::spin, 1.0, 0.0, DoubledSpin(0)}, c),
      std::invalid_argument);

  const BuildResult flagged = build_hamiltonian(
      {Model::heisenberg_FM, Representation::spin, -1.0, 0.0, DoubledSpin(1)}, c);
  REQUIRE_FALSE(flagged.notes.empty());

  const BuildResult susy = build_hamiltonian(
      {Model::tJ_ferro, Representation::spin, 1.0, 0.5, DoubledSpin(1)}, c);
  REQUIRE_FALSE(susy.notes.empty());
}

TEST_CASE("Hilbert-space guardrail on builders") {
  // a t-J spin-3/2 chain of 8 sites would be 7^8 states and must be refused
  const Cluster chain8 = square_cluster(8, 1, Boundary::open);
  CHECK_THROWS_AS(
      build_hamiltonian(
          {Model::tJ_ferro, Representation::spin, 1.0, 0.4, DoubledSpin(3)}, chain8),
      std::invalid_argument);
}

TEST_CASE("transcription audit: FM exact, AFM exact, derived references validated") {
  const Cluster c = square_cluster(2, 1, Boundary::open);
  const DoubledSpin s(2);

  const TranscriptionAudit fm = transcription_audit(Model::heisenberg_FM, c, s, 1.0, 0.0);
  CHECK(fm.total_vs_substituted < 1e-12);
  CHECK(fm.total_vs_reference < 1e-12);
  CHECK(fm.reference_vs_substituted < 1e-12);
  for (const auto& row : fm.terms) {
    INFO(row.term);
    CHECK(row.max_abs_difference < 1e-12);
  }

  const TranscriptionAudit afm = transcription_audit(Model::heisenberg_AFM, c, s, 1.0, 0.0);
  CHECK(afm.total_vs_substituted < 1e-12);
  CHECK(afm.reference_vs_substituted < 1e-12);
  for (const auto& row : afm.terms) {
    INFO(row.term);
    CHECK(row.max_abs_difference < 1e-12);
  }
}

TEST_CASE("transcription audit: ferro t-J discrepancies are real and located") {
  const Cluster c = square_cluster(2, 1, Boundary::open);
  const TranscriptionAudit a =
      transcription_audit(Model::tJ_ferro, c, DoubledSpin(2), 1.0, 0.4);
  // the derived expansion itself reproduces the substituted energy
  CHECK(a.reference_vs_substituted < 1e-12);
  // the displayed form does not
  CHECK(a.total_vs_substituted > 1e-3);
  std::map<std::string, double> diff;
  for (const auto& row : a.terms) diff[row.term] = row.max_abs_difference;
  CHECK(diff.at("fermion_hop") < 1e-12);         // leading hopping is right
  CHECK(diff.at("fermion_number") > 1e-3);       // no such term arises
  CHECK(diff.at("boson_number") > 1e-3);         // wrong magnitude and sign
  CHECK(diff.at("int_pair_hop") > 1e-3);         // one partner term differs
  CHECK(diff.at("int_density_density") > 1e-3);  // halved, fermion part off
}

TEST_CASE("transcription audit: AF t-J cubic display matches the derived truncation") {
  const Cluster c = square_cluster(2, 1, Boundary::open);
  for (int two_s : {1, 2}) {
    const TranscriptionAudit a =
        transcription_audit(Model::tJ_AF, c, DoubledSpin(two_s), 1.0, 0.4);
    INFO("2s = " << two_s);
    CHECK(a.total_vs_reference < 1e-12);
    for (const auto& row : a.terms) {
      INFO(row.term);
      CHECK(row.max_abs_difference < 1e-12);
    }
    // quartic and higher interactions left out of the display are nonzero
    if (two_s >= 2) CHECK(a.total_vs_substituted > 1e-3);
  }
}

TEST_CASE("truncated ferro t-J is the quadratic part of the transcription") {
  const Cluster c = square_cluster(2, 1, Boundary::open);
  const DoubledSpin s(2);
  const BuildResult full = build_hamiltonian(
      {Model::tJ_ferro, Representation::mapped_transcribed, 1.0, 0.4, s}, c);
  const BuildResult quad = build_hamiltonian(
      {Model::tJ_ferro, Representation::mapped_truncated, 1.0, 0.4, s}, c);
  CHECK(max_norm(full.h.entries - quad.h.entries) > 1e-3);  // interactions present
  // and the truncated AF display coincides with its transcription
  const BuildResult af_t = build_hamiltonian(
      {Model::tJ_AF, Representation::mapped_transcribed, 1.0, 0.4, s}, c);
  const BuildResult af_q = build_hamiltonian(
      {Model::tJ_AF, Representation::mapped_truncated, 1.0, 0.4, s}, c);
  CHECK(max_norm(af_t.h.entries - af_q.h.entries) == 0.0);
}
