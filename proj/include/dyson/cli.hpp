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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "dyson/factors.hpp"
#include "dyson/io.hpp"
#include "dyson/relations.hpp"
#include "dyson/spectral.hpp"

namespace dyson {

// exit statuses: 0 all checks pass, 1 check failure, 2 parse/validation error
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline std::string resolve_output_path(const std::string& path) {
  if (path == "-" || path.empty()) return path;
  if (path.front() == '/') return path;
  if (const char* dir = std::getenv("DYSONIZE_OUT_DIR"); dir != nullptr && *dir != '\0')
    return std::string(dir) + "/" + path;
  return path;
}

inline bool write_output(const std::string& path, const std::string& contents,
                         std::ostream& out, std::ostream& err) {
  const std::string resolved = resolve_output_path(path);
  if (resolved == "-" || resolved.empty()) {
    out << contents;
    return true;
  }
  std::ofstream f(resolved, std::ios::binary);
  if (!f) {
    err << "error: io: cannot open output file '" << resolved << "'\n";
    return false;
  }
  f << contents;
  return true;
}

inline void append_relation_rows(Table& t, const std::string& set_name,
                                 const std::vector<RelationReport>& reports, bool& all_ok) {
  for (const auto& r : reports) {
    t.add_row({set_name, r.relation_name, format_double(r.residual),
               format_double(r.tolerance), r.passed ? "1" : "0"});
    all_ok = all_ok && r.passed;
  }
}

inline Cluster load_cluster(const RunConfig& cfg) {
  if (cfg.cluster_file.empty())
    return square_cluster(cfg.lx, cfg.ly, cfg.boundary);
  std::ifstream f(cfg.cluster_file);
  if (!f) throw ParseError("cannot open cluster file '" + cfg.cluster_file + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_cluster(buf.str());
}

}  // namespace detail

/// Execute one batch command. Emits the command's table in the configured
/// format to output.path ("-" = stdout), diagnostics to err. Returns the
/// process exit status.
inline int run(const RunConfig& cfg, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  try {
    const DoubledSpin s(cfg.two_s);
    Table table;
    bool checks_ok = true;
    std::string title = to_string(cfg.command);

    switch (cfg.command) {
      case Command::verify_algebra: {
        s.require_physical("verify-algebra");
        table.header = {"set", "relation", "residual", "tolerance", "passed"};
        const double tol = cfg.tol_algebra;
        if (cfg.algebra == "su2" || cfg.algebra == "all")
          detail::append_relation_rows(table, "spin", verify_su2(spin_operators(s), tol),
                                       checks_ok);
        if (cfg.algebra == "super" || cfg.algebra == "all")
          detail::append_relation_rows(table, "super",
                                       verify_superalgebra(super_operators(s), tol),
                                       checks_ok);
        if (cfg.algebra == "all") {
          for (FactorVariant v : {FactorVariant::dyson, FactorVariant::anti_dyson})
            detail::append_relation_rows(table, std::string("mapped_") + to_string(v),
                                         verify_su2(map_spin(s, v).ops, tol), checks_ok);
          for (FactorVariant v :
               {FactorVariant::super_dyson, FactorVariant::super_anti_dyson})
            detail::append_relation_rows(table, std::string("mapped_") + to_string(v),
                                         verify_superalgebra(map_super(s, v).ops, tol),
                                         checks_ok);
        }
        break;
      }
      case Command::factors: {
        s.require_physical("factors");
        table.header = {"variant", "fermion_sector", "u", "value"};
        auto emit = [&](const FactorTable& t) {
          for (size_t u = 0; u < t.values.size(); ++u)
            table.add_row({to_string(t.variant), std::to_string(t.fermion_sector),
                           std::to_string(u), format_double(t.values[u])});
        };
        emit(dyson_factors(s));
        emit(anti_dyson_factors(s));
        for (FactorVariant v : {FactorVariant::super_dyson, FactorVariant::super_anti_dyson})
          for (int a : {0, 1}) emit(super_factors(s, a, v));
        break;
      }
      case Command::build: {
        const HamiltonianSpec spec{cfg.model, cfg.representation, cfg.J, cfg.tau, s};
        const Cluster c = detail::load_cluster(cfg);
        const BuildResult b = build_hamiltonian(spec, c);
        const Metric kinematic = Metric::identity(b.metric.basis_id, b.h.dim());
        const double res_dyn = self_adjointness_residual(b.h, b.metric);
        const double res_kin = self_adjointness_residual(b.h, kinematic);
        table.header = {"field", "value"};
        table.add_row({"model", to_string(spec.model)});
        table.add_row({"representation", to_string(spec.representation)});
        table.add_row({"two_s", std::to_string(cfg.two_s)});
        table.add_row({"J", format_double(cfg.J)});
        table.add_row({"tau", format_double(cfg.tau)});
        table.add_row({"cluster", c.id()});
        table.add_row({"dim", std::to_string(b.h.dim())});
        table.add_row({"n_directed_bonds", std::to_string(c.bonds.size())});
        table.add_row({"reference_energy", format_double(b.reference_energy)});
        table.add_row({"residual_dynamical_metric", format_double(res_dyn)});
        table.add_row({"residual_kinematic_metric", format_double(res_kin)});
        if (res_dyn <= cfg.tol_self_adjoint) {
          const ReferenceStateReport ref = reference_vs_ground(spec, c);
          table.add_row(
              {"reference_expectation", format_double(ref.reference_expectation)});
          table.add_row({"ground_energy", format_double(ref.ground_energy)});
        } else {
          // displayed low-order forms need not be exactly self-adjoint; the
          // hermitized ground-energy report only makes sense when they are
          table.add_row({"reference_expectation", "n/a"});
          table.add_row({"ground_energy", "n/a"});
        }
        for (size_t i = 0; i < b.notes.size(); ++i)
          table.add_row({"note_" + std::to_string(i), b.notes[i]});
        checks_ok = res_dyn <= cfg.tol_self_adjoint;
        break;
      }
      case Command::spectrum: {
        const HamiltonianSpec spec{cfg.model, cfg.representation, cfg.J, cfg.tau, s};
        const Cluster c = detail::load_cluster(cfg);
        const BuildResult b = build_hamiltonian(spec, c);
        const Spectrum sp = (cfg.method == SpectrumMethod::metric)
                                ? spectrum(b.h, &b.metric, cfg.tol_self_adjoint)
                                : spectrum(b.h);
        table.header = {"index", "real", "imag"};
        for (size_t i = 0; i < sp.eigenvalues.size(); ++i)
          table.add_row({std::to_string(i), format_double(sp.eigenvalues[i].real()),
                         format_double(sp.eigenvalues[i].imag())});
        break;
      }
      case Command::compare: {
        const Cluster c = detail::load_cluster(cfg);
        const HamiltonianSpec spec_a{cfg.model, cfg.representation, cfg.J, cfg.tau, s};
        const HamiltonianSpec spec_b{cfg.model, cfg.representation_b, cfg.J, cfg.tau, s};
        const BuildResult a = build_hamiltonian(spec_a, c);
        const BuildResult b = build_hamiltonian(spec_b, c);
        const Spectrum sa = spectrum(a.h, &a.metric, cfg.tol_self_adjoint);
        const Spectrum sb = spectrum(b.h, &b.metric, cfg.tol_self_adjoint);
        const ComparisonReport r = compare_spectra(sa, sb, cfg.tol_spectra);
        table.header = {"field", "value"};
        table.add_row({"model", to_string(cfg.model)});
        table.add_row({"representation_a", to_string(cfg.representation)});
        table.add_row({"representation_b", to_string(cfg.representation_b)});
        table.add_row({"dim_a", std::to_string(r.dim_a)});
        table.add_row({"dim_b", std::to_string(r.dim_b)});
        table.add_row({"max_abs_difference", format_double(r.max_abs_difference)});
        table.add_row({"tolerance", format_double(r.tolerance)});
        table.add_row({"matched", r.matched ? "1" : "0"});
        if (!r.note.empty()) table.add_row({"note", r.note});
        checks_ok = r.matched;
        break;
      }
      case Command::susy_scan: {
        const Cluster c = detail::load_cluster(cfg);
        const auto rows = susy_point_sweep(c, s, cfg.J, cfg.tau_values);
        table.header = {"tau", "max_commutator_plain", "max_commutator_susy"};
        for (const auto& r : rows)
          table.add_row({format_double(r.tau), format_double(r.max_norm_plain),
                         format_double(r.max_norm_susy)});
        break;
      }
    }

    const std::string rendered = (cfg.output_format == OutputFormat::rows)
                                     ? render_rows(table)
                                     : render_structured(title, table);
    if (!detail::write_output(cfg.output_path, rendered, out, err)) return kExitUsage;
    if (!checks_ok) {
      err << "error: check: " << title << " checks failed tolerance\n";
      return kExitCheckFailed;
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: validation: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace dyson
