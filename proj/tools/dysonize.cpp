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

// Batch driver: one subcommand per run, structured config file plus flag
// overrides (flags win), machine-readable rows/structured output.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dyson/dyson.hpp"

namespace {

struct FlagOverrides {
  // raw strings; only flags the user actually passed are applied
  std::string config_path;
  std::string model, representation, representation_b, algebra, boundary, cluster_file;
  std::string tau_values, method, output_path, output_format;
  int two_s = 0, lx = 0, ly = 0;
  double J = 0, tau = 0, tol_algebra = 0, tol_self_adjoint = 0, tol_spectra = 0;
};

void add_common_flags(CLI::App* sub, FlagOverrides& f) {
  sub->add_option("--config", f.config_path, "structured config file (flags override it)");
  sub->add_option("--model", f.model, "heisenberg_FM | heisenberg_AFM | tJ_ferro | tJ_AF");
  sub->add_option("--representation", f.representation,
                  "spin | mapped_transcribed | mapped_substituted | mapped_truncated");
  sub->add_option("--representation-b", f.representation_b,
                  "second representation (compare)");
  sub->add_option("--two-s", f.two_s, "spin as the integer 2s");
  sub->add_option("--J", f.J, "exchange coupling");
  sub->add_option("--tau", f.tau, "t-J hopping amplitude");
  sub->add_option("--algebra", f.algebra, "verify-algebra selector: su2 | super | all");
  sub->add_option("--lx", f.lx, "cluster extent in x");
  sub->add_option("--ly", f.ly, "cluster extent in y");
  sub->add_option("--boundary", f.boundary, "open | periodic");
  sub->add_option("--cluster-file", f.cluster_file,
                  "serialized cluster file (wins over --lx/--ly/--boundary)");
  sub->add_option("--tol-algebra", f.tol_algebra, "relation residual tolerance");
  sub->add_option("--tol-self-adjoint", f.tol_self_adjoint,
                  "dynamical self-adjointness tolerance");
  sub->add_option("--tol-spectra", f.tol_spectra, "spectra comparison tolerance");
  sub->add_option("--tau-values", f.tau_values, "comma-separated sweep grid (susy-scan)");
  sub->add_option("--method", f.method, "spectrum method: metric | general");
  sub->add_option("--output", f.output_path, "output file path ('-' = stdout)");
  sub->add_option("--format", f.output_format, "rows | structured");
}

void apply_overrides(const CLI::App* sub, const FlagOverrides& f, dyson::RunConfig& cfg) {
  using dyson::apply_config_entry;
  auto used = [&](const std::string& name) { return sub->count(name) > 0; };
  if (used("--model")) apply_config_entry(cfg, "model", f.model);
  if (used("--representation")) apply_config_entry(cfg, "representation", f.representation);
  if (used("--representation-b"))
    apply_config_entry(cfg, "representation_b", f.representation_b);
  if (used("--two-s")) cfg.two_s = f.two_s;
  if (used("--J")) cfg.J = f.J;
  if (used("--tau")) cfg.tau = f.tau;
  if (used("--algebra")) apply_config_entry(cfg, "algebra", f.algebra);
  if (used("--lx")) cfg.lx = f.lx;
  if (used("--ly")) cfg.ly = f.ly;
  if (used("--boundary")) apply_config_entry(cfg, "cluster.boundary", f.boundary);
  if (used("--cluster-file")) cfg.cluster_file = f.cluster_file;
  if (used("--tol-algebra")) cfg.tol_algebra = f.tol_algebra;
  if (used("--tol-self-adjoint")) cfg.tol_self_adjoint = f.tol_self_adjoint;
  if (used("--tol-spectra")) cfg.tol_spectra = f.tol_spectra;
  if (used("--tau-values")) apply_config_entry(cfg, "susy.tau_values", f.tau_values);
  if (used("--method")) apply_config_entry(cfg, "spectrum.method", f.method);
  if (used("--output")) cfg.output_path = f.output_path;
  if (used("--format")) apply_config_entry(cfg, "output.format", f.output_format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dysonize: spin / quasi-particle operator algebra and exact diagonalization"};
  app.require_subcommand(1);

  FlagOverrides flags;
  const char* names[] = {"verify-algebra", "factors", "build",
                         "spectrum",       "compare", "susy-scan"};
  for (const char* n : names) {
    CLI::App* sub = app.add_subcommand(n);
    add_common_flags(sub, flags);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    // --help and friends exit cleanly; anything else is a usage error
    return code == 0 ? 0 : dyson::kExitUsage;
  }

  dyson::RunConfig cfg;
  try {
    const CLI::App* sub = app.get_subcommands().front();
    if (sub->count("--config") > 0) {
      std::ifstream f(flags.config_path);
      if (!f) {
        std::cerr << "error: parse: cannot open config file '" << flags.config_path
                  << "'\n";
        return dyson::kExitUsage;
      }
      std::stringstream buf;
      buf << f.rdbuf();
      cfg = dyson::parse_config_text(buf.str());
    }
    cfg.command = dyson::parse_command(sub->get_name());
    apply_overrides(sub, flags, cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: parse: " << e.what() << "\n";
    return dyson::kExitUsage;
  }

  return dyson::run(cfg);
}
