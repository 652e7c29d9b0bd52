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

#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyson/cluster.hpp"
#include "dyson/hamiltonian.hpp"

namespace dyson {

enum class Command { verify_algebra, factors, build, spectrum, compare, susy_scan };
enum class OutputFormat { rows, structured };
enum class SpectrumMethod { metric, general };

inline const char* to_string(Command c) {
  switch (c) {
    case Command::verify_algebra: return "verify-algebra";
    case Command::factors: return "factors";
    case Command::build: return "build";
    case Command::spectrum: return "spectrum";
    case Command::compare: return "compare";
    case Command::susy_scan: return "susy-scan";
  }
  return "?";
}
inline const char* to_string(OutputFormat f) {
  return f == OutputFormat::rows ? "rows" : "structured";
}
inline const char* to_string(SpectrumMethod m) {
  return m == SpectrumMethod::metric ? "metric" : "general";
}

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {
template <typename T>
T parse_enum(const std::string& text, std::initializer_list<std::pair<const char*, T>> table,
             const char* what) {
  for (const auto& [name, value] : table)
    if (text == name) return value;
  throw ParseError(std::string("unknown ") + what + " '" + text + "'");
}
}  // namespace detail

inline Command parse_command(const std::string& s) {
  return detail::parse_enum<Command>(s,
                                     {{"verify-algebra", Command::verify_algebra},
                                      {"factors", Command::factors},
                                      {"build", Command::build},
                                      {"spectrum", Command::spectrum},
                                      {"compare", Command::compare},
                                      {"susy-scan", Command::susy_scan}},
                                     "command");
}
inline Model parse_model(const std::string& s) {
  return detail::parse_enum<Model>(s,
                                   {{"heisenberg_FM", Model::heisenberg_FM},
                                    {"heisenberg_AFM", Model::heisenberg_AFM},
                                    {"tJ_ferro", Model::tJ_ferro},
                                    {"tJ_AF", Model::tJ_AF}},
                                   "model");
}
inline Representation parse_representation(const std::string& s) {
  return detail::parse_enum<Representation>(
      s,
      {{"spin", Representation::spin},
       {"mapped_transcribed", Representation::mapped_transcribed},
       {"mapped_substituted", Representation::mapped_substituted},
       {"mapped_truncated", Representation::mapped_truncated}},
      "representation");
}
inline Boundary parse_boundary(const std::string& s) {
  return detail::parse_enum<Boundary>(
      s, {{"open", Boundary::open}, {"periodic", Boundary::periodic}}, "boundary");
}
inline OutputFormat parse_output_format(const std::string& s) {
  return detail::parse_enum<OutputFormat>(
      s, {{"rows", OutputFormat::rows}, {"structured", OutputFormat::structured}},
      "output format");
}
inline SpectrumMethod parse_spectrum_method(const std::string& s) {
  return detail::parse_enum<SpectrumMethod>(
      s, {{"metric", SpectrumMethod::metric}, {"general", SpectrumMethod::general}},
      "spectrum method");
}

/// Full-precision float formatting: 17 significant digits round-trip exactly,
/// so `rows` outputs are byte-stable golden files.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline double parse_double(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw ParseError("");
    return v;
  } catch (...) {
    throw ParseError(std::string("invalid number for ") + what + ": '" + s + "'");
  }
}

inline int parse_int(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw ParseError("");
    return v;
  } catch (...) {
    throw ParseError(std::string("invalid integer for ") + what + ": '" + s + "'");
  }
}

/// Batch-run configuration. Every field has a documented default (see the
/// serialized form); a config file supplies key = value lines with dotted
/// nesting, and command-line flags override file values.
struct RunConfig {
  Command command = Command::verify_algebra;
  Model model = Model::heisenberg_FM;
  Representation representation = Representation::spin;
  Representation representation_b = Representation::mapped_substituted;  // compare target
  int two_s = 1;
  double J = 1.0;
  double tau = 0.5;
  std::string algebra = "su2";  // verify-algebra selector: su2 | super | all
  int lx = 2;
  int ly = 1;
  Boundary boundary = Boundary::open;
  std::string cluster_file;  // optional serialized-cluster path, wins over lx/ly
  double tol_algebra = 1e-12;
  double tol_self_adjoint = 1e-10;
  double tol_spectra = 1e-9;
  std::vector<double> tau_values = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  SpectrumMethod method = SpectrumMethod::metric;
  std::string output_path = "-";  // "-" writes to stdout
  OutputFormat output_format = OutputFormat::rows;

  bool operator==(const RunConfig&) const = default;
};

inline std::string serialize_tau_values(const std::vector<double>& vs) {
  std::string out;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += format_double(vs[i]);
  }
  return out;
}

inline std::vector<double> parse_tau_values(const std::string& s) {
  std::vector<double> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(item, "susy.tau_values"));
  return out;
}

inline void apply_config_entry(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "command") c.command = parse_command(value);
  else if (key == "model") c.model = parse_model(value);
  else if (key == "representation") c.representation = parse_representation(value);
  else if (key == "representation_b") c.representation_b = parse_representation(value);
  else if (key == "two_s") c.two_s = parse_int(value, "two_s");
  else if (key == "J") c.J = parse_double(value, "J");
  else if (key == "tau") c.tau = parse_double(value, "tau");
  else if (key == "algebra") {
    if (value != "su2" && value != "super" && value != "all")
      throw ParseError("algebra must be su2, super, or all");
    c.algebra = value;
  } else if (key == "cluster.lx") c.lx = parse_int(value, "cluster.lx");
  else if (key == "cluster.ly") c.ly = parse_int(value, "cluster.ly");
  else if (key == "cluster.boundary") c.boundary = parse_boundary(value);
  else if (key == "cluster.file") c.cluster_file = value;
  else if (key == "tolerance.algebra") c.tol_algebra = parse_double(value, "tolerance.algebra");
  else if (key == "tolerance.self_adjoint")
    c.tol_self_adjoint = parse_double(value, "tolerance.self_adjoint");
  else if (key == "tolerance.spectra") c.tol_spectra = parse_double(value, "tolerance.spectra");
  else if (key == "susy.tau_values") c.tau_values = parse_tau_values(value);
  else if (key == "spectrum.method") c.method = parse_spectrum_method(value);
  else if (key == "output.path") c.output_path = value;
  else if (key == "output.format") c.output_format = parse_output_format(value);
  else throw ParseError("unknown config key '" + key + "'");
}

inline RunConfig parse_config_text(const std::string& text) {
  RunConfig c;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'key = value'");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t\r");
      return (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
    };
    apply_config_entry(c, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return c;
}

inline std::string serialize_config(const RunConfig& c) {
  std::ostringstream out;
  out << "command = " << to_string(c.command) << "\n";
  out << "model = " << to_string(c.model) << "\n";
  out << "representation = " << to_string(c.representation) << "\n";
  out << "representation_b = " << to_string(c.representation_b) << "\n";
  out << "two_s = " << c.two_s << "\n";
  out << "J = " << format_double(c.J) << "\n";
  out << "tau = " << format_double(c.tau) << "\n";
  out << "algebra = " << c.algebra << "\n";
  out << "cluster.lx = " << c.lx << "\n";
  out << "cluster.ly = " << c.ly << "\n";
  out << "cluster.boundary = " << to_string(c.boundary) << "\n";
  if (!c.cluster_file.empty()) out << "cluster.file = " << c.cluster_file << "\n";
  out << "tolerance.algebra = " << format_double(c.tol_algebra) << "\n";
  out << "tolerance.self_adjoint = " << format_double(c.tol_self_adjoint) << "\n";
  out << "tolerance.spectra = " << format_double(c.tol_spectra) << "\n";
  out << "susy.tau_values = " << serialize_tau_values(c.tau_values) << "\n";
  out << "spectrum.method = " << to_string(c.method) << "\n";
  out << "output.path = " << c.output_path << "\n";
  out << "output.format = " << to_string(c.output_format) << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Cluster / HamiltonianSpec serialization
// ---------------------------------------------------------------------------

/// Plain-text structured form of a cluster, one key per field. The bond list
/// is explicit, so hand-edited files can describe graphs the square builder
/// would not produce (the parser still rejects self-bonds and bad indices).
inline std::string serialize_cluster(const Cluster& c) {
  std::ostringstream out;
  out << "lx = " << c.lx << "\n";
  out << "ly = " << c.ly << "\n";
  out << "boundary = " << to_string(c.boundary) << "\n";
  out << "n_sites = " << c.n_sites << "\n";
  out << "lattice_constant = " << format_double(c.lattice_constant) << "\n";
  out << "sublattice = ";
  for (int k = 0; k < c.n_sites; ++k) out << (k ? "," : "") << c.sublattice[k];
  out << "\n";
  for (size_t i = 0; i < c.bonds.size(); ++i)
    out << "bonds." << i << " = " << c.bonds[i].site << "," << c.bonds[i].neighbor << ","
        << c.bonds[i].delta_label << "\n";
  return out.str();
}

inline Cluster parse_cluster(const std::string& text) {
  Cluster c;
  std::map<size_t, Bond> bonds;
  std::stringstream ss(text);
  std::string line;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t\r");
    return (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(ss, line)) {
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("cluster: expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "lx") c.lx = parse_int(value, "lx");
    else if (key == "ly") c.ly = parse_int(value, "ly");
    else if (key == "boundary") c.boundary = parse_boundary(value);
    else if (key == "n_sites") c.n_sites = parse_int(value, "n_sites");
    else if (key == "lattice_constant")
      c.lattice_constant = parse_double(value, "lattice_constant");
    else if (key == "sublattice") {
      std::stringstream vs(value);
      std::string item;
      while (std::getline(vs, item, ',')) c.sublattice.push_back(parse_int(item, "sublattice"));
    } else if (key.rfind("bonds.", 0) == 0) {
      const size_t idx = static_cast<size_t>(parse_int(key.substr(6), "bond index"));
      std::stringstream vs(value);
      std::string item;
      std::vector<int> fields;
      while (std::getline(vs, item, ',')) fields.push_back(parse_int(item, "bond"));
      if (fields.size() != 3) throw ParseError("cluster: bond needs site,neighbor,delta");
      bonds[idx] = Bond{fields[0], fields[1], fields[2]};
    } else {
      throw ParseError("cluster: unknown key '" + key + "'");
    }
  }
  for (const auto& [idx, b] : bonds) c.bonds.push_back(b);
  if (c.n_sites < 2) throw ParseError("cluster: n_sites must be at least 2");
  if (static_cast<int>(c.sublattice.size()) != c.n_sites)
    throw ParseError("cluster: sublattice list length must equal n_sites");
  for (int tag : c.sublattice)
    if (tag != 1 && tag != 2) throw ParseError("cluster: sublattice tags must be 1 or 2");
  for (const Bond& b : c.bonds) {
    if (b.site < 0 || b.site >= c.n_sites || b.neighbor < 0 || b.neighbor >= c.n_sites)
      throw ParseError("cluster: bond references an invalid site index");
    if (b.site == b.neighbor) throw ParseError("cluster: self-bonds are not allowed");
  }
  return c;
}

inline std::string serialize_hamiltonian_spec(const HamiltonianSpec& h) {
  std::ostringstream out;
  out << "model = " << to_string(h.model) << "\n";
  out << "representation = " << to_string(h.representation) << "\n";
  out << "J = " << format_double(h.J) << "\n";
  out << "tau = " << format_double(h.tau) << "\n";
  out << "s.two_s = " << h.s.two_s << "\n";
  return out.str();
}

inline HamiltonianSpec parse_hamiltonian_spec(const std::string& text) {
  HamiltonianSpec h;
  std::stringstream ss(text);
  std::string line;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t\r");
    return (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(ss, line)) {
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("spec: expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "model") h.model = parse_model(value);
    else if (key == "representation") h.representation = parse_representation(value);
    else if (key == "J") h.J = parse_double(value, "J");
    else if (key == "tau") h.tau = parse_double(value, "tau");
    else if (key == "s.two_s") h.s = DoubledSpin(parse_int(value, "s.two_s"));
    else throw ParseError("spec: unknown key '" + key + "'");
  }
  return h;
}

// ---------------------------------------------------------------------------
// Output rendering
// ---------------------------------------------------------------------------

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> r) { rows.push_back(std::move(r)); }
};

/// Comma-separated with one header line.
inline std::string render_rows(const Table& t) {
  std::ostringstream out;
  for (size_t i = 0; i < t.header.size(); ++i) out << (i ? "," : "") << t.header[i];
  out << "\n";
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << "\n";
  }
  return out.str();
}

/// Nested key/value text: one `row.N.column = value` line per cell.
inline std::string render_structured(const std::string& title, const Table& t) {
  std::ostringstream out;
  out << "table = " << title << "\n";
  for (size_t r = 0; r < t.rows.size(); ++r)
    for (size_t i = 0; i < t.header.size() && i < t.rows[r].size(); ++i)
      out << "row." << r << "." << t.header[i] << " = " << t.rows[r][i] << "\n";
  return out.str();
}

}  // namespace dyson
