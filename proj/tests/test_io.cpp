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

#include <cstdlib>
#include <sstream>

#include "dyson/cli.hpp"
#include "dyson/io.hpp"

using namespace dyson;

TEST_CASE("config round-trip is the identity") {
  RunConfig c;
  c.command = Command::compare;
  c.model = Model::tJ_AF;
  c.representation = Representation::spin;
  c.representation_b = Representation::mapped_substituted;
  c.two_s = 3;
  c.J = 0.7;
  c.tau = 0.35;
  c.lx = 2;
  c.ly = 2;
  c.boundary = Boundary::periodic;
  c.tol_spectra = 1e-8;
  c.tau_values = {0.25, 0.5, 0.75};
  c.output_path = "out.csv";
  c.output_format = OutputFormat::structured;

  const RunConfig back = parse_config_text(serialize_config(c));
  CHECK(back == c);
  // and serialization is stable under a second pass
  CHECK(serialize_config(back) == serialize_config(c));
}

TEST_CASE("config parsing: comments, blanks, errors") {
  const RunConfig c = parse_config_text(
      "# a comment\n"
      "\n"
      "command = build\n"
      "model = heisenberg_AFM\n"
      "cluster.lx = 2\n");
  CHECK(c.command == Command::build);
  CHECK(c.model == Model::heisenberg_AFM);
  CHECK(c.lx == 2);
  CHECK(c.ly == 1);  // defaulted

  CHECK_THROWS_AS(parse_config_text("bogus_key = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_config_text("model heisenberg_FM\n"), ParseError);
  CHECK_THROWS_AS(parse_config_text("model = marmalade\n"), ParseError);
  CHECK_THROWS_AS(parse_config_text("two_s = 1.5\n"), ParseError);
  CHECK_THROWS_AS(parse_config_text("algebra = both\n"), ParseError);
}

TEST_CASE("cluster serialization round-trips field by field") {
  const Cluster c = square_cluster(2, 2, Boundary::periodic);
  const Cluster back = parse_cluster(serialize_cluster(c));
  CHECK(back.lx == c.lx);
  CHECK(back.ly == c.ly);
  CHECK(back.boundary == c.boundary);
  CHECK(back.n_sites == c.n_sites);
  CHECK(back.lattice_constant == c.lattice_constant);
  CHECK(back.sublattice == c.sublattice);
  REQUIRE(back.bonds.size() == c.bonds.size());
  for (size_t i = 0; i < c.bonds.size(); ++i) {
    CHECK(back.bonds[i].site == c.bonds[i].site);
    CHECK(back.bonds[i].neighbor == c.bonds[i].neighbor);
    CHECK(back.bonds[i].delta_label == c.bonds[i].delta_label);
  }
}

TEST_CASE("cluster parsing enforces the bond-list invariants") {
  const std::string base =
      "lx = 2\nly = 1\nboundary = open\nn_sites = 2\nlattice_constant = 1\n"
      "sublattice = 1,2\n";
  CHECK_THROWS_AS(parse_cluster(base + "bonds.0 = 0,0,0\n"), ParseError);  // self-bond
  CHECK_THROWS_AS(parse_cluster(base + "bonds.0 = 0,5,0\n"), ParseError);  // bad index
  CHECK_THROWS_AS(parse_cluster("lx = 2\nly = 1\nboundary = open\nn_sites = 2\n"
                                "lattice_constant = 1\nsublattice = 1,3\n"),
                  ParseError);  // bad tag
  const Cluster ok = parse_cluster(base + "bonds.0 = 0,1,0\nbonds.1 = 1,0,2\n");
  CHECK(ok.bonds.size() == 2);
  CHECK(ok.bipartite_bonds());
}

TEST_CASE("hamiltonian spec serialization round-trips") {
  HamiltonianSpec h{Model::tJ_AF, Representation::mapped_truncated, -0.3, 0.15,
                    DoubledSpin(3)};
  const HamiltonianSpec back = parse_hamiltonian_spec(serialize_hamiltonian_spec(h));
  CHECK(back.model == h.model);
  CHECK(back.representation == h.representation);
  CHECK(back.J == h.J);
  CHECK(back.tau == h.tau);
  CHECK(back.s == h.s);
  CHECK_THROWS_AS(parse_hamiltonian_spec("model = nope\n"), ParseError);
}

TEST_CASE("run: a hand-written cluster file feeds the build command") {
  // a 3-ring is an odd cycle, so the AF build must refuse it with status 2
  const std::string path = "/tmp/dysonize_test_ring3.cluster";
  {
    std::ofstream f(path);
    f << "lx = 3\nly = 1\nboundary = periodic\nn_sites = 3\nlattice_constant = 1\n"
      << "sublattice = 1,2,1\n"
      << "bonds.0 = 0,1,0\nbonds.1 = 1,2,0\nbonds.2 = 2,0,0\n"
      << "bonds.3 = 1,0,2\nbonds.4 = 2,1,2\nbonds.5 = 0,2,2\n";
  }
  RunConfig c;
  c.command = Command::build;
  c.model = Model::heisenberg_AFM;
  c.two_s = 1;
  c.cluster_file = path;
  std::ostringstream out, err;
  CHECK(run(c, out, err) == kExitUsage);
  CHECK(err.str().find("bipartite") != std::string::npos);

  // the ferromagnet does not care about sublattices and accepts the ring
  c.model = Model::heisenberg_FM;
  std::ostringstream out2, err2;
  CHECK(run(c, out2, err2) == kExitOk);
  CHECK(out2.str().find("dim,8") != std::string::npos);
}

TEST_CASE("doubles render at full round-trip precision") {
  for (double v : {1.0, -0.25, 1e-12, 0.30000000000000004, 3.141592653589793}) {
    const std::string s = format_double(v);
    CHECK(std::stod(s) == v);
  }
}

TEST_CASE("rows rendering is deterministic") {
  Table t;
  t.header = {"a", "b"};
  t.add_row({"1", format_double(0.1)});
  t.add_row({"2", format_double(-2.5e-13)});
  const std::string once = render_rows(t);
  const std::string twice = render_rows(t);
  CHECK(once == twice);
  CHECK(once.substr(0, 4) == "a,b\n");
}

TEST_CASE("structured rendering mirrors the header names") {
  Table t;
  t.header = {"field", "value"};
  t.add_row({"dim", "4"});
  const std::string s = render_structured("build", t);
  CHECK(s.find("table = build") != std::string::npos);
  CHECK(s.find("row.0.field = dim") != std::string::npos);
  CHECK(s.find("row.0.value = 4") != std::string::npos);
}

TEST_CASE("run: verify-algebra emits su(2) rows and exits clean") {
  RunConfig c;
  c.command = Command::verify_algebra;
  c.two_s = 4;
  std::ostringstream out, err;
  CHECK(run(c, out, err) == kExitOk);
  // header plus three relation rows
  int lines = 0;
  for (char ch : out.str())
    if (ch == '\n') ++lines;
  CHECK(lines == 4);
  CHECK(out.str().find("[S+,S-]=2Sz") != std::string::npos);
}

TEST_CASE("run: verify-algebra for the super set emits 28 rows") {
  RunConfig c;
  c.command = Command::verify_algebra;
  c.algebra = "super";
  c.two_s = 2;
  std::ostringstream out, err;
  CHECK(run(c, out, err) == kExitOk);
  int lines = 0;
  for (char ch : out.str())
    if (ch == '\n') ++lines;
  CHECK(lines == 29);
}

TEST_CASE("run: degenerate spin is a validation failure with a greppable reason") {
  RunConfig c;
  c.command = Command::build;
  c.two_s = 0;
  std::ostringstream out, err;
  CHECK(run(c, out, err) == kExitUsage);
  CHECK(err.str().find("error: validation:") != std::string::npos);
  CHECK(err.str().find("degenerate spin") != std::string::npos);
}

TEST_CASE("run: compare spin vs substituted on the AFM chain matches") {
  RunConfig c;
  c.command = Command::compare;
  c.model = Model::heisenberg_AFM;
  c.representation = Representation::spin;
  c.representation_b = Representation::mapped_substituted;
  c.two_s = 1;
  c.lx = 2;
  c.ly = 1;
  std::ostringstream out, err;
  CHECK(run(c, out, err) == kExitOk);
  CHECK(out.str().find("matched,1") != std::string::npos);
}

TEST_CASE("run: spectrum emits one sorted row per eigenvalue") {
  RunConfig c;
  c.command = Command::spectrum;
  c.model = Model::heisenberg_FM;
  c.two_s = 1;
  std::ostringstream out, err;
  CHECK(run(c, out, err) == kExitOk);
  int lines = 0;
  for (char ch : out.str())
    if (ch == '\n') ++lines;
  CHECK(lines == 5);  // header + 4 eigenvalues
}

TEST_CASE("run: the general solver path handles a non-Hermitian build") {
  RunConfig c;
  c.command = Command::spectrum;
  c.model = Model::heisenberg_AFM;
  c.representation = Representation::mapped_transcribed;
  c.two_s = 2;
  c.method = SpectrumMethod::general;
  std::ostringstream out, err;
  CHECK(run(c, out, err) == kExitOk);
  int lines = 0;
  for (char ch : out.str())
    if (ch == '\n') ++lines;
  CHECK(lines == 10);  // header + 9 eigenvalues (3^2)
}

TEST_CASE("relative output paths land in the directory named by the environment") {
  ::setenv("DYSONIZE_OUT_DIR", "/tmp/dysonize_outdir_test", 1);
  CHECK(detail::resolve_output_path("x.csv") == "/tmp/dysonize_outdir_test/x.csv");
  CHECK(detail::resolve_output_path("/abs/x.csv") == "/abs/x.csv");
  CHECK(detail::resolve_output_path("-") == "-");
  ::unsetenv("DYSONIZE_OUT_DIR");
  CHECK(detail::resolve_output_path("x.csv") == "x.csv");
}

TEST_CASE("run: identical configs produce byte-identical rows output") {
  RunConfig c;
  c.command = Command::susy_scan;
  c.two_s = 1;
  c.tau_values = {0.25, 0.5, 0.75};
  std::ostringstream out1, out2, err;
  REQUIRE(run(c, out1, err) == kExitOk);
  REQUIRE(run(c, out2, err) == kExitOk);
  CHECK(out1.str() == out2.str());
}
