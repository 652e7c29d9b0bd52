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

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace dyson {

enum class Boundary { open, periodic };

inline const char* to_string(Boundary b) {
  return b == Boundary::open ? "open" : "periodic";
}

/// One directed bond (r, r+delta). delta_label indexes the four nearest
/// neighbor displacements in the fixed order +x, +y, -x, -y.
struct Bond {
  int site = 0;
  int neighbor = 0;
  int delta_label = 0;
};

/// Finite square cluster with an explicit directed bond list.
///
/// The bond list realizes the double-counting neighbor-sum convention: every
/// site contributes one directed bond per in-range displacement, so each
/// undirected pair is traversed once per direction, and wrap-around on a
/// length-2 periodic direction genuinely duplicates a neighbor (displacement
/// counting, not distinct-neighbor counting). Hamiltonians that sum over one
/// sublattice only select the directed bonds whose source carries tag 1.
struct Cluster {
  int lx = 0, ly = 0;
  Boundary boundary = Boundary::open;
  int n_sites = 0;
  std::vector<int> sublattice;  // checkerboard tags, 1 or 2
  std::vector<Bond> bonds;
  double lattice_constant = 1.0;  // bookkeeping only

  int site_index(int m, int n) const { return m * ly + n; }

  std::string id() const {
    return std::to_string(lx) + "x" + std::to_string(ly) + ":" +
           to_string(boundary);
  }

  /// True when every bond connects sublattice 1 to sublattice 2.
  bool bipartite_bonds() const {
    for (const Bond& b : bonds)
      if (sublattice[b.site] == sublattice[b.neighbor]) return false;
    return true;
  }

  int undirected_pair_count() const {
    int c = 0;
    for (const Bond& b : bonds)
      if (b.site < b.neighbor) ++c;
    return c;
  }
};

/// lx-by-ly square cluster, sites indexed row-major over (m, n).
/// Under periodic boundary a direction of length 1 is left unwrapped
/// (wrapping it would produce self-bonds); a direction of length 2 wraps and
/// therefore doubles its bonds.
inline Cluster square_cluster(int lx, int ly, Boundary boundary) {
  if (lx < 1 || ly < 1) throw std::invalid_argument("square_cluster: empty cluster");
  if (lx * ly < 2)
    throw std::invalid_argument("square_cluster: cluster must have at least 2 sites");
  Cluster c;
  c.lx = lx;
  c.ly = ly;
  c.boundary = boundary;
  c.n_sites = lx * ly;
  c.sublattice.resize(c.n_sites);
  for (int m = 0; m < lx; ++m)
    for (int n = 0; n < ly; ++n)
      c.sublattice[c.site_index(m, n)] = ((m + n) % 2 == 0) ? 1 : 2;

  constexpr std::array<std::array<int, 2>, 4> deltas = {{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
  for (int m = 0; m < lx; ++m) {
    for (int n = 0; n < ly; ++n) {
      for (int dl = 0; dl < 4; ++dl) {
        int mm = m + deltas[dl][0];
        int nn = n + deltas[dl][1];
        if (boundary == Boundary::periodic) {
          const int len = (deltas[dl][0] != 0) ? lx : ly;
          if (len < 2) continue;  // unwrapped degenerate direction
          mm = (mm + lx) % lx;
          nn = (nn + ly) % ly;
        } else {
          if (mm < 0 || mm >= lx || nn < 0 || nn >= ly) continue;
        }
        c.bonds.push_back({c.site_index(m, n), c.site_index(mm, nn), dl});
      }
    }
  }
  return c;
}

}  // namespace dyson
