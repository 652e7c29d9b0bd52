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

#include <string>
#include <vector>

#include "dyson/core.hpp"
#include "dyson/spin.hpp"

namespace dyson {

struct RelationReport {
  std::string relation_name;
  double residual = 0.0;  // max-norm of LHS - RHS
  double tolerance = 0.0;
  bool passed = false;
};

namespace detail {
inline RelationReport check(const std::string& name, const Matrix& lhs,
                            const Matrix& rhs, double tol) {
  const double r = max_norm(lhs - rhs);
  return {name, r, tol, r <= tol};
}
inline Matrix comm(const Matrix& x, const Matrix& y) { return x * y - y * x; }
inline Matrix acomm(const Matrix& x, const Matrix& y) { return x * y + y * x; }
}  // namespace detail

/// The three su(2) relations: [S+,S-] = 2Sz, [S+,Sz] = -S+, [S-,Sz] = S-.
inline std::vector<RelationReport> verify_su2(const SpinOperators& ops, double tol) {
  using detail::check;
  using detail::comm;
  require_same_basis(ops.S_plus, ops.S_minus, "verify_su2");
  require_same_basis(ops.S_plus, ops.S_z, "verify_su2");
  const Matrix& sp = ops.S_plus.entries;
  const Matrix& sm = ops.S_minus.entries;
  const Matrix& sz = ops.S_z.entries;
  return {
      check("[S+,S-]=2Sz", comm(sp, sm), 2.0 * sz, tol),
      check("[S+,Sz]=-S+", comm(sp, sz), -sp, tol),
      check("[S-,Sz]=S-", comm(sm, sz), sm, tol),
  };
}

/// The 28 defining relations of the eight-element super-algebra:
/// 3 diagonal Weyl, 8 off-diagonal Weyl commutators, 4 off-diagonal Weyl
/// anti-commutators, [A,Sz] = 0, and 12 Weyl-Cartan commutators.
///
/// Note {R+,T-} = S-. The relation follows from the multiplet action
/// equations (and from taking the adjoint of {R-,T+} = S+); writing S+
/// on the right-hand side here is a common slip, and the swapped version
/// fails for every 2s >= 1.
inline std::vector<RelationReport> verify_superalgebra(const SuperOperators& ops,
                                                       double tol) {
  using detail::acomm;
  using detail::check;
  using detail::comm;
  for (const OperatorMatrix* m :
       {&ops.S_minus, &ops.S_z, &ops.A, &ops.R_plus, &ops.R_minus, &ops.T_plus,
        &ops.T_minus})
    require_same_basis(ops.S_plus, *m, "verify_superalgebra");

  const Matrix& sp = ops.S_plus.entries;
  const Matrix& sm = ops.S_minus.entries;
  const Matrix& sz = ops.S_z.entries;
  const Matrix& a = ops.A.entries;
  const Matrix& rp = ops.R_plus.entries;
  const Matrix& rm = ops.R_minus.entries;
  const Matrix& tp = ops.T_plus.entries;
  const Matrix& tm = ops.T_minus.entries;
  const Matrix zero = Matrix::Zero(sp.rows(), sp.cols());

  std::vector<RelationReport> out;
  out.reserve(28);
  // diagonal Weyl
  out.push_back(check("[S+,S-]=2Sz", comm(sp, sm), 2.0 * sz, tol));
  out.push_back(check("{R+,R-}=A+Sz", acomm(rp, rm), a + sz, tol));
  out.push_back(check("{T+,T-}=A-Sz", acomm(tp, tm), a - sz, tol));
  // off-diagonal Weyl commutators
  out.push_back(check("[S+,R+]=-T+", comm(sp, rp), -tp, tol));
  out.push_back(check("[S-,R+]=0", comm(sm, rp), zero, tol));
  out.push_back(check("[S+,R-]=0", comm(sp, rm), zero, tol));
  out.push_back(check("[S-,R-]=T-", comm(sm, rm), tm, tol));
  out.push_back(check("[S+,T+]=0", comm(sp, tp), zero, tol));
  out.push_back(check("[S-,T+]=-R+", comm(sm, tp), -rp, tol));
  out.push_back(check("[S+,T-]=R-", comm(sp, tm), rm, tol));
  out.push_back(check("[S-,T-]=0", comm(sm, tm), zero, tol));
  // off-diagonal Weyl anti-commutators
  out.push_back(check("{R+,T+}=0", acomm(rp, tp), zero, tol));
  out.push_back(check("{R-,T+}=S+", acomm(rm, tp), sp, tol));
  out.push_back(check("{R+,T-}=S-", acomm(rp, tm), sm, tol));
  out.push_back(check("{R-,T-}=0", acomm(rm, tm), zero, tol));
  // Cartan
  out.push_back(check("[A,Sz]=0", comm(a, sz), zero, tol));
  // Weyl-Cartan
  out.push_back(check("[S+,Sz]=-S+", comm(sp, sz), -sp, tol));
  out.push_back(check("[S+,A]=0", comm(sp, a), zero, tol));
  out.push_back(check("[S-,Sz]=S-", comm(sm, sz), sm, tol));
  out.push_back(check("[S-,A]=0", comm(sm, a), zero, tol));
  out.push_back(check("[R+,Sz]=R+/2", comm(rp, sz), 0.5 * rp, tol));
  out.push_back(check("[R+,A]=-R+/2", comm(rp, a), -0.5 * rp, tol));
  out.push_back(check("[R-,Sz]=-R-/2", comm(rm, sz), -0.5 * rm, tol));
  out.push_back(check("[R-,A]=R-/2", comm(rm, a), 0.5 * rm, tol));
  out.push_back(check("[T+,Sz]=-T+/2", comm(tp, sz), -0.5 * tp, tol));
  out.push_back(check("[T+,A]=-T+/2", comm(tp, a), -0.5 * tp, tol));
  out.push_back(check("[T-,Sz]=T-/2", comm(tm, sz), 0.5 * tm, tol));
  out.push_back(check("[T-,A]=T-/2", comm(tm, a), 0.5 * tm, tol));
  return out;
}

inline bool all_passed(const std::vector<RelationReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed) return false;
  return true;
}

}  // namespace dyson
