// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "cremona/matrix.hpp"

namespace cremona {

// Block data for an isometry that fixes a primitive isotropic vector v0:
// with respect to the filtration 0 < Zv0 < v0perp < Lambda, the ambient
// pairing is [[0,0,1],[0,Q',0],[1,0,0]] and the isometry takes the form
//   [[1, -zeta^T Q' ftilde, -|zeta|^2/2],
//    [0,  ftilde,            zeta      ],
//    [0,  0,                 1         ]]
// where Q' is the pairing on v0perp/Zv0, ftilde is Q'-orthogonal and
// zeta is a class in v0perp/Zv0.
struct ParabolicSpec {
  RatMat qprime;                // k x k, the quotient pairing
  RatMat ftilde;                // k x k
  std::vector<mpq_class> zeta;  // length k
  std::vector<mpq_class> x;     // length k+2: [a, y, z], z = (x.v0)
};

struct ParabolicReport {
  bool isometry_ok = false;       // f^T G f = G exactly
  bool on_hyperboloid = false;    // (x.x) = 1 and z > 0
  mpq_class product_direct;       // (f(x).x) by matrix evaluation
  mpq_class product_identity;     // 1 - |z zeta - y + ftilde y|^2 / 2
  bool identity_ok = false;       // the two agree exactly
  mpq_class z;
  // certified min over the lattice of |(ftilde - 1)q + zeta|^2 in the
  // positive form -Q'; absent when certification is out of reach
  std::optional<mpq_class> min_displacement_sq;
  // certified only for pure translations (ftilde = 1), where the lattice
  // minimum bounds the displacement of every horosphere point
  bool displacement_ge_one = false;
  bool bound_ok = false;  // (f(x).x) >= 1 + z^2/2
};

// ambient pairing [[0,0,1],[0,Q',0],[1,0,0]]
RatMat ambient_gram(const RatMat& qprime);

// the (k+2) x (k+2) block matrix of the spec
RatMat assemble_block(const ParabolicSpec& spec);

// Certified minimum of the translation displacement of q -> ftilde q +
// zeta on the integer lattice, in the norm of -Q' (assumed positive
// definite).  Requires integral ftilde and zeta; ftilde - 1 must be zero
// or invertible for the tail bound.
std::optional<mpq_class> min_displacement_squared(const RatMat& qprime,
                                                  const RatMat& ftilde,
                                                  const std::vector<mpq_class>& zeta);

// Checks the whole package: isometry, hyperboloid membership, the exact
// agreement of (f(x).x) with its closed form, and the horoball bound
// (f(x).x) >= 1 + z^2/2 under certified displacement >= 1.
ParabolicReport parabolic_form_check(const ParabolicSpec& spec);

}  // namespace cremona
