// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cremona/projective.hpp"

namespace cremona {

// Homogeneous trivariate polynomial over an exact field; the monomial
// x^i y^j z^{deg-i-j} is keyed by (i, j).
class TriPoly {
 public:
  TriPoly(const Field& f, int deg) : field_(f), deg_(deg) {}
  static TriPoly monomial(const Field& f, int i, int j, int k);

  const Field& field() const { return field_; }
  int degree() const { return deg_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<int, int>, Scalar>& terms() const { return terms_; }

  void add_term(int i, int j, const Scalar& c);
  Scalar coeff(int i, int j) const;

  TriPoly operator+(const TriPoly& o) const;
  TriPoly operator*(const TriPoly& o) const;
  TriPoly scaled(const Scalar& c) const;

  bool operator==(const TriPoly& o) const;
  std::string str() const;

 private:
  Field field_;
  int deg_;
  std::map<std::pair<int, int>, Scalar> terms_;  // nonzero only
};

// gcd of homogeneous polynomials (monic-normalized content-free result):
// the z-power common factor is split off and the dehomogenized parts are
// reduced by a subresultant-style bivariate gcd over the field.
TriPoly tri_gcd(const TriPoly& a, const TriPoly& b);
TriPoly tri_divide_exact(const TriPoly& a, const TriPoly& b);

struct DegreeGrowth {
  std::vector<int> degrees;  // deg(g^n), n = 1..n_max
  std::vector<std::array<TriPoly, 3>> forms;
};

// Symbolic iteration of g = sigma of alpha: each composition step maps the
// reduced triple (F1,F2,F3) to (M2 M3, M1 M3, M1 M2) with M_i the alpha-row
// combinations, then divides out the common gcd.  Capped at n_max <= 8.
DegreeGrowth degree_growth(const ProjectiveLinearMap& alpha, int n_max);

// (last degree)^(1/n): an uncertified growth-rate estimate used only as a
// cross-check against lattice-based spectral bounds.
double dynamical_degree_estimate(const std::vector<int>& degrees);

}  // namespace cremona
