// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "cremona/field.hpp"

namespace cremona {

// A point of P^2 in canonical form: the first nonzero coordinate equals 1.
// Equality of points is equality of representations, so points can live in
// hash sets during orbit tracing.
class ProjectivePoint {
 public:
  ProjectivePoint(Scalar x, Scalar y, Scalar z);

  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  const Field& field() const { return c_[0].field(); }

  bool operator==(const ProjectivePoint& o) const { return c_ == o.c_; }
  bool operator!=(const ProjectivePoint& o) const { return !(*this == o); }

  // lies on the fundamental triangle xyz = 0
  bool on_triangle() const;

  std::string str() const;
  std::size_t hash() const;

 private:
  std::array<Scalar, 3> c_;
};

struct ProjectivePointHash {
  std::size_t operator()(const ProjectivePoint& p) const { return p.hash(); }
};

// A 3x3 invertible matrix up to scale.  Canonical scaling (first nonzero
// entry = 1) is applied at construction, so equality of maps is equality
// of representations.
class ProjectiveLinearMap {
 public:
  explicit ProjectiveLinearMap(std::array<std::array<Scalar, 3>, 3> m);

  static ProjectiveLinearMap identity(const Field& f);

  const Scalar& at(std::size_t i, std::size_t j) const { return m_[i][j]; }
  const Field& field() const { return m_[0][0].field(); }

  ProjectiveLinearMap compose(const ProjectiveLinearMap& o) const;

  bool operator==(const ProjectiveLinearMap& o) const { return m_ == o.m_; }

  // true iff m^2 is scalar and m itself is not scalar
  bool is_projective_involution() const;
  bool is_projective_identity() const;

  // row i of the matrix as a linear form's coefficients
  std::array<Scalar, 3> row(std::size_t i) const { return m_[i]; }

  std::string str() const;

 private:
  std::array<std::array<Scalar, 3>, 3> m_;
};

ProjectivePoint apply_map(const ProjectiveLinearMap& m, const ProjectivePoint& x);

// base points of the standard quadratic involution
ProjectivePoint base_point_P(const Field& f);
ProjectivePoint base_point_Q(const Field& f);
ProjectivePoint base_point_R(const Field& f);
bool is_base_point(const ProjectivePoint& x);

}  // namespace cremona
