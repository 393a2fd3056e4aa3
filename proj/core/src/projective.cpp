// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

#include "cremona/projective.hpp"

namespace cremona {

ProjectivePoint::ProjectivePoint(Scalar x, Scalar y, Scalar z)
    : c_{std::move(x), std::move(y), std::move(z)} {
  if (c_[0].field() != c_[1].field() || c_[0].field() != c_[2].field())
    throw field_mismatch();
  std::size_t lead = 3;
  for (std::size_t i = 0; i < 3; ++i)
    if (!c_[i].is_zero()) {
      lead = i;
      break;
    }
  if (lead == 3) throw std::invalid_argument("zero vector is not a projective point");
  Scalar inv = c_[lead].inverse();
  for (std::size_t i = 0; i < 3; ++i) c_[i] = c_[i] * inv;
}

bool ProjectivePoint::on_triangle() const {
  return c_[0].is_zero() || c_[1].is_zero() || c_[2].is_zero();
}

std::string ProjectivePoint::str() const {
  return "(" + c_[0].str() + ":" + c_[1].str() + ":" + c_[2].str() + ")";
}

std::size_t ProjectivePoint::hash() const {
  std::size_t h = 0;
  for (const auto& s : c_) h = h * 0x100000001b3ull ^ s.hash();
  return h;
}

ProjectiveLinearMap::ProjectiveLinearMap(std::array<std::array<Scalar, 3>, 3> m)
    : m_(std::move(m)) {
  const Field& f = m_[0][0].field();
  for (const auto& row : m_)
    for (const auto& s : row)
      if (s.field() != f) throw field_mismatch();
  // determinant must be nonzero
  Scalar det = m_[0][0] * (m_[1][1] * m_[2][2] - m_[1][2] * m_[2][1]) -
               m_[0][1] * (m_[1][0] * m_[2][2] - m_[1][2] * m_[2][0]) +
               m_[0][2] * (m_[1][0] * m_[2][1] - m_[1][1] * m_[2][0]);
  if (det.is_zero()) throw std::invalid_argument("singular projective map");
  // canonical scaling: first nonzero entry = 1
  Scalar lead = Scalar::zero(f);
  for (const auto& row : m_) {
    for (const auto& s : row)
      if (!s.is_zero()) {
        lead = s;
        break;
      }
    if (!lead.is_zero()) break;
  }
  Scalar inv = lead.inverse();
  for (auto& row : m_)
    for (auto& s : row) s = s * inv;
}

ProjectiveLinearMap ProjectiveLinearMap::identity(const Field& f) {
  auto o = Scalar::one(f);
  auto z = Scalar::zero(f);
  return ProjectiveLinearMap({{{o, z, z}, {z, o, z}, {z, z, o}}});
}

ProjectiveLinearMap ProjectiveLinearMap::compose(const ProjectiveLinearMap& o) const {
  if (field() != o.field()) throw field_mismatch();
  std::array<std::array<Scalar, 3>, 3> r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Scalar s = Scalar::zero(field());
      for (std::size_t k = 0; k < 3; ++k) s = s + m_[i][k] * o.m_[k][j];
      r[i][j] = s;
    }
  return ProjectiveLinearMap(r);
}

bool ProjectiveLinearMap::is_projective_involution() const {
  // scalar test for m itself
  auto is_scalar = [](const std::array<std::array<Scalar, 3>, 3>& m) {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        if (i != j && !m[i][j].is_zero()) return false;
        if (i == j && m[i][j] != m[0][0]) return false;
      }
    return true;
  };
  if (is_scalar(m_)) return false;
  ProjectiveLinearMap sq = compose(*this);
  return is_scalar(sq.m_);
}

bool ProjectiveLinearMap::is_projective_identity() const {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j && !m_[i][j].is_zero()) return false;
      if (i == j && m_[i][j] != m_[0][0]) return false;
    }
  return true;
}

std::string ProjectiveLinearMap::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < 3; ++i) {
    s += "[";
    for (std::size_t j = 0; j < 3; ++j) {
      s += m_[i][j].str();
      if (j < 2) s += ",";
    }
    s += i < 2 ? "]," : "]";
  }
  return s + "]";
}

ProjectivePoint apply_map(const ProjectiveLinearMap& m, const ProjectivePoint& x) {
  if (m.field() != x.field()) throw field_mismatch();
  std::array<Scalar, 3> y;
  for (std::size_t i = 0; i < 3; ++i) {
    Scalar s = Scalar::zero(m.field());
    for (std::size_t k = 0; k < 3; ++k) s = s + m.at(i, k) * x[k];
    y[i] = s;
  }
  return ProjectivePoint(y[0], y[1], y[2]);
}

ProjectivePoint base_point_P(const Field& f) {
  return ProjectivePoint(Scalar::one(f), Scalar::zero(f), Scalar::zero(f));
}
ProjectivePoint base_point_Q(const Field& f) {
  return ProjectivePoint(Scalar::zero(f), Scalar::one(f), Scalar::zero(f));
}
ProjectivePoint base_point_R(const Field& f) {
  return ProjectivePoint(Scalar::zero(f), Scalar::zero(f), Scalar::one(f));
}
bool is_base_point(const ProjectivePoint& x) {
  const Field& f = x.field();
  return x == base_point_P(f) || x == base_point_Q(f) || x == base_point_R(f);
}

}  // namespace cremona
