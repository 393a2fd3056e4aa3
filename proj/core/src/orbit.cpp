// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

#include "cremona/orbit.hpp"

#include <unordered_map>

namespace cremona {

ProjectivePoint sigma_apply(const ProjectivePoint& x) {
  if (is_base_point(x)) throw sigma_undefined();
  return ProjectivePoint(x[1] * x[2], x[0] * x[2], x[0] * x[1]);
}

std::string seed_name(Seed s) {
  switch (s) {
    case Seed::P: return "P";
    case Seed::Q: return "Q";
    case Seed::R: return "R";
  }
  return "?";
}

bool OrbitProfile::has_indeterminate() const {
  for (const auto& a : arms)
    if (a.kind == ArmInfo::Kind::Indeterminate) return true;
  return false;
}

std::string OrbitProfile::str() const {
  std::string s;
  for (int i = 0; i < 3; ++i) {
    const ArmInfo& a = arms[i];
    s += seed_name(static_cast<Seed>(i)) + ":";
    switch (a.kind) {
      case ArmInfo::Kind::Exact: s += "Exact(" + std::to_string(a.value) + ")"; break;
      case ArmInfo::Kind::AtLeast: s += "AtLeast(" + std::to_string(a.value) + ")"; break;
      case ArmInfo::Kind::Indeterminate:
        s += "Indeterminate(" + std::to_string(a.value) + "," + a.reason + ")";
        break;
      case ArmInfo::Kind::Collided: s += "Collided(" + std::to_string(a.value) + ")"; break;
    }
    if (i < 2) s += " ";
  }
  for (const auto& c : collisions)
    s += " " + seed_name(c.seed_a) + std::to_string(c.step_a) + "=" +
         seed_name(c.seed_b) + std::to_string(c.step_b);
  return s;
}

OrbitResult trace_orbits(const ProjectiveLinearMap& alpha, int bound) {
  if (!alpha.is_projective_involution() && !alpha.is_projective_identity())
    throw std::invalid_argument("alpha is not a projective involution");
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");

  const Field& f = alpha.field();
  OrbitResult res;
  struct Loc {
    Seed seed;
    int step;
  };
  std::unordered_map<ProjectivePoint, Loc, ProjectivePointHash> seen;

  for (int s = 0; s < 3; ++s) {
    res.traces[s].seed = static_cast<Seed>(s);
  }
  res.traces[0].points.push_back(base_point_P(f));
  res.traces[1].points.push_back(base_point_Q(f));
  res.traces[2].points.push_back(base_point_R(f));
  for (int s = 0; s < 3; ++s)
    seen.emplace(res.traces[s].points[0], Loc{static_cast<Seed>(s), 0});

  bool active[3] = {true, true, true};

  for (int n = 1; n <= bound; ++n) {
    const bool apply_alpha = (n - 1) % 2 == 0;  // w_1 = alpha, w_2 = sigma alpha
    for (int s = 0; s < 3; ++s) {
      if (!active[s]) continue;
      OrbitTrace& tr = res.traces[s];
      const ProjectivePoint& prev = tr.points.back();
      if (!apply_alpha && is_base_point(prev)) {
        tr.event = {OrbitEventKind::BasePointHit, n};
        active[s] = false;
        continue;
      }
      ProjectivePoint x = apply_alpha ? apply_map(alpha, prev) : sigma_apply(prev);
      if (x == prev) {
        tr.event = {OrbitEventKind::Coincidence, n};
        active[s] = false;
        continue;
      }
      auto it = seen.find(x);
      if (it != seen.end()) {
        tr.event = {OrbitEventKind::Collision, n, it->second.seed, it->second.step};
        active[s] = false;
        continue;
      }
      if (x.on_triangle() && !is_base_point(x)) {
        tr.points.push_back(x);
        tr.event = {OrbitEventKind::TriangleViolation, n};
        active[s] = false;
        continue;
      }
      tr.points.push_back(x);
      seen.emplace(x, Loc{static_cast<Seed>(s), n});
    }
    if (!active[0] && !active[1] && !active[2]) break;
  }

  for (int s = 0; s < 3; ++s) {
    OrbitTrace& tr = res.traces[s];
    ArmInfo& arm = res.profile.arms[s];
    if (active[s]) {
      tr.event = {OrbitEventKind::NoEventUpToBound, bound};
      arm = {ArmInfo::Kind::AtLeast, bound, ""};
      continue;
    }
    switch (tr.event.kind) {
      case OrbitEventKind::Coincidence:
        arm = {ArmInfo::Kind::Exact, tr.event.step, ""};
        break;
      case OrbitEventKind::Collision:
        arm = {ArmInfo::Kind::Collided, tr.event.step, ""};
        res.profile.collisions.push_back({tr.seed, tr.event.step, tr.event.other_seed,
                                          tr.event.other_step});
        break;
      case OrbitEventKind::TriangleViolation:
        arm = {ArmInfo::Kind::Indeterminate, tr.event.step, "triangle"};
        break;
      case OrbitEventKind::BasePointHit:
        arm = {ArmInfo::Kind::Indeterminate, tr.event.step, "base-point"};
        break;
      case OrbitEventKind::NoEventUpToBound:
        arm = {ArmInfo::Kind::AtLeast, bound, ""};
        break;
    }
  }
  return res;
}

}  // namespace cremona
