// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cremona/projective.hpp"

namespace cremona {

// sigma : (x:y:z) -> (yz:xz:xy), undefined at the base points P, Q, R.
class sigma_undefined : public std::domain_error {
 public:
  sigma_undefined() : std::domain_error("sigma is undefined at a base point") {}
};

ProjectivePoint sigma_apply(const ProjectivePoint& x);

enum class Seed : int { P = 0, Q = 1, R = 2 };
std::string seed_name(Seed s);

enum class OrbitEventKind {
  Coincidence,       // point equals its immediate predecessor
  Collision,         // point equals an earlier point of some seed orbit
  TriangleViolation, // point lies on xyz = 0 but is not P, Q or R
  BasePointHit,      // next map is sigma and the current point is a base point
  NoEventUpToBound,
};

struct OrbitEvent {
  OrbitEventKind kind = OrbitEventKind::NoEventUpToBound;
  int step = 0;
  // collision partner, when kind == Collision
  Seed other_seed = Seed::P;
  int other_step = 0;
};

struct OrbitTrace {
  Seed seed = Seed::P;
  std::vector<ProjectivePoint> points;  // points[n] = w_n(seed), while defined
  OrbitEvent event;
};

// Per-seed arm information derived from the terminating event.
struct ArmInfo {
  enum class Kind { Exact, AtLeast, Indeterminate, Collided } kind = Kind::AtLeast;
  int value = 0;  // Exact(m), AtLeast(N), or the event step otherwise
  std::string reason;

  bool is_exact() const { return kind == Kind::Exact; }
};

struct CollisionRecord {
  Seed seed_a;
  int step_a;
  Seed seed_b;
  int step_b;
};

struct OrbitProfile {
  ArmInfo arms[3];
  std::vector<CollisionRecord> collisions;

  bool all_exact() const {
    return arms[0].is_exact() && arms[1].is_exact() && arms[2].is_exact();
  }
  bool has_indeterminate() const;
  std::string str() const;
};

struct OrbitResult {
  OrbitTrace traces[3];
  OrbitProfile profile;
};

// Traces P, Q, R under the alternating words w_n (w_1 = alpha, w_2 =
// sigma alpha) until each seed's first event or the bound.  The three
// seeds advance in lockstep, and collision detection compares against all
// points emitted earlier in (step, seed) order.  Event precedence at a
// tied step: Coincidence > Collision > TriangleViolation > BasePointHit.
OrbitResult trace_orbits(const ProjectiveLinearMap& alpha, int bound);

}  // namespace cremona
