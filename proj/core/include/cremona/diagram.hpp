// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string>

#include "cremona/class_lattice.hpp"
#include "cremona/matrix.hpp"
#include "cremona/orbit.hpp"

namespace cremona {

// Arm parameter in the T_{p,q,r} convention: an exact arm p contributes
// p-1 vertices beyond v0.
struct ArmLength {
  bool exact = true;
  int value = 1;

  bool operator==(const ArmLength&) const = default;
};

// The Coxeter-Dynkin diagram attached to an orbit profile: a tree
// T_{p,q,r}, or an even cycle through v0 with one arm and a single -1
// edge at v0, or an explicitly unclassified shape.
struct Diagram {
  enum class Shape { Tree, CycleWithArm, Unclassified };
  Shape shape = Shape::Unclassified;
  std::array<ArmLength, 3> arms{};  // Tree
  int cycle_length = 0;             // CycleWithArm: 2n vertices on the cycle
  ArmLength cycle_arm{true, 1};     // CycleWithArm: arm in tree convention
  bool subdiagram_only = false;     // any arm known only as a lower bound
  std::string note;

  int vertex_count() const;
  std::string str() const;
  std::string to_json() const;
};

// Signed bipartite adjacency in block form [[0, tC], [C, 0]]; sigma-side
// vertices first, v0 at index 0.
struct AdjacencyData {
  IntMat matrix;
  int sigma_count = 0;  // vertices 0..sigma_count-1 are the sigma side
  std::vector<std::string> labels;
};

// Profile-based builder.  Exact arms map to exact arms, AtLeast(N) arms
// to lower bounds, Indeterminate(m) arms to AtLeast(m-1).  A single
// cross-seed identification P_a = Q_b yields a cycle of a+b+1 vertices
// through v0 (the tracer reports the identification once or twice, with
// the step sum invariant); anything else is Unclassified.  An even step
// sum contradicts the even-cycle property and throws.
Diagram build_diagram(const OrbitProfile& profile);

// Materializes AtLeast arms at their bound (a documented truncation).
AdjacencyData adjacency(const Diagram& d);

// Ground-truth comparison: classify build_graph_direct(lat) via the sign
// normalization walk from v0 and compare shapes (arms as multisets).
bool cross_validate(const Diagram& d, const ClassLattice& lat);

// Shape of the v0 component of the direct graph, with exact arm data.
// Returns Unclassified for shapes outside tree / cycle-with-arm.
Diagram classify_direct_graph(const SignedGraph& g);

}  // namespace cremona
