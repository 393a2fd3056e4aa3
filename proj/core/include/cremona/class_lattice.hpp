// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "cremona/matrix.hpp"
#include "cremona/orbit.hpp"

namespace cremona {

// Finite-rank model of the Picard-Manin lattice over the distinct orbit
// points: basis ell, e_x (one per point), Gram diag(1, -1, ..., -1).
// sigma acts as the reflection in v0 = ell - e_P - e_Q - e_R on the first
// four basis vectors and permutes the remaining exceptional classes;
// alpha fixes ell and permutes all exceptional classes.
class ClassLattice {
 public:
  int rank() const { return 1 + static_cast<int>(points_.size()); }
  const std::vector<ProjectivePoint>& points() const { return points_; }
  const IntMat& sigma_action() const { return sigma_; }
  const IntMat& alpha_action() const { return alpha_; }
  IntMat g_action() const { return sigma_ * alpha_; }

  // Gram form: (ell.ell)=1, (e_x.e_x)=-1, mixed pairings 0.
  mpq_class inner_product(const std::vector<mpq_class>& u,
                          const std::vector<mpq_class>& v) const;

  // basis index of e_x; 0 is ell
  int index_of(const ProjectivePoint& x) const;
  // v0 = ell - e_P - e_Q - e_R as a coefficient vector
  std::vector<mpq_class> v0() const;

  friend ClassLattice build_class_lattice(const OrbitResult& orbits);

 private:
  std::vector<ProjectivePoint> points_;
  IntMat sigma_, alpha_;
};

// Requires all three traces terminated by Coincidence or Collision.
// Verifies that both actions preserve the Gram form and square to the
// identity; failures throw (they indicate a bug, not bad input).
ClassLattice build_class_lattice(const OrbitResult& orbits);

// The bipartite signed graph G of difference vectors.
struct SignedGraph {
  struct Vertex {
    std::vector<mpz_class> vec;  // lattice coordinates
    bool sigma_side = false;
    std::string label;
  };
  struct Edge {
    int a, b;
    int weight;  // +-1
  };
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  int v0_index = -1;

  int valency(int v) const;
  std::vector<int> component_of_v0() const;
  // lengths of all simple cycles (the graph has max valency 3 at v0, 2
  // elsewhere, so cycles are disjoint)
  std::vector<int> cycle_lengths() const;
};

// Direct construction from the lattice actions: vertices v0,
// +-(e_x - sigma e_x), +-(e_y - alpha e_y); vertices on both sides are
// deleted; edges carry exact intersection numbers.  Valency bounds
// (v0 <= 3, others <= 2) and the absence of intra-side edges are
// asserted.
SignedGraph build_graph_direct(const ClassLattice& lat);

}  // namespace cremona
