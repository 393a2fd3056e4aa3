// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

#include "cremona/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cremona {

int Diagram::vertex_count() const {
  switch (shape) {
    case Shape::Tree:
      return 1 + (arms[0].value - 1) + (arms[1].value - 1) + (arms[2].value - 1);
    case Shape::CycleWithArm:
      return cycle_length + (cycle_arm.value - 1);
    case Shape::Unclassified:
      return 0;
  }
  return 0;
}

static std::string arm_str(const ArmLength& a) {
  return (a.exact ? "" : ">=") + std::to_string(a.value);
}

std::string Diagram::str() const {
  std::ostringstream os;
  switch (shape) {
    case Shape::Tree:
      os << "Tree(" << arm_str(arms[0]) << "," << arm_str(arms[1]) << ","
         << arm_str(arms[2]) << ")";
      break;
    case Shape::CycleWithArm:
      os << "CycleWithArm(cycle=" << cycle_length << ",arm=" << arm_str(cycle_arm)
         << ")";
      break;
    case Shape::Unclassified:
      os << "Unclassified";
      if (!note.empty()) os << "(" << note << ")";
      return os.str();
  }
  if (subdiagram_only) os << "[subdiagram]";
  return os.str();
}

static std::string arm_json(const ArmLength& a) {
  return std::string("{\"exact\":") + (a.exact ? "true" : "false") +
         ",\"value\":" + std::to_string(a.value) + "}";
}

std::string Diagram::to_json() const {
  std::ostringstream os;
  os << "{\"shape\":\"";
  switch (shape) {
    case Shape::Tree:
      os << "tree\",\"arms\":[" << arm_json(arms[0]) << "," << arm_json(arms[1])
         << "," << arm_json(arms[2]) << "],\"cycle\":0,\"signs\":[]";
      break;
    case Shape::CycleWithArm:
      os << "cycle_arm\",\"arms\":[" << arm_json(cycle_arm) << "],\"cycle\":"
         << cycle_length << ",\"signs\":[-1]";
      break;
    case Shape::Unclassified:
      os << "unclassified\",\"arms\":[],\"cycle\":0,\"signs\":[]";
      break;
  }
  os << ",\"subdiagram_only\":" << (subdiagram_only ? "true" : "false") << "}";
  return os.str();
}

Diagram build_diagram(const OrbitProfile& profile) {
  Diagram d;
  auto arm_of = [](const ArmInfo& a) -> std::optional<ArmLength> {
    switch (a.kind) {
      case ArmInfo::Kind::Exact:
        return ArmLength{true, a.value};
      case ArmInfo::Kind::AtLeast:
        return ArmLength{false, a.value};
      case ArmInfo::Kind::Indeterminate:
        // the step before the obstruction is still certified
        return ArmLength{false, std::max(1, a.value - 1)};
      case ArmInfo::Kind::Collided:
        return std::nullopt;
    }
    return std::nullopt;
  };

  if (profile.collisions.empty()) {
    for (int i = 0; i < 3; ++i) {
      auto a = arm_of(profile.arms[i]);
      if (!a) {
        d.note = "collided arm without a collision record";
        return d;
      }
      d.arms[i] = *a;
      if (!a->exact) d.subdiagram_only = true;
    }
    d.shape = Diagram::Shape::Tree;
    return d;
  }

  // A cross-seed identification P_a = Q_b is reported once by the seed
  // that reaches it and once more when the partner orbit folds back onto
  // the identified chain; both records name the same seed pair and the
  // same step sum.  Anything else stays unclassified.
  std::set<int> seeds;
  std::set<int> sums;
  for (const auto& c : profile.collisions) {
    if (c.seed_a == c.seed_b) {
      d.note = "same-seed collision";
      return d;
    }
    seeds.insert(static_cast<int>(c.seed_a));
    seeds.insert(static_cast<int>(c.seed_b));
    sums.insert(c.step_a + c.step_b);
  }
  if (seeds.size() != 2 || sums.size() != 1) {
    d.note = "multiple distinct identifications";
    return d;
  }
  int sum = *sums.begin();
  if (sum % 2 == 0)
    throw std::logic_error(
        "collision step sum is even: odd cycle in the difference graph");
  if (sum < 3) {
    // alpha identifies two base points outright; there is no honest
    // cycle of difference vectors to draw
    d.note = "degenerate identification at the base points";
    return d;
  }
  int third = 3 - static_cast<int>(*seeds.begin()) - static_cast<int>(*seeds.rbegin());
  auto a = arm_of(profile.arms[third]);
  if (!a) {
    d.note = "all three seeds collided";
    return d;
  }
  d.shape = Diagram::Shape::CycleWithArm;
  d.cycle_length = sum + 1;  // v0 plus one vertex per step on either chain
  d.cycle_arm = *a;
  d.subdiagram_only = !a->exact;
  return d;
}

AdjacencyData adjacency(const Diagram& d) {
  if (d.shape == Diagram::Shape::Unclassified)
    throw std::invalid_argument("cannot build adjacency of an unclassified diagram");

  struct V {
    bool sigma_side;
    std::string label;
  };
  std::vector<V> verts{{true, "v0"}};
  std::vector<std::tuple<int, int, int>> edges;  // (a, b, weight)

  // chain of n vertices hanging off `from` (whose side is `from_side`),
  // alternating sides; returns the last vertex index (or `from` if n=0)
  auto chain = [&](int from, bool from_side, int n, const std::string& tag) {
    int prev = from;
    bool side = from_side;
    for (int k = 1; k <= n; ++k) {
      side = !side;
      verts.push_back({side, tag + std::to_string(k)});
      int id = static_cast<int>(verts.size()) - 1;
      edges.emplace_back(prev, id, 1);
      prev = id;
    }
    return prev;
  };

  if (d.shape == Diagram::Shape::Tree) {
    const char* tags[3] = {"p", "q", "r"};
    for (int i = 0; i < 3; ++i) chain(0, true, d.arms[i].value - 1, tags[i]);
  } else {
    if (d.cycle_length % 2 != 0 || d.cycle_length < 2)
      throw std::invalid_argument("cycle length must be even and positive");
    int last = chain(0, true, d.cycle_length - 1, "c");
    edges.emplace_back(last, 0, -1);  // the single minus edge, at v0
    chain(0, true, d.cycle_arm.value - 1, "a");
  }

  // sigma side first, v0 at index 0
  std::vector<int> order;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i)
    if (verts[i].sigma_side) order.push_back(i);
  int sigma_count = static_cast<int>(order.size());
  for (int i = 0; i < static_cast<int>(verts.size()); ++i)
    if (!verts[i].sigma_side) order.push_back(i);
  std::vector<int> pos(verts.size());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;

  AdjacencyData out;
  out.sigma_count = sigma_count;
  out.matrix = IntMat(static_cast<int>(verts.size()));
  for (int i : order) out.labels.push_back(verts[i].label);
  for (auto& [a, b, w] : edges) {
    out.matrix.at(pos[a], pos[b]) = w;
    out.matrix.at(pos[b], pos[a]) = w;
  }
  return out;
}

Diagram classify_direct_graph(const SignedGraph& g) {
  Diagram d;
  std::vector<int> comp = g.component_of_v0();
  if (comp.empty()) {
    d.note = "empty graph";
    return d;
  }
  std::set<int> in_comp(comp.begin(), comp.end());
  int n = static_cast<int>(g.vertices.size());
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (other, weight)
  for (const auto& e : g.edges) {
    if (!in_comp.count(e.a)) continue;
    adj[e.a].emplace_back(e.b, e.weight);
    adj[e.b].emplace_back(e.a, e.weight);
  }

  // Sign normalization: flip vertex signs along a spanning tree from v0
  // so tree edges become +1; leftover edges close cycles.
  std::vector<int> sign(n, 0), parent(n, -1);
  sign[g.v0_index] = 1;
  std::vector<int> stack{g.v0_index};
  std::vector<std::tuple<int, int, int>> closures;  // (a, b, normalized sign)
  std::set<std::pair<int, int>> closure_seen;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, wt] : adj[v]) {
      if (sign[w] == 0) {
        sign[w] = sign[v] * wt;
        parent[w] = v;
        stack.push_back(w);
      } else if (w != parent[v]) {
        auto key = std::minmax(v, w);
        if (closure_seen.insert({key.first, key.second}).second)
          closures.emplace_back(v, w, sign[v] * sign[w] * wt);
      }
    }
  }

  if (closures.size() > 1) {
    d.note = "more than one independent cycle";
    return d;
  }

  // walk an arm away from v0, starting through `first`; returns number
  // of vertices on it, or -1 on a branch vertex
  auto walk_arm = [&](int first) {
    int prev = g.v0_index, v = first, count = 0;
    while (true) {
      ++count;
      int next = -1, deg = 0;
      for (auto [w, wt] : adj[v]) {
        (void)wt;
        if (w == prev) continue;
        ++deg;
        next = w;
      }
      if (deg == 0) return count;
      if (deg > 1) return -1;
      prev = v;
      v = next;
    }
  };

  if (closures.empty()) {
    // tree: arms are the paths leaving v0
    std::vector<int> arm_sizes;
    for (auto [w, wt] : adj[g.v0_index]) {
      (void)wt;
      int m = walk_arm(w);
      if (m < 0) {
        d.note = "branch vertex away from v0";
        return d;
      }
      arm_sizes.push_back(m);
    }
    if (arm_sizes.size() > 3) {
      d.note = "v0 valency exceeds 3";
      return d;
    }
    while (arm_sizes.size() < 3) arm_sizes.push_back(0);
    std::sort(arm_sizes.rbegin(), arm_sizes.rend());
    d.shape = Diagram::Shape::Tree;
    for (int i = 0; i < 3; ++i) d.arms[i] = {true, arm_sizes[i] + 1};
    return d;
  }

  // one cycle: it must pass through v0 and carry normalized sign -1
  auto [ca, cb, csign] = closures[0];
  if (csign != -1) {
    d.note = "plus cycle";
    return d;
  }
  std::vector<int> lens = g.cycle_lengths();
  if (lens.size() != 1) {
    d.note = "unexpected cycle structure";
    return d;
  }
  // cycle vertices: both closure endpoints' tree paths up to their
  // lowest common ancestor
  std::vector<int> pa, pb;
  for (int v = ca; v != -1; v = parent[v]) pa.push_back(v);
  for (int v = cb; v != -1; v = parent[v]) pb.push_back(v);
  std::set<int> in_pa(pa.begin(), pa.end());
  int lca = -1;
  for (int v : pb)
    if (in_pa.count(v)) {
      lca = v;
      break;
    }
  std::set<int> on_cycle;
  for (int v : pa) {
    on_cycle.insert(v);
    if (v == lca) break;
  }
  for (int v : pb) {
    on_cycle.insert(v);
    if (v == lca) break;
  }
  if (!on_cycle.count(g.v0_index)) {
    d.note = "cycle avoids v0";
    return d;
  }
  // arm = the neighbor of v0 not on the cycle
  int arm_len = 0;
  for (auto [w, wt] : adj[g.v0_index]) {
    (void)wt;
    if (on_cycle.count(w)) continue;
    int m = walk_arm(w);
    if (m < 0 || arm_len > 0) {
      d.note = "unexpected arm structure";
      return d;
    }
    arm_len = m;
  }
  d.shape = Diagram::Shape::CycleWithArm;
  d.cycle_length = lens[0];
  d.cycle_arm = {true, arm_len + 1};
  return d;
}

bool cross_validate(const Diagram& d, const ClassLattice& lat) {
  Diagram ref = classify_direct_graph(build_graph_direct(lat));
  if (d.shape != ref.shape) return false;
  switch (d.shape) {
    case Diagram::Shape::Tree: {
      std::vector<int> a, b;
      for (int i = 0; i < 3; ++i) {
        if (!d.arms[i].exact || !ref.arms[i].exact) return false;
        a.push_back(d.arms[i].value);
        b.push_back(ref.arms[i].value);
      }
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      return a == b;
    }
    case Diagram::Shape::CycleWithArm:
      return d.cycle_length == ref.cycle_length && d.cycle_arm.exact &&
             ref.cycle_arm.exact && d.cycle_arm.value == ref.cycle_arm.value;
    case Diagram::Shape::Unclassified:
      return false;
  }
  return false;
}

}  // namespace cremona
