// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "cremona/class_lattice.hpp"
#include "cremona/diagram.hpp"
#include "cremona/matrix.hpp"
#include "cremona/polynomial.hpp"

namespace cremona {

// a + b*sqrt(d), d a positive non-square integer; just enough to compare
// closed-form spectral values against rational enclosures exactly
struct QuadExt {
  mpq_class a, b;
  unsigned long d = 2;

  // sign of (a + b*sqrt(d)) - r, computed without floating point
  int compare(const mpq_class& r) const;
  bool inside(const RatInterval& iv) const {
    return compare(iv.lo) > 0 && compare(iv.hi) < 0;
  }
};

// Vertex pairing of a diagram with every vertex of self-intersection
// -lambda; off-diagonal entries are the signed adjacency.
struct GramLattice {
  RatMat gram;
  mpq_class lambda;
  std::string shape;
};

GramLattice gram_matrix(const Diagram& d, const mpq_class& lambda);

struct SignatureClass {
  enum class Kind { NegativeDefinite, Affine, Lorentzian, OtherDegenerate };
  Kind kind = Kind::OtherDegenerate;
  int radical_rank = 0;
  std::vector<std::vector<mpq_class>> radical;  // exact kernel basis
  int positives = 0, negatives = 0;

  std::string str() const;
};

// Exact inertia of the (rational) Gram form via the characteristic
// polynomial of a scaled integer matrix: zero eigenvalues from trailing
// coefficients, positive count by Descartes' rule (exact here, since a
// symmetric matrix has only real eigenvalues).
SignatureClass classify_signature(const GramLattice& g);

// char poly of the adjacency matrix of the tree with three arms of
// p-1, q-1, r-1 vertices around a central vertex, by the path recurrence
// A_k = x A_{k-1} - A_{k-2}
IntPoly tree_adjacency_charpoly(int p, int q, int r);

// Enclosure of the top adjacency eigenvalue of the (p,q,r) tree, the
// least lambda at which the Gram form degenerates.  Exactly [2,2] on the
// affine boundary 1/p+1/q+1/r = 1; otherwise bisection in (2, 2.1214]
// to width <= tol.  Requires 1/p+1/q+1/r <= 1.
RatInterval mu_threshold(int p, int q, int r, const mpq_class& tol);

// S*A on the full lattice: A = [[I,0],[C,-I]], S = [[-I,C^T],[0,I]] in
// the sigma/alpha block basis of the adjacency data.
IntMat coxeter_element(const AdjacencyData& adj);

// least k <= cap with m^k = 1
std::optional<long> order_if_finite(const IntMat& m, long cap = 10000);

struct RadiusResult {
  RatInterval value{1, 1};
  bool elliptic = false;  // no real eigenvalue > 1
  IntPoly char_poly;
};

// Largest real eigenvalue > 1, certified by exact root counting on the
// characteristic polynomial.
RadiusResult spectral_radius(const IntMat& m, const mpq_class& tol);

struct SalemCertificate {
  IntPoly salem_factor;  // squarefree non-cyclotomic part
  bool reciprocal = true;
  int roots_outside_disc = 1;
  RatInterval root;
  bool quadratic_unit = false;  // no conjugates on the circle (degenerate)
};

struct SalemFailure {
  std::string reason;
};

// Certifies that p is (up to cyclotomic factors) the minimal polynomial
// of a Salem number: self-reciprocal, exactly one real root > 1, all
// remaining conjugates on the unit circle.  Circle roots are counted
// exactly through the trace substitution y = x + 1/x on [-2,2].
std::optional<SalemCertificate> salem_certify(const IntPoly& p, const mpq_class& tol,
                                              SalemFailure* failure = nullptr);

struct MpResult {
  RatInterval m{1, 1};
  bool boundary = false;  // p <= 3: the affine edge, m = 1
  IntPoly poly;           // (m^{p+1} - 2 m^p + 2 m - 1)/(m - 1)
};

// The unique root in (1,2) of m^{p+1} - 2m^p + 2m - 1 away from m=1.
MpResult solve_mp(int p, const mpq_class& tol);

// Double interval with outward rounding at the boundary operations.
struct DInterval {
  double lo = 0, hi = 0;
  double width() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
};

struct LengthFromMu {
  DInterval length;   // log m = 2 arccosh(mu/2)
  RatInterval m;      // mu^2 = m + 1/m + 2
};

LengthFromMu length_from_mu(const RatInterval& mu);

// log of a rational interval, padded outward
DInterval log_interval(const RatInterval& v);

struct POfEpsilon {
  int formula_p = 0;  // ceil(log(3/eps) / log(2-eps))
  int least_p = 0;    // least p with log 2 - eps < log m_p
};

POfEpsilon p_of_epsilon(const mpq_class& eps);

struct LengthReport {
  enum class Type { Elliptic, Parabolic, Hyperbolic, Unclassified };
  Type type = Type::Unclassified;
  std::optional<long> order;
  DInterval length{0, 0};
  RatInterval mu_enclosure{0, 0};
  RatInterval m_enclosure{1, 1};
  std::optional<IntPoly> char_poly;
  std::optional<SalemCertificate> salem;
  bool truncated = false;  // some arm known only as a lower bound
  std::string note;

  std::string to_json() const;
  std::string str() const;
};

// Isometry type and certified translation-length bounds from the
// diagram.  Exact trees are classified by the sign of 1/p+1/q+1/r - 1,
// with exact spectra; lower-bound arms give Hyperbolic with
// [log m(mu), log 2]; a cycle of length 2n with arm r falls back to the
// T_{n,n,r} subdiagram obtained by deleting the vertex opposite v0, or
// to the exact signed Coxeter element when all data is exact.
LengthReport classify_and_report(const Diagram& d, const mpq_class& tol);

// Fallback for terminated orbit data whose diagram is degenerate: works
// directly on the exact action of g on the class lattice.
LengthReport classify_from_lattice(const ClassLattice& lat, const mpq_class& tol);

}  // namespace cremona
