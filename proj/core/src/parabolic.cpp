// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

#include "cremona/parabolic.hpp"

#include <cmath>
#include <stdexcept>

#include "cremona/polynomial.hpp"

namespace cremona {

namespace {

using Vec = std::vector<mpq_class>;

Vec mat_vec(const RatMat& m, const Vec& v) {
  Vec r(m.dim(), 0);
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r[i] += m.at(i, j) * v[j];
  return r;
}

mpq_class dot(const Vec& a, const Vec& b) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// w^T Q' w
mpq_class qnorm(const RatMat& qprime, const Vec& w) { return dot(w, mat_vec(qprime, w)); }

bool integral(const mpq_class& v) { return v.get_den() == 1; }

}  // namespace

RatMat ambient_gram(const RatMat& qprime) {
  int k = qprime.dim();
  RatMat g(k + 2);
  g.at(0, k + 1) = 1;
  g.at(k + 1, 0) = 1;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) g.at(1 + i, 1 + j) = qprime.at(i, j);
  return g;
}

RatMat assemble_block(const ParabolicSpec& spec) {
  int k = spec.qprime.dim();
  if (spec.ftilde.dim() != k || static_cast<int>(spec.zeta.size()) != k)
    throw std::invalid_argument("block dimensions disagree");
  RatMat f(k + 2);
  f.at(0, 0) = 1;
  f.at(k + 1, k + 1) = 1;
  // -zeta^T Q' ftilde
  Vec qz = mat_vec(spec.qprime.transpose(), spec.zeta);
  for (int j = 0; j < k; ++j) {
    mpq_class s = 0;
    for (int i = 0; i < k; ++i) s += qz[i] * spec.ftilde.at(i, j);
    f.at(0, 1 + j) = -s;
  }
  f.at(0, k + 1) = -qnorm(spec.qprime, spec.zeta) / 2;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) f.at(1 + i, 1 + j) = spec.ftilde.at(i, j);
    f.at(1 + i, k + 1) = spec.zeta[i];
  }
  return f;
}

std::optional<mpq_class> min_displacement_squared(const RatMat& qprime,
                                                  const RatMat& ftilde,
                                                  const std::vector<mpq_class>& zeta) {
  int k = qprime.dim();
  for (int i = 0; i < k; ++i) {
    if (!integral(zeta[i])) return std::nullopt;
    for (int j = 0; j < k; ++j)
      if (!integral(ftilde.at(i, j))) return std::nullopt;
  }
  RatMat neg_q(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) neg_q.at(i, j) = -qprime.at(i, j);

  RatMat a(k);  // ftilde - 1
  bool a_zero = true;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      a.at(i, j) = ftilde.at(i, j) - (i == j ? 1 : 0);
      if (a.at(i, j) != 0) a_zero = false;
    }

  auto disp = [&](const Vec& q) {
    Vec w = mat_vec(a, q);
    for (int i = 0; i < k; ++i) w[i] += zeta[i];
    return qnorm(neg_q, w);
  };

  Vec origin(k, 0);
  mpq_class best = disp(origin);
  if (a_zero) return best;
  if (a.det() == 0) return std::nullopt;  // no tail bound in this case

  // Tail bound: |w|_{-Q'}^2 >= c |w|_2^2 with c = 1/(k max|(-Q')^{-1}|),
  // and |Aq|_2 >= |q|_inf / (k max|A^{-1}|).  Outside the box of radius B
  // the displacement exceeds the best value found at the origin.
  auto max_abs = [&](const RatMat& m) {
    mpq_class mx = 0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        mpq_class v = abs(m.at(i, j));
        if (v > mx) mx = v;
      }
    return mx;
  };
  mpq_class c = 1 / (k * max_abs(neg_q.inverse()));
  mpq_class ma = k * max_abs(a.inverse());
  mpq_class zn2 = 0;
  for (const auto& v : zeta) zn2 += v * v;
  mpq_class z_hi = sqrt_enclosure(zn2, mpq_class(1, 4)).hi;
  mpq_class best_over_c_hi = sqrt_enclosure(best / c, mpq_class(1, 4)).hi;
  // need B/ma - z_hi > sqrt(best/c)
  mpq_class b_rat = ma * (z_hi + best_over_c_hi + 1);
  long b = mpz_class(b_rat.get_num() / b_rat.get_den() + 1).get_si();
  if (b > 64) return std::nullopt;  // enumeration out of reach

  Vec q(k, -b);
  while (true) {
    mpq_class v = disp(q);
    if (v < best) best = v;
    int i = 0;
    while (i < k && q[i] == b) {
      q[i] = -b;
      ++i;
    }
    if (i == k) break;
    q[i] += 1;
  }
  return best;
}

ParabolicReport parabolic_form_check(const ParabolicSpec& spec) {
  int k = spec.qprime.dim();
  if (static_cast<int>(spec.x.size()) != k + 2)
    throw std::invalid_argument("x must have length k+2");
  if (spec.qprime.transpose() != spec.qprime)
    throw std::invalid_argument("Q' must be symmetric");

  ParabolicReport rep;
  RatMat g = ambient_gram(spec.qprime);
  RatMat f = assemble_block(spec);
  rep.isometry_ok = f.transpose() * g * f == g;

  rep.z = spec.x[k + 1];
  Vec gx = mat_vec(g, spec.x);
  rep.on_hyperboloid = dot(spec.x, gx) == 1 && rep.z > 0;

  rep.product_direct = dot(mat_vec(f, spec.x), gx);

  // 1 - |z zeta - y + ftilde y|^2 / 2 in the Q' norm
  Vec y(spec.x.begin() + 1, spec.x.begin() + 1 + k);
  Vec fy = mat_vec(spec.ftilde, y);
  Vec w(k);
  for (int i = 0; i < k; ++i) w[i] = rep.z * spec.zeta[i] - y[i] + fy[i];
  rep.product_identity = 1 - qnorm(spec.qprime, w) / 2;
  rep.identity_ok = rep.product_direct == rep.product_identity;

  rep.min_displacement_sq =
      min_displacement_squared(spec.qprime, spec.ftilde, spec.zeta);
  // The lattice minimum controls the displacement of every horosphere
  // point only for pure translations: a rotating ftilde has fixed
  // directions off the lattice, so the certificate is declined there.
  bool pure_translation = true;
  for (int i = 0; i < k && pure_translation; ++i)
    for (int j = 0; j < k; ++j)
      if (spec.ftilde.at(i, j) != (i == j ? 1 : 0)) {
        pure_translation = false;
        break;
      }
  rep.displacement_ge_one = pure_translation && rep.min_displacement_sq &&
                            *rep.min_displacement_sq >= 1;
  rep.bound_ok = rep.product_direct >= 1 + rep.z * rep.z / 2;
  return rep;
}

}  // namespace cremona
