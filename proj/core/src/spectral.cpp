// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

#include "cremona/spectral.hpp"

#include <cassert>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace cremona {

int QuadExt::compare(const mpq_class& r) const {
  mpq_class u = a - r;
  if (b == 0) return sgn(u);
  if (b > 0) {
    if (u >= 0) return 1;
    // compare b*sqrt(d) against -u, both positive
    return sgn(b * b * d - u * u);
  }
  if (u <= 0) return -1;
  return sgn(u * u - b * b * d);
}

GramLattice gram_matrix(const Diagram& d, const mpq_class& lambda) {
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  AdjacencyData adj = adjacency(d);
  int n = adj.matrix.dim();
  GramLattice g;
  g.lambda = lambda;
  g.shape = d.str();
  g.gram = RatMat(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g.gram.at(i, j) = i == j ? mpq_class(-lambda) : mpq_class(adj.matrix.at(i, j));
  return g;
}

std::string SignatureClass::str() const {
  switch (kind) {
    case Kind::NegativeDefinite:
      return "negative-definite";
    case Kind::Affine:
      return "affine(radical " + std::to_string(radical_rank) + ")";
    case Kind::Lorentzian:
      return "lorentzian";
    case Kind::OtherDegenerate:
      return "other(" + std::to_string(positives) + "+," +
             std::to_string(radical_rank) + "0," + std::to_string(negatives) + "-)";
  }
  return "?";
}

SignatureClass classify_signature(const GramLattice& g) {
  auto [m, den] = g.gram.scaled_integer();
  (void)den;  // positive scaling preserves inertia
  IntPoly cp = char_poly(m);
  int n = m.dim();

  SignatureClass out;
  int zeros = 0;
  while (zeros <= cp.degree() && cp.coeff(zeros) == 0) ++zeros;
  // Descartes count of positive roots is exact: symmetric matrices have
  // only real eigenvalues.
  int changes = 0, prev = 0;
  for (int i = zeros; i <= cp.degree(); ++i) {
    int s = sgn(cp.coeff(i));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  out.positives = changes;
  out.radical_rank = zeros;
  out.negatives = n - zeros - changes;
  if (zeros > 0) {
    out.radical = g.gram.kernel();
    if (static_cast<int>(out.radical.size()) != zeros)
      throw std::logic_error("kernel dimension disagrees with char poly");
  }
  if (changes == 0)
    out.kind = zeros == 0 ? SignatureClass::Kind::NegativeDefinite
                          : SignatureClass::Kind::Affine;
  else if (changes == 1 && zeros == 0)
    out.kind = SignatureClass::Kind::Lorentzian;
  else
    out.kind = SignatureClass::Kind::OtherDegenerate;
  return out;
}

IntPoly tree_adjacency_charpoly(int p, int q, int r) {
  if (p < 1 || q < 1 || r < 1) throw std::invalid_argument("arms must be >= 1");
  int a = p - 1, b = q - 1, c = r - 1;
  int top = std::max({a, b, c});
  // path characteristic polynomials: A_k = x A_{k-1} - A_{k-2}
  std::vector<IntPoly> path(top + 2);
  path[0] = IntPoly::from_ints({1});
  if (top + 1 >= 1) path[1] = IntPoly::monomial(1);
  IntPoly x = IntPoly::monomial(1);
  for (int k = 2; k <= top + 1; ++k) path[k] = x * path[k - 1] - path[k - 2];
  auto pm = [&](int k) { return k < 0 ? IntPoly() : path[k]; };
  // expansion along the central vertex
  return x * path[a] * path[b] * path[c] -
         (pm(a - 1) * path[b] * path[c] + path[a] * pm(b - 1) * path[c] +
          path[a] * path[b] * pm(c - 1));
}

RatInterval mu_threshold(int p, int q, int r, const mpq_class& tol) {
  mpq_class s = mpq_class(1, p) + mpq_class(1, q) + mpq_class(1, r);
  s.canonicalize();
  if (s > 1) throw std::invalid_argument("mu is defined only for 1/p+1/q+1/r <= 1");
  IntPoly phi = tree_adjacency_charpoly(p, q, r);
  if (s == 1) {
    if (phi.sign_at(2) != 0 || !above_all_roots(phi, mpq_class(201, 100)))
      throw std::logic_error("affine boundary check failed");
    return {2, 2};
  }
  mpq_class lo = 2, hi(21214, 10000);
  if (above_all_roots(phi, lo) || !above_all_roots(phi, hi))
    throw std::logic_error("top eigenvalue escapes [2, 2.1214]");
  while (hi - lo > tol) {
    mpq_class mid = (lo + hi) / 2;
    if (above_all_roots(phi, mid))
      hi = mid;
    else
      lo = mid;
  }
  return {lo, hi};
}

IntMat coxeter_element(const AdjacencyData& adj) {
  int n = adj.matrix.dim(), s = adj.sigma_count;
  IntMat A = IntMat::identity(n), S = IntMat::identity(n);
  for (int i = s; i < n; ++i) {
    A.at(i, i) = -1;
    for (int j = 0; j < s; ++j) {
      A.at(i, j) = adj.matrix.at(i, j);   // C block
      S.at(j, i) = adj.matrix.at(i, j);   // C^T block
    }
  }
  for (int j = 0; j < s; ++j) S.at(j, j) = -1;
  return S * A;
}

std::optional<long> order_if_finite(const IntMat& m, long cap) {
  IntMat acc = m;
  for (long k = 1; k <= cap; ++k) {
    if (acc.is_identity()) return k;
    acc = acc * m;
  }
  return std::nullopt;
}

static mpq_class cauchy_bound(const IntPoly& p) {
  mpz_class mx = 0;
  for (int i = 0; i < p.degree(); ++i) {
    mpz_class a = abs(p.coeff(i));
    if (a > mx) mx = a;
  }
  mpq_class b(mx, abs(p.leading()));
  b.canonicalize();
  return b + 2;
}

RadiusResult spectral_radius(const IntMat& m, const mpq_class& tol) {
  RadiusResult out;
  out.char_poly = char_poly(m);
  IntPoly sf = squarefree_part(out.char_poly);
  IntPoly xm1 = IntPoly::from_ints({-1, 1});
  while (!sf.is_zero() && sf.sign_at(1) == 0) sf = sf.divide_exact(xm1);
  mpq_class bound = cauchy_bound(out.char_poly);
  if (sf.is_zero() || count_roots(sf, 1, bound) == 0) {
    out.elliptic = true;
    return out;
  }
  auto root = largest_real_root(sf, 1, bound, tol);
  if (!root) throw std::logic_error("root count and isolation disagree");
  out.value = root->interval;
  if (out.value.lo < 1) out.value.lo = 1;
  return out;
}

static unsigned long euler_phi(unsigned long n) {
  unsigned long res = n;
  for (unsigned long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      res -= res / p;
    }
  if (n > 1) res -= res / n;
  return res;
}

std::optional<SalemCertificate> salem_certify(const IntPoly& p, const mpq_class& tol,
                                              SalemFailure* failure) {
  auto fail = [&](const std::string& why) -> std::optional<SalemCertificate> {
    if (failure) failure->reason = why;
    return std::nullopt;
  };
  if (p.is_zero() || p.degree() < 2) return fail("degree too small");

  // strip cyclotomic factors first: char polys of isometries may be
  // anti-reciprocal through an x-1 factor
  IntPoly s = squarefree_part(p);
  for (unsigned n = 1; n <= 10000 && s.degree() > 0; ++n) {
    if (euler_phi(n) > static_cast<unsigned long>(s.degree())) continue;
    const IntPoly& cyc = cyclotomic(n);
    while (s.degree() >= cyc.degree() && s.divisible_by(cyc))
      s = s.divide_exact(cyc);
  }
  if (s.degree() <= 0) return fail("all factors cyclotomic");
  if (!s.is_palindromic()) return fail("not self-reciprocal");
  if (s.degree() % 2 != 0) return fail("odd-degree self-reciprocal factor");

  int k = s.degree() / 2;
  IntPoly t = trace_polynomial(s);
  int total = count_real_roots(t);
  if (total != k) return fail("conjugates off the unit circle and real line");
  int inside = count_roots(t, -2, 2);
  if (inside != k - 1) {
    if (inside < k - 1) return fail("more than one root outside the unit disc");
    return fail("no root outside the unit disc");
  }

  auto root = largest_real_root(s, 1, cauchy_bound(s), tol);
  if (!root) return fail("isolation failed");
  SalemCertificate cert;
  cert.salem_factor = s;
  cert.reciprocal = true;
  cert.roots_outside_disc = 1;
  cert.root = root->interval;
  cert.quadratic_unit = (k == 1);
  return cert;
}

MpResult solve_mp(int p, const mpq_class& tol) {
  MpResult out;
  if (p <= 3) {
    out.boundary = true;
    return out;
  }
  // m^{p+1} - 2 m^p + 2 m - 1, with the root m = 1 divided out
  std::vector<mpz_class> c(p + 2, 0);
  c[0] = -1;
  c[1] = 2;
  c[p] = -2;
  c[p + 1] = 1;
  IntPoly g(c);
  out.poly = g.divide_exact(IntPoly::from_ints({-1, 1}));
  if (out.poly.sign_at(1) >= 0 || out.poly.sign_at(2) <= 0)
    throw std::logic_error("m_p bracket failed");
  mpq_class lo = 1, hi = 2;
  while (hi - lo > tol) {
    mpq_class mid = (lo + hi) / 2;
    int sg = out.poly.sign_at(mid);
    if (sg == 0) {
      out.m = {mid, mid};
      return out;
    }
    // unique simple root in (1,2): negative on the left of it
    if (sg < 0)
      lo = mid;
    else
      hi = mid;
  }
  out.m = {lo, hi};
  return out;
}

DInterval log_interval(const RatInterval& v) {
  if (v.lo <= 0) throw std::domain_error("log of a non-positive interval");
  // mpq -> double truncates toward zero, so the raw conversion of a
  // positive value is a lower bound; pad 2 ulps for the log rounding
  double lo = std::log(v.lo.get_d());
  lo = std::nextafter(std::nextafter(lo, -INFINITY), -INFINITY);
  double hid = std::nextafter(v.hi.get_d(), INFINITY);
  double hi = std::log(hid);
  hi = std::nextafter(std::nextafter(hi, INFINITY), INFINITY);
  return {lo, hi};
}

LengthFromMu length_from_mu(const RatInterval& mu) {
  if (mu.lo < 2) throw std::domain_error("mu must be >= 2");
  LengthFromMu out;
  // mu^2 = m + 1/m + 2  <=>  m = h + sqrt(h^2 - 1), h = (mu^2 - 2)/2
  mpq_class hlo = (mu.lo * mu.lo - 2) / 2, hhi = (mu.hi * mu.hi - 2) / 2;
  mpq_class stol = mu.width() / 8;
  mpq_class floor_tol(1, 1000000);
  floor_tol /= mpq_class(1000000) * mpq_class(1000000);  // 1e-18
  if (stol < floor_tol) stol = floor_tol;
  out.m.lo = hlo + sqrt_enclosure(hlo * hlo - 1, stol).lo;
  out.m.hi = hhi + sqrt_enclosure(hhi * hhi - 1, stol).hi;
  if (out.m.lo < 1) out.m.lo = 1;
  out.length = out.m.lo == 1 && out.m.hi == 1 ? DInterval{0, 0}
                                              : log_interval(out.m);
  if (out.length.lo < 0) out.length.lo = 0;
  return out;
}

POfEpsilon p_of_epsilon(const mpq_class& eps) {
  if (eps <= 0 || eps > mpq_class(1, 2))
    throw std::invalid_argument("epsilon must lie in (0, 1/2]");
  POfEpsilon out;
  double e = eps.get_d();
  out.formula_p = static_cast<int>(std::ceil(std::log(3 / e) / std::log(2 - e)));
  double threshold = 2 * std::exp(-e);  // log 2 - eps < log m  <=>  m > 2 e^{-eps}
  mpq_class tol(1, 1000000000);
  tol /= 1000;  // 1e-12
  for (int p = 4; p <= out.formula_p + 64; ++p) {
    MpResult mp = solve_mp(p, tol);
    if (mp.m.lo.get_d() > threshold) {
      out.least_p = p;
      return out;
    }
  }
  throw std::logic_error("least p search did not terminate");
}

static const char* type_name(LengthReport::Type t) {
  switch (t) {
    case LengthReport::Type::Elliptic:
      return "elliptic";
    case LengthReport::Type::Parabolic:
      return "parabolic";
    case LengthReport::Type::Hyperbolic:
      return "hyperbolic";
    case LengthReport::Type::Unclassified:
      return "unclassified";
  }
  return "?";
}

static double log2_upper() {
  return std::nextafter(std::log(2.0), INFINITY);
}

LengthReport classify_and_report(const Diagram& d, const mpq_class& tol) {
  LengthReport r;
  r.truncated = d.subdiagram_only;
  if (d.shape == Diagram::Shape::Unclassified) {
    r.note = d.note.empty() ? "unclassified diagram" : d.note;
    return r;
  }

  auto hyperbolic_exact = [&](const AdjacencyData& adj) {
    IntMat cox = coxeter_element(adj);
    r.char_poly = char_poly(cox);
    RadiusResult rad = spectral_radius(cox, tol);
    if (rad.elliptic) throw std::logic_error("expected a hyperbolic spectrum");
    r.type = LengthReport::Type::Hyperbolic;
    r.m_enclosure = rad.value;
    r.length = log_interval(rad.value);
    SalemFailure why;
    r.salem = salem_certify(*r.char_poly, tol, &why);
    if (!r.salem) r.note = "salem: " + why.reason;
  };
  auto hyperbolic_bound = [&](int p, int q, int rr) {
    r.type = LengthReport::Type::Hyperbolic;
    r.mu_enclosure = mu_threshold(p, q, rr, tol);
    LengthFromMu lf = length_from_mu(r.mu_enclosure);
    r.m_enclosure = lf.m;
    r.length = {lf.length.lo, log2_upper()};
  };

  if (d.shape == Diagram::Shape::Tree) {
    int p = d.arms[0].value, q = d.arms[1].value, rr = d.arms[2].value;
    mpq_class s = mpq_class(1, p) + mpq_class(1, q) + mpq_class(1, rr);
    s.canonicalize();
    if (d.arms[0].exact && d.arms[1].exact && d.arms[2].exact) {
      AdjacencyData adj = adjacency(d);
      if (s > 1) {
        IntMat cox = coxeter_element(adj);
        r.char_poly = char_poly(cox);
        r.type = LengthReport::Type::Elliptic;
        r.order = order_if_finite(cox);
        r.length = {0, 0};
      } else if (s == 1) {
        r.type = LengthReport::Type::Parabolic;
        r.length = {0, 0};
        r.char_poly = char_poly(coxeter_element(adj));
      } else {
        hyperbolic_exact(adj);
        r.mu_enclosure = mu_threshold(p, q, rr, tol);
      }
    } else {
      // lower bounds only; monotone in the arm lengths
      if (s < 1)
        hyperbolic_bound(p, q, rr);
      else
        r.note = "certified arm bounds too short to classify";
    }
    return r;
  }

  // cycle of 2n vertices with one arm; deleting the vertex opposite v0
  // leaves T_{n,n,arm}
  int n = d.cycle_length / 2, arm = d.cycle_arm.value;
  if (d.cycle_arm.exact) {
    SignatureClass sig = classify_signature(gram_matrix(d, 2));
    AdjacencyData adj = adjacency(d);
    switch (sig.kind) {
      case SignatureClass::Kind::Lorentzian:
        hyperbolic_exact(adj);
        break;
      case SignatureClass::Kind::Affine:
        r.type = LengthReport::Type::Parabolic;
        r.length = {0, 0};
        r.char_poly = char_poly(coxeter_element(adj));
        break;
      case SignatureClass::Kind::NegativeDefinite: {
        IntMat cox = coxeter_element(adj);
        r.char_poly = char_poly(cox);
        r.type = LengthReport::Type::Elliptic;
        r.order = order_if_finite(cox);
        r.length = {0, 0};
        break;
      }
      case SignatureClass::Kind::OtherDegenerate:
        r.note = "unexpected signature: " + sig.str();
        break;
    }
  } else {
    mpq_class s = mpq_class(2, n) + mpq_class(1, arm);
    s.canonicalize();
    if (s < 1)
      hyperbolic_bound(n, n, arm);
    else
      r.note = "certified arm bound too short to classify the cycle";
  }
  return r;
}

LengthReport classify_from_lattice(const ClassLattice& lat, const mpq_class& tol) {
  LengthReport r;
  IntMat g = lat.g_action();
  r.char_poly = char_poly(g);
  if (auto ord = order_if_finite(g)) {
    r.type = LengthReport::Type::Elliptic;
    r.order = ord;
    r.length = {0, 0};
    return r;
  }
  RadiusResult rad = spectral_radius(g, tol);
  if (rad.elliptic) {
    // infinite order with no eigenvalue beyond 1: quasi-unipotent
    r.type = LengthReport::Type::Parabolic;
    r.length = {0, 0};
    return r;
  }
  r.type = LengthReport::Type::Hyperbolic;
  r.m_enclosure = rad.value;
  r.length = log_interval(rad.value);
  SalemFailure why;
  r.salem = salem_certify(*r.char_poly, tol, &why);
  if (!r.salem) r.note = "salem: " + why.reason;
  return r;
}

static std::string dbl(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

static std::string rat_pair(const RatInterval& v) {
  return "[" + dbl(v.lo.get_d()) + "," + dbl(v.hi.get_d()) + "]";
}

std::string LengthReport::to_json() const {
  std::ostringstream os;
  os << "{\"type\":\"" << type_name(type) << "\",";
  os << "\"order\":" << (order ? std::to_string(*order) : "null") << ",";
  os << "\"L_lower\":" << dbl(length.lo) << ",\"L_upper\":" << dbl(length.hi) << ",";
  os << "\"mu\":" << rat_pair(mu_enclosure) << ",\"m\":" << rat_pair(m_enclosure)
     << ",";
  os << "\"char_poly\":";
  if (char_poly) {
    os << "[";
    for (int i = 0; i <= char_poly->degree(); ++i)
      os << (i ? "," : "") << char_poly->coeff(i).get_str();
    os << "]";
  } else {
    os << "null";
  }
  os << ",\"salem\":";
  if (salem) {
    os << "{\"polynomial\":[";
    for (int i = 0; i <= salem->salem_factor.degree(); ++i)
      os << (i ? "," : "") << salem->salem_factor.coeff(i).get_str();
    os << "],\"root\":" << rat_pair(salem->root)
       << ",\"quadratic_unit\":" << (salem->quadratic_unit ? "true" : "false")
       << "}";
  } else {
    os << "null";
  }
  os << ",\"provenance\":\"" << (truncated ? "truncated" : "exact") << "\"";
  if (!note.empty()) os << ",\"note\":\"" << note << "\"";
  os << "}";
  return os.str();
}

std::string LengthReport::str() const {
  std::ostringstream os;
  os << type_name(type);
  if (order) os << ", order " << *order;
  if (type == Type::Hyperbolic)
    os << ", L in [" << dbl(length.lo) << ", " << dbl(length.hi) << "]";
  if (truncated) os << " (lower-bound arms)";
  if (!note.empty()) os << " [" << note << "]";
  return os.str();
}

}  // namespace cremona
