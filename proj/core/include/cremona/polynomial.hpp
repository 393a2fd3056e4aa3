// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cremona {

// Closed rational interval [lo, hi]; the unit of certification for every
// real quantity the library reports.
struct RatInterval {
  mpq_class lo, hi;

  mpq_class width() const { return hi - lo; }
  mpq_class mid() const { return (lo + hi) / 2; }
  bool contains(const mpq_class& v) const { return lo <= v && v <= hi; }
  double mid_d() const { return mid().get_d(); }
};

// Enclosure of sqrt(v) for v >= 0 to width <= tol, by exact bisection.
RatInterval sqrt_enclosure(const mpq_class& v, const mpq_class& tol);

// Dense univariate polynomial with arbitrary-precision integer
// coefficients.  coeffs()[i] is the coefficient of x^i; the leading
// coefficient is nonzero unless the polynomial is zero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  static IntPoly from_ints(std::initializer_list<long> coeffs);
  static IntPoly monomial(int deg, const mpz_class& c = 1);

  const std::vector<mpz_class>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const mpz_class& leading() const { return c_.back(); }
  mpz_class coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : mpz_class(0);
  }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator-() const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  mpq_class eval(const mpq_class& x) const;
  int sign_at(const mpq_class& x) const;

  IntPoly derivative() const;
  IntPoly reversed() const;  // x^deg * p(1/x)
  bool is_palindromic() const { return *this == reversed(); }

  mpz_class content() const;
  IntPoly primitive_part() const;

  // exact division; throws if the division leaves a remainder
  IntPoly divide_exact(const IntPoly& d) const;
  // true iff d divides this exactly over Q
  bool divisible_by(const IntPoly& d) const;

  std::string str() const;

 private:
  void normalize();
  std::vector<mpz_class> c_;
};

// primitive integer gcd over Q, positive leading coefficient
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);
IntPoly squarefree_part(const IntPoly& p);

// Sturm chain of p (primitive integer polynomials).
std::vector<IntPoly> sturm_chain(const IntPoly& p);

// Number of distinct real roots of p in (a, b]; requires p(a) != 0.
int count_roots(const IntPoly& p, const mpq_class& a, const mpq_class& b);
int count_real_roots(const IntPoly& p);

struct RootEnclosure {
  RatInterval interval;
  int sign_lo = 0, sign_hi = 0;  // exact signs of the isolated polynomial
};

// Certified enclosure of the largest real root of p in [a, b], width <= tol.
// Isolation runs on the squarefree part; signs are reported for it.
// Returns nullopt when p has no real root in the bracket.
std::optional<RootEnclosure> largest_real_root(const IntPoly& p,
                                               const mpq_class& a,
                                               const mpq_class& b,
                                               const mpq_class& tol);

// Largest real root of a polynomial known to have only real roots
// (characteristic polynomials of symmetric matrices).  The side test
// "lambda > max root" is the positivity of all Taylor-shift coefficients,
// which avoids Sturm chains on high-degree inputs.
RatInterval max_root_all_real(const IntPoly& p, mpq_class lo, mpq_class hi,
                              const mpq_class& tol);

// is lambda strictly greater than every real root of p (all roots real)
bool above_all_roots(const IntPoly& p, const mpq_class& lambda);

// n-th cyclotomic polynomial
IntPoly cyclotomic(unsigned n);

// For palindromic p of even degree 2k, the trace polynomial q of degree k
// with p(x) = x^k q(x + 1/x).
IntPoly trace_polynomial(const IntPoly& p);

}  // namespace cremona
