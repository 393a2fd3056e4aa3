// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

#include "cremona/polynomial.hpp"

#include <map>
#include <stdexcept>

namespace cremona {

RatInterval sqrt_enclosure(const mpq_class& v, const mpq_class& tol) {
  if (v < 0) throw std::domain_error("sqrt of negative value");
  if (v == 0) return {0, 0};
  mpq_class lo = 0, hi = v < 1 ? mpq_class(1) : v;
  while (hi - lo > tol) {
    mpq_class mid = (lo + hi) / 2;
    if (mid * mid <= v)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::from_ints(std::initializer_list<long> coeffs) {
  std::vector<mpz_class> c;
  for (long v : coeffs) c.emplace_back(v);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::monomial(int deg, const mpz_class& c) {
  std::vector<mpz_class> v(deg + 1, 0);
  v[deg] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
  std::vector<mpz_class> r = c_;
  for (auto& v : r) v = -v;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(r));
}

mpq_class IntPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPoly::sign_at(const mpq_class& x) const {
  return sgn(eval(x));
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpz_class> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::reversed() const {
  std::vector<mpz_class> r(c_.rbegin(), c_.rend());
  return IntPoly(std::move(r));
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (leading() < 0) g = -g;
  std::vector<mpz_class> r = c_;
  for (auto& v : r) v /= g;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::divide_exact(const IntPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  // rational long division, then check integrality and zero remainder
  std::vector<mpq_class> rem(c_.begin(), c_.end());
  int dd = d.degree();
  int qd = degree() - dd;
  if (qd < 0) {
    if (is_zero()) return {};
    throw std::domain_error("inexact polynomial division");
  }
  std::vector<mpq_class> q(qd + 1, 0);
  mpq_class lead(d.leading());
  for (int i = qd; i >= 0; --i) {
    mpq_class f = rem[i + dd] / lead;
    q[i] = f;
    for (int j = 0; j <= dd; ++j) rem[i + j] -= f * mpq_class(d.coeff(j));
  }
  for (const auto& v : rem)
    if (v != 0) throw std::domain_error("inexact polynomial division");
  std::vector<mpz_class> qi(qd + 1);
  for (int i = 0; i <= qd; ++i) {
    if (q[i].get_den() != 1) throw std::domain_error("non-integer quotient");
    qi[i] = q[i].get_num();
  }
  return IntPoly(std::move(qi));
}

bool IntPoly::divisible_by(const IntPoly& d) const {
  if (d.is_zero()) return is_zero();
  if (is_zero()) return true;
  if (degree() < d.degree()) return false;
  std::vector<mpq_class> rem(c_.begin(), c_.end());
  int dd = d.degree();
  mpq_class lead(d.leading());
  for (int i = degree() - dd; i >= 0; --i) {
    mpq_class f = rem[i + dd] / lead;
    for (int j = 0; j <= dd; ++j) rem[i + j] -= f * mpq_class(d.coeff(j));
  }
  for (const auto& v : rem)
    if (v != 0) return false;
  return true;
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeff(i);
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    mpz_class a = abs(c);
    if (a != 1 || i == 0) s += a.get_str();
    if (i > 0) s += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return s;
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly f = a.primitive_part(), g = b.primitive_part();
  while (!g.is_zero()) {
    // remainder over Q, rescaled to primitive integer
    std::vector<mpq_class> rem(f.coeffs().begin(), f.coeffs().end());
    int dd = g.degree();
    mpq_class lead(g.leading());
    for (int i = f.degree() - dd; i >= 0; --i) {
      mpq_class fq = rem[i + dd] / lead;
      for (int j = 0; j <= dd; ++j) rem[i + j] -= fq * mpq_class(g.coeff(j));
    }
    rem.resize(std::min<std::size_t>(rem.size(), dd));
    mpz_class den = 1;
    for (const auto& v : rem) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<mpz_class> ri(rem.size());
    for (std::size_t i = 0; i < rem.size(); ++i) {
      mpq_class scaled = rem[i] * den;
      ri[i] = scaled.get_num();
    }
    IntPoly r(std::move(ri));
    f = g;
    g = r.primitive_part();
  }
  return f.primitive_part();
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() <= 1) return p.primitive_part();
  IntPoly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p.primitive_part();
  return p.primitive_part().divide_exact(g).primitive_part();
}

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  std::vector<IntPoly> chain;
  IntPoly f = squarefree_part(p);
  if (f.is_zero()) return chain;
  chain.push_back(f);
  IntPoly d = f.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d.primitive_part());
  while (chain.back().degree() > 0) {
    const IntPoly& fi = chain[chain.size() - 2];
    const IntPoly& gi = chain.back();
    std::vector<mpq_class> rem(fi.coeffs().begin(), fi.coeffs().end());
    int dd = gi.degree();
    mpq_class lead(gi.leading());
    for (int i = fi.degree() - dd; i >= 0; --i) {
      mpq_class fq = rem[i + dd] / lead;
      for (int j = 0; j <= dd; ++j) rem[i + j] -= fq * mpq_class(gi.coeff(j));
    }
    rem.resize(dd);
    mpz_class den = 1;
    for (const auto& v : rem) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<mpz_class> ri(rem.size());
    for (std::size_t i = 0; i < rem.size(); ++i) ri[i] = mpq_class(rem[i] * den).get_num();
    IntPoly r(std::move(ri));
    if (r.is_zero()) break;
    // negate remainder, keep it primitive with the sign preserved
    mpz_class cont = r.content();
    std::vector<mpz_class> rc = r.coeffs();
    for (auto& v : rc) v = -v / cont;
    chain.emplace_back(std::move(rc));
  }
  return chain;
}

namespace {

int sign_variations(const std::vector<IntPoly>& chain, const mpq_class& x) {
  int var = 0, prev = 0;
  for (const auto& f : chain) {
    int s = f.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

// Cauchy bound on the absolute value of real roots.
mpq_class root_bound(const IntPoly& p) {
  mpq_class m = 0;
  for (const auto& c : p.coeffs()) {
    mpq_class a = abs(mpq_class(c));
    if (a > m) m = a;
  }
  return 1 + m / abs(mpq_class(p.leading()));
}

}  // namespace

int count_roots(const IntPoly& p, const mpq_class& a, const mpq_class& b) {
  auto chain = sturm_chain(p);
  if (chain.empty()) throw std::domain_error("zero polynomial");
  return sign_variations(chain, a) - sign_variations(chain, b);
}

int count_real_roots(const IntPoly& p) {
  mpq_class b = root_bound(p);
  return count_roots(p, -b, b);
}

std::optional<RootEnclosure> largest_real_root(const IntPoly& p,
                                               const mpq_class& a,
                                               const mpq_class& b,
                                               const mpq_class& tol) {
  if (p.is_zero()) throw std::domain_error("zero polynomial");
  IntPoly f = squarefree_part(p);
  auto chain = sturm_chain(f);
  auto var = [&](const mpq_class& x) { return sign_variations(chain, x); };
  // roots in (a, b], plus an explicit check of the left endpoint
  int total = var(a) - var(b);
  bool root_at_a = f.sign_at(a) == 0;
  if (total == 0 && !root_at_a) return std::nullopt;
  mpq_class lo = a, hi = b;
  if (total > 0) {
    while (hi - lo > tol) {
      mpq_class mid = (lo + hi) / 2;
      if (var(mid) - var(hi) > 0)
        lo = mid;  // still a root above mid
      else
        hi = mid;
    }
  } else {
    // the only root in [a, b] is a itself
    hi = lo;
  }
  RootEnclosure e;
  e.interval = {lo, hi};
  e.sign_lo = f.sign_at(lo);
  e.sign_hi = f.sign_at(hi);
  return e;
}

bool above_all_roots(const IntPoly& p, const mpq_class& lambda) {
  // Taylor shift of a monic-positive polynomial with all real roots:
  // lambda exceeds every root iff all shifted coefficients are positive.
  std::vector<mpq_class> c(p.coeffs().begin(), p.coeffs().end());
  if (p.leading() < 0)
    for (auto& v : c) v = -v;
  int n = p.degree();
  // synthetic division by (x - lambda), repeated
  for (int k = 0; k <= n; ++k) {
    for (int i = n - 1; i >= k; --i) c[i] += lambda * c[i + 1];
    if (c[k] <= 0) return false;
  }
  return true;
}

RatInterval max_root_all_real(const IntPoly& p, mpq_class lo, mpq_class hi,
                              const mpq_class& tol) {
  if (above_all_roots(p, lo)) throw std::domain_error("no root above lo");
  while (!above_all_roots(p, hi)) hi += hi - lo;
  while (hi - lo > tol) {
    mpq_class mid = (lo + hi) / 2;
    if (above_all_roots(p, mid))
      hi = mid;
    else
      lo = mid;
  }
  return {lo, hi};
}

IntPoly cyclotomic(unsigned n) {
  static std::map<unsigned, IntPoly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // x^n - 1 divided by the product of Phi_d over proper divisors d
  std::vector<mpz_class> xn(n + 1, 0);
  xn[0] = -1;
  xn[n] = 1;
  IntPoly result(std::move(xn));
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) result = result.divide_exact(cyclotomic(d));
  cache[n] = result;
  return result;
}

IntPoly trace_polynomial(const IntPoly& p) {
  if (!p.is_palindromic() || p.degree() % 2 != 0)
    throw std::domain_error("trace polynomial needs an even palindromic input");
  int k = p.degree() / 2;
  // z_i(y) with x^i + x^-i = z_i(x + 1/x): z_0 = 2, z_1 = y,
  // z_i = y z_{i-1} - z_{i-2}
  std::vector<IntPoly> z(k + 1);
  z[0] = IntPoly::from_ints({2});
  if (k >= 1) z[1] = IntPoly::from_ints({0, 1});
  for (int i = 2; i <= k; ++i)
    z[i] = IntPoly::from_ints({0, 1}) * z[i - 1] - z[i - 2];
  IntPoly q(std::vector<mpz_class>{p.coeff(k)});
  for (int i = 1; i <= k; ++i) q = q + IntPoly(std::vector<mpz_class>{p.coeff(k - i)}) * z[i];
  return q;
}

}  // namespace cremona
