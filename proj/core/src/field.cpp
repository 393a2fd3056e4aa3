// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

#include "cremona/field.hpp"

#include <functional>

namespace cremona {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
    if (n % d == 0) return n == d;
  }
  // deterministic Miller-Rabin for 64-bit inputs
  auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    for (a %= m; e; e >>= 1, a = mulmod(a, a, m))
      if (e & 1) r = mulmod(r, a, m);
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (a % n == 0) continue;
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // extended Euclid; a != 0 mod p
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw std::domain_error("not invertible mod p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ull << 63) || !is_prime_u64(p))
    throw std::invalid_argument("field order must be a prime < 2^63");
  return Field{p};
}

std::string Field::name() const {
  return p == 0 ? std::string("Q") : "F_" + std::to_string(p);
}

Scalar::Scalar(const Field& f, const mpq_class& v) : field_(f) {
  if (f.is_rational()) {
    rat_ = v;
    rat_.canonicalize();
  } else {
    mpz_class num = v.get_num() % mpz_class(f.p);
    if (num < 0) num += mpz_class(f.p);
    mpz_class den = v.get_den() % mpz_class(f.p);
    if (den == 0) throw std::domain_error("denominator vanishes in F_p");
    std::uint64_t n = num.get_ui();
    std::uint64_t d = den.get_ui();
    res_ = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(n) * mod_inverse(d, f.p) % f.p);
  }
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? rat_ == 1 : res_ == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw std::logic_error("not a rational scalar");
  return rat_;
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw std::logic_error("not a prime-field scalar");
  return res_;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check(o);
  Scalar r;
  r.field_ = field_;
  if (field_.is_rational()) {
    r.rat_ = rat_ + o.rat_;
  } else {
    unsigned __int128 s = static_cast<unsigned __int128>(res_) + o.res_;
    r.res_ = static_cast<std::uint64_t>(s % field_.p);
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check(o);
  Scalar r;
  r.field_ = field_;
  if (field_.is_rational()) {
    r.rat_ = rat_ * o.rat_;
  } else {
    r.res_ = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(res_) * o.res_ % field_.p);
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r;
  r.field_ = field_;
  if (field_.is_rational())
    r.rat_ = -rat_;
  else
    r.res_ = res_ == 0 ? 0 : field_.p - res_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar r;
  r.field_ = field_;
  if (field_.is_rational())
    r.rat_ = 1 / rat_;
  else
    r.res_ = mod_inverse(res_, field_.p);
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.is_rational() ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::str() const {
  if (field_.is_rational()) return rat_.get_str();
  return std::to_string(res_);
}

Scalar Scalar::parse(const Field& f, const std::string& s) {
  mpq_class q(s);
  q.canonicalize();
  return Scalar(f, q);
}

std::size_t Scalar::hash() const {
  if (field_.is_rational()) {
    std::size_t h = std::hash<long>()(mpz_get_si(rat_.get_num_mpz_t()));
    h ^= std::hash<long>()(mpz_get_si(rat_.get_den_mpz_t())) * 0x9e3779b97f4a7c15ull;
    return h;
  }
  return std::hash<std::uint64_t>()(res_ * 0x9e3779b97f4a7c15ull + field_.p);
}

}  // namespace cremona
