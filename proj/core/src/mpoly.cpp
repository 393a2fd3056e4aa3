// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

#include "cremona/mpoly.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace cremona {

TriPoly TriPoly::monomial(const Field& f, int i, int j, int k) {
  TriPoly p(f, i + j + k);
  p.add_term(i, j, Scalar::one(f));
  return p;
}

void TriPoly::add_term(int i, int j, const Scalar& c) {
  if (i < 0 || j < 0 || i + j > deg_)
    throw std::invalid_argument("monomial outside the homogeneous degree");
  auto key = std::make_pair(i, j);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(key, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar TriPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

TriPoly TriPoly::operator+(const TriPoly& o) const {
  if (deg_ != o.deg_) throw std::invalid_argument("degree mismatch");
  TriPoly r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
  return r;
}

TriPoly TriPoly::operator*(const TriPoly& o) const {
  TriPoly r(field_, deg_ + o.deg_);
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

TriPoly TriPoly::scaled(const Scalar& c) const {
  TriPoly r(field_, deg_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.add_term(k.first, k.second, v * c);
  return r;
}

bool TriPoly::operator==(const TriPoly& o) const {
  return deg_ == o.deg_ && terms_ == o.terms_;
}

std::string TriPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    int zk = deg_ - k.first - k.second;
    if (k.first) os << " x^" << k.first;
    if (k.second) os << " y^" << k.second;
    if (zk) os << " z^" << zk;
  }
  return os.str();
}

namespace {

// Field-operation policies.  The generic Scalar path serves the
// rationals; prime fields get raw machine residues, which matters in the
// gcd inner loops on dense degree-100 forms.

struct ScalarOps {
  using E = Scalar;
  Field field;

  E zero() const { return Scalar::zero(field); }
  bool is_zero(const E& a) const { return a.is_zero(); }
  E add(const E& a, const E& b) const { return a + b; }
  E sub(const E& a, const E& b) const { return a - b; }
  E mul(const E& a, const E& b) const { return a * b; }
  E div(const E& a, const E& b) const { return a / b; }
  E inv(const E& a) const { return a.inverse(); }
  E from_scalar(const Scalar& s) const { return s; }
  Scalar to_scalar(const E& a) const { return a; }
};

struct FpOps {
  using E = std::uint64_t;
  Field field;
  std::uint64_t p = 0;

  E zero() const { return 0; }
  bool is_zero(E a) const { return a == 0; }
  E add(E a, E b) const {
    E s = a + b;
    return s >= p ? s - p : s;
  }
  E sub(E a, E b) const { return a >= b ? a - b : a + (p - b); }
  E mul(E a, E b) const {
    return static_cast<E>(static_cast<unsigned __int128>(a) * b % p);
  }
  E inv(E a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    E r = 1, base = a;
    std::uint64_t e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  E div(E a, E b) const { return mul(a, inv(b)); }
  E from_scalar(const Scalar& s) const { return s.residue(); }
  Scalar to_scalar(E a) const {
    return Scalar::from_int(field, static_cast<long>(a));
  }
};

// univariate polynomials over the field, coefficient of x^i at index i
template <class Ops>
using VP = std::vector<typename Ops::E>;

template <class Ops>
void vp_trim(const Ops& ops, VP<Ops>& p) {
  while (!p.empty() && ops.is_zero(p.back())) p.pop_back();
}

template <class Ops>
int vp_deg(const VP<Ops>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class Ops>
VP<Ops> vp_mul(const Ops& ops, const VP<Ops>& a, const VP<Ops>& b) {
  if (a.empty() || b.empty()) return {};
  VP<Ops> r(a.size() + b.size() - 1, ops.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = ops.add(r[i + j], ops.mul(a[i], b[j]));
  vp_trim(ops, r);
  return r;
}

template <class Ops>
VP<Ops> vp_add(const Ops& ops, const VP<Ops>& a, const VP<Ops>& b) {
  VP<Ops> r(std::max(a.size(), b.size()), ops.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = ops.add(r[i], b[i]);
  vp_trim(ops, r);
  return r;
}

template <class Ops>
VP<Ops> vp_sub(const Ops& ops, const VP<Ops>& a, const VP<Ops>& b) {
  VP<Ops> r(std::max(a.size(), b.size()), ops.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = ops.sub(r[i], b[i]);
  vp_trim(ops, r);
  return r;
}

template <class Ops>
VP<Ops> vp_scale(const Ops& ops, const VP<Ops>& a, const typename Ops::E& c) {
  VP<Ops> r;
  if (ops.is_zero(c)) return r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(ops.mul(x, c));
  return r;
}

// exact division over the field; throws on a nonzero remainder
template <class Ops>
VP<Ops> vp_div_exact(const Ops& ops, VP<Ops> a, const VP<Ops>& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  VP<Ops> q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, ops.zero());
  while (!a.empty() && a.size() >= b.size()) {
    typename Ops::E c = ops.div(a.back(), b.back());
    int shift = vp_deg<Ops>(a) - vp_deg<Ops>(b);
    q[shift] = c;
    VP<Ops> t(shift, ops.zero());
    for (const auto& x : b) t.push_back(ops.mul(x, c));
    a = vp_sub(ops, a, t);
  }
  if (!a.empty()) throw std::logic_error("inexact univariate division");
  vp_trim(ops, q);
  return q;
}

template <class Ops>
VP<Ops> vp_gcd(const Ops& ops, VP<Ops> a, VP<Ops> b) {
  vp_trim(ops, a);
  vp_trim(ops, b);
  while (!b.empty()) {
    // monic Euclid keeps coefficients tame over Q
    VP<Ops> bm = vp_scale(ops, b, ops.inv(b.back()));
    VP<Ops> r = a;
    while (!r.empty() && r.size() >= bm.size()) {
      typename Ops::E c = r.back();
      int shift = vp_deg<Ops>(r) - vp_deg<Ops>(bm);
      VP<Ops> t(shift, ops.zero());
      for (const auto& x : bm) t.push_back(ops.mul(x, c));
      r = vp_sub(ops, r, t);
    }
    a = bm;
    b = r;
  }
  if (!a.empty()) a = vp_scale(ops, a, ops.inv(a.back()));
  return a;
}

// bivariate polynomials: coefficient of y^j is a VP in x
template <class Ops>
using BP = std::vector<VP<Ops>>;

template <class Ops>
void bp_trim(BP<Ops>& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

template <class Ops>
int bp_deg(const BP<Ops>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class Ops>
BP<Ops> bp_sub(const Ops& ops, const BP<Ops>& a, const BP<Ops>& b) {
  BP<Ops> r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = vp_sub(ops, r[i], b[i]);
  bp_trim<Ops>(r);
  return r;
}

template <class Ops>
BP<Ops> bp_scale_vp(const Ops& ops, const BP<Ops>& a, const VP<Ops>& c) {
  BP<Ops> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = vp_mul(ops, a[i], c);
  bp_trim<Ops>(r);
  return r;
}

template <class Ops>
VP<Ops> bp_content(const Ops& ops, const BP<Ops>& a) {
  VP<Ops> g;
  for (const auto& c : a) g = vp_gcd(ops, g, c);
  return g;
}

template <class Ops>
BP<Ops> bp_primitive(const Ops& ops, const BP<Ops>& a) {
  VP<Ops> cont = bp_content(ops, a);
  if (cont.empty()) return {};
  BP<Ops> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i].empty() ? VP<Ops>{} : vp_div_exact(ops, a[i], cont);
  return r;
}

// pseudo-remainder of a by b in y
template <class Ops>
BP<Ops> bp_prem(const Ops& ops, BP<Ops> a, const BP<Ops>& b) {
  int db = bp_deg<Ops>(b);
  while (bp_deg<Ops>(a) >= db && !a.empty()) {
    int shift = bp_deg<Ops>(a) - db;
    VP<Ops> la = a.back();
    BP<Ops> bs(shift);
    for (const auto& c : b) bs.push_back(vp_mul(ops, c, la));
    a = bp_sub(ops, bp_scale_vp(ops, a, b.back()), bs);
  }
  return a;
}

template <class Ops>
BP<Ops> bp_gcd(const Ops& ops, BP<Ops> a, BP<Ops> b) {
  bp_trim<Ops>(a);
  bp_trim<Ops>(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  VP<Ops> cg = vp_gcd(ops, bp_content(ops, a), bp_content(ops, b));
  a = bp_primitive(ops, a);
  b = bp_primitive(ops, b);
  while (true) {
    if (bp_deg<Ops>(a) < bp_deg<Ops>(b)) std::swap(a, b);
    BP<Ops> r = bp_prem(ops, a, b);
    bp_trim<Ops>(r);
    if (r.empty()) break;
    a = b;
    b = bp_primitive(ops, r);
  }
  return bp_scale_vp(ops, bp_primitive(ops, b), cg);
}

// exact division in y with exact coefficient division in x
template <class Ops>
BP<Ops> bp_div_exact(const Ops& ops, BP<Ops> a, const BP<Ops>& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  bp_trim<Ops>(a);
  BP<Ops> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1);
  while (!a.empty() && a.size() >= b.size()) {
    VP<Ops> c = vp_div_exact(ops, a.back(), b.back());
    int shift = bp_deg<Ops>(a) - bp_deg<Ops>(b);
    q[shift] = c;
    BP<Ops> t(shift);
    for (const auto& bc : b) t.push_back(vp_mul(ops, bc, c));
    a = bp_sub(ops, a, t);
  }
  if (!a.empty()) throw std::logic_error("inexact bivariate division");
  bp_trim<Ops>(q);
  return q;
}

int tri_zpower(const TriPoly& p) {
  int zp = p.degree();
  for (const auto& [k, c] : p.terms()) {
    (void)c;
    zp = std::min(zp, p.degree() - k.first - k.second);
  }
  return zp;
}

template <class Ops>
BP<Ops> dehomogenize(const Ops& ops, const TriPoly& p) {
  BP<Ops> b;
  for (const auto& [k, c] : p.terms()) {
    auto [i, j] = k;
    if (bp_deg<Ops>(b) < j) b.resize(j + 1);
    if (vp_deg<Ops>(b[j]) < i) b[j].resize(i + 1, ops.zero());
    b[j][i] = ops.from_scalar(c);
  }
  for (auto& row : b) vp_trim(ops, row);
  bp_trim<Ops>(b);
  return b;
}

template <class Ops>
int bp_total_degree(const BP<Ops>& b) {
  int d = -1;
  for (int j = 0; j < static_cast<int>(b.size()); ++j)
    if (!b[j].empty()) d = std::max(d, j + vp_deg<Ops>(b[j]));
  return d;
}

template <class Ops>
TriPoly homogenize(const Ops& ops, const BP<Ops>& b, int deg, int zpow) {
  TriPoly p(ops.field, deg + zpow);
  for (int j = 0; j < static_cast<int>(b.size()); ++j)
    for (int i = 0; i < static_cast<int>(b[j].size()); ++i)
      if (!ops.is_zero(b[j][i])) p.add_term(i, j, ops.to_scalar(b[j][i]));
  return p;
}

template <class Ops>
TriPoly tri_gcd_impl(const Ops& ops, const TriPoly& a, const TriPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int zc = std::min(tri_zpower(a), tri_zpower(b));
  BP<Ops> g = bp_gcd(ops, dehomogenize(ops, a), dehomogenize(ops, b));
  return homogenize(ops, g, bp_total_degree<Ops>(g), zc);
}

template <class Ops>
TriPoly tri_divide_exact_impl(const Ops& ops, const TriPoly& a, const TriPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_zero()) return TriPoly(ops.field, a.degree() - b.degree());
  int za = tri_zpower(a), zb = tri_zpower(b);
  if (za < zb) throw std::logic_error("inexact division: z power");
  BP<Ops> q = bp_div_exact(ops, dehomogenize(ops, a), dehomogenize(ops, b));
  int target = a.degree() - b.degree();
  int qdeg = bp_total_degree<Ops>(q);
  if (qdeg > target) throw std::logic_error("inexact division: degree");
  return homogenize(ops, q, qdeg, target - qdeg);
}

// Homogeneous forms in the dense dehomogenized representation, used to
// keep the composition loop off the term-map arithmetic.
template <class Ops>
struct HForm {
  int deg = 0;
  BP<Ops> b;
};

template <class Ops>
HForm<Ops> hf_mul(const Ops& ops, const HForm<Ops>& x, const HForm<Ops>& y) {
  HForm<Ops> r;
  r.deg = x.deg + y.deg;
  if (x.b.empty() || y.b.empty()) return r;
  r.b.assign(x.b.size() + y.b.size() - 1, {});
  for (std::size_t i = 0; i < x.b.size(); ++i)
    for (std::size_t j = 0; j < y.b.size(); ++j)
      r.b[i + j] = vp_add(ops, r.b[i + j], vp_mul(ops, x.b[i], y.b[j]));
  bp_trim<Ops>(r.b);
  return r;
}

template <class Ops>
HForm<Ops> hf_add(const Ops& ops, const HForm<Ops>& x, const HForm<Ops>& y) {
  HForm<Ops> r;
  r.deg = x.deg;
  r.b.assign(std::max(x.b.size(), y.b.size()), {});
  for (std::size_t i = 0; i < x.b.size(); ++i) r.b[i] = x.b[i];
  for (std::size_t i = 0; i < y.b.size(); ++i) r.b[i] = vp_add(ops, r.b[i], y.b[i]);
  bp_trim<Ops>(r.b);
  return r;
}

template <class Ops>
HForm<Ops> hf_scale(const Ops& ops, const HForm<Ops>& x, const typename Ops::E& c) {
  HForm<Ops> r;
  r.deg = x.deg;
  if (ops.is_zero(c)) return r;
  r.b.resize(x.b.size());
  for (std::size_t i = 0; i < x.b.size(); ++i) r.b[i] = vp_scale(ops, x.b[i], c);
  bp_trim<Ops>(r.b);
  return r;
}

}  // namespace

TriPoly tri_gcd(const TriPoly& a, const TriPoly& b) {
  const Field& f = a.field();
  if (f.is_rational()) return tri_gcd_impl(ScalarOps{f}, a, b);
  return tri_gcd_impl(FpOps{f, f.p}, a, b);
}

TriPoly tri_divide_exact(const TriPoly& a, const TriPoly& b) {
  const Field& f = a.field();
  if (f.is_rational()) return tri_divide_exact_impl(ScalarOps{f}, a, b);
  return tri_divide_exact_impl(FpOps{f, f.p}, a, b);
}

namespace {

template <class Ops>
DegreeGrowth degree_growth_run(const Ops& ops, const ProjectiveLinearMap& alpha,
                               int n_max) {
  const Field& f = ops.field;
  DegreeGrowth out;
  // forms start as the identity triple (x, y, z)
  std::array<TriPoly, 3> start{TriPoly::monomial(f, 1, 0, 0),
                               TriPoly::monomial(f, 0, 1, 0),
                               TriPoly::monomial(f, 0, 0, 1)};
  std::array<HForm<Ops>, 3> forms;
  for (int i = 0; i < 3; ++i) {
    forms[i].deg = 1;
    forms[i].b = dehomogenize(ops, start[i]);
  }
  auto to_tri = [&](const HForm<Ops>& h) {
    TriPoly p(f, h.deg);
    for (int j = 0; j < static_cast<int>(h.b.size()); ++j)
      for (int i = 0; i < static_cast<int>(h.b[j].size()); ++i)
        if (!ops.is_zero(h.b[j][i])) p.add_term(i, j, ops.to_scalar(h.b[j][i]));
    return p;
  };
  for (int n = 1; n <= n_max; ++n) {
    std::array<HForm<Ops>, 3> m;
    for (int i = 0; i < 3; ++i) {
      m[i].deg = forms[0].deg;
      for (int j = 0; j < 3; ++j)
        m[i] = hf_add(ops, m[i],
                      hf_scale(ops, forms[j], ops.from_scalar(alpha.at(i, j))));
    }
    std::array<HForm<Ops>, 3> next{hf_mul(ops, m[1], m[2]), hf_mul(ops, m[0], m[2]),
                                   hf_mul(ops, m[0], m[1])};
    for (const auto& p : next)
      if (p.b.empty()) throw std::logic_error("degenerate composite");
    // common factor of the dehomogenized parts, plus the common z power
    auto zpow = [&](const HForm<Ops>& h) {
      int zp = h.deg;
      for (int j = 0; j < static_cast<int>(h.b.size()); ++j)
        for (int i = 0; i < static_cast<int>(h.b[j].size()); ++i)
          if (!ops.is_zero(h.b[j][i])) zp = std::min(zp, h.deg - i - j);
      return zp;
    };
    int zc = std::min({zpow(next[0]), zpow(next[1]), zpow(next[2])});
    BP<Ops> g = bp_gcd(ops, bp_gcd(ops, next[0].b, next[1].b), next[2].b);
    int gdeg = bp_total_degree<Ops>(g) + zc;
    if (gdeg > 0) {
      for (auto& p : next) {
        BP<Ops> q = bp_div_exact(ops, p.b, g);
        p.b = std::move(q);
        p.deg -= gdeg;
      }
    }
    forms = next;
    out.degrees.push_back(forms[0].deg);
    out.forms.push_back({to_tri(forms[0]), to_tri(forms[1]), to_tri(forms[2])});
  }
  return out;
}

}  // namespace

DegreeGrowth degree_growth(const ProjectiveLinearMap& alpha, int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (n_max > 8) throw std::invalid_argument("composition cap exceeded (n_max <= 8)");
  const Field& f = alpha.field();
  if (f.is_rational()) return degree_growth_run(ScalarOps{f}, alpha, n_max);
  return degree_growth_run(FpOps{f, f.p}, alpha, n_max);
}

double dynamical_degree_estimate(const std::vector<int>& degrees) {
  if (degrees.empty()) throw std::invalid_argument("empty degree sequence");
  int n = static_cast<int>(degrees.size());
  return std::pow(static_cast<double>(degrees.back()), 1.0 / n);
}

}  // namespace cremona
