#include "qtv/scalar.hpp"

#include <algorithm>
#include <map>

namespace qtv {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw ScalarError("exponent overflow");
  return r;
}

}  // namespace

void LPoly::add_term(std::vector<Term>& acc, const Mono& m, const Rat& c) {
  auto it = std::lower_bound(acc.begin(), acc.end(), m,
                             [](const Term& t, const Mono& k) { return t.first < k; });
  if (it != acc.end() && it->first == m) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  } else if (c != 0) {
    acc.insert(it, {m, c});
  }
}

LPoly LPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LPoly r;
  for (auto& t : terms) {
    if (!r.t_.empty() && r.t_.back().first == t.first) {
      r.t_.back().second += t.second;
      if (r.t_.back().second == 0) r.t_.pop_back();
    } else if (t.second != 0) {
      r.t_.push_back(std::move(t));
    }
  }
  return r;
}

bool LPoly::is_one() const {
  return t_.size() == 1 && t_[0].first == Mono{0, 0} && t_[0].second == 1;
}

LPoly LPoly::operator+(const LPoly& o) const {
  std::vector<Term> acc;
  acc.reserve(t_.size() + o.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    if (t_[i].first < o.t_[j].first) {
      acc.push_back(t_[i++]);
    } else if (o.t_[j].first < t_[i].first) {
      acc.push_back(o.t_[j++]);
    } else {
      Rat c = t_[i].second + o.t_[j].second;
      if (c != 0) acc.push_back({t_[i].first, c});
      ++i, ++j;
    }
  }
  for (; i < t_.size(); ++i) acc.push_back(t_[i]);
  for (; j < o.t_.size(); ++j) acc.push_back(o.t_[j]);
  LPoly r;
  r.t_ = std::move(acc);
  return r;
}

LPoly LPoly::operator-() const {
  LPoly r = *this;
  for (auto& t : r.t_) t.second = -t.second;
  return r;
}

LPoly LPoly::operator-(const LPoly& o) const { return *this + (-o); }

LPoly LPoly::operator*(const LPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::map<Mono, Rat> acc;
  for (const auto& a : t_)
    for (const auto& b : o.t_) {
      Mono m{checked_add(a.first.v, b.first.v), checked_add(a.first.p, b.first.p)};
      Rat c = a.second * b.second;
      auto [it, fresh] = acc.emplace(m, c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) acc.erase(it);
      }
    }
  LPoly r;
  r.t_.assign(acc.begin(), acc.end());
  return r;
}

LPoly LPoly::scaled(const Rat& c) const {
  if (c == 0) return {};
  LPoly r = *this;
  for (auto& t : r.t_) t.second *= c;
  return r;
}

LPoly LPoly::bar() const {
  std::vector<Term> acc;
  acc.reserve(t_.size());
  for (const auto& t : t_) acc.push_back({Mono{-t.first.v, -t.first.p}, t.second});
  return from_terms(std::move(acc));
}

LPoly::Mono LPoly::min_mono() const {
  if (t_.empty()) return Mono{0, 0};
  Mono m{t_[0].first.v, t_[0].first.p};
  for (const auto& t : t_) {
    m.v = std::min(m.v, t.first.v);
    m.p = std::min(m.p, t.first.p);
  }
  return m;
}

LPoly LPoly::divexact(const LPoly& d) const {
  if (d.is_zero()) throw ScalarError("division by zero polynomial");
  LPoly rem = *this;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const Term& lr = rem.lead();
    const Term& ld = d.lead();
    Mono m{lr.first.v - ld.first.v, lr.first.p - ld.first.p};
    Rat c = lr.second / ld.second;
    quot.push_back({m, c});
    rem -= d * mono(m.v, m.p, c);
    if (!rem.is_zero() && !(rem.lead().first < lr.first))
      throw ScalarError("inexact polynomial division");
  }
  return from_terms(std::move(quot));
}

Rat LPoly::eval(const Rat& v0, const Rat& p0) const {
  auto pw = [](const Rat& x, long long e) {
    if (x == 0) throw ScalarError("evaluation at zero with negative exponent");
    Rat base = e >= 0 ? x : Rat(1) / x;
    unsigned long long n = e >= 0 ? e : -e;
    Rat r(1);
    while (n) {
      if (n & 1) r *= base;
      base *= base;
      n >>= 1;
    }
    return r;
  };
  Rat s(0);
  for (const auto& t : t_) s += t.second * pw(v0, t.first.v) * pw(p0, t.first.p);
  return s;
}

// ---------------------------------------------------------------------------
// Bivariate gcd over Q[v,p], via integer primitive PRS in Z[p][v].

namespace {

using ZU = std::vector<mpz_class>;  // dense in p, index = exponent

void zu_trim(ZU& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

bool zu_zero(const ZU& a) { return a.empty(); }

mpz_class zu_content(const ZU& a) {
  mpz_class g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZU zu_scale(const ZU& a, const mpz_class& c) {
  ZU r = a;
  for (auto& x : r) x *= c;
  return r;
}

ZU zu_divexact_z(const ZU& a, const mpz_class& c) {
  ZU r = a;
  for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

ZU zu_mul(const ZU& a, const ZU& b) {
  if (zu_zero(a) || zu_zero(b)) return {};
  ZU r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  zu_trim(r);
  return r;
}

ZU zu_sub(const ZU& a, const ZU& b) {
  ZU r = a;
  if (r.size() < b.size()) r.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  zu_trim(r);
  return r;
}

// primitive PRS gcd in Z[p]
ZU zu_gcd(ZU a, ZU b) {
  zu_trim(a);
  zu_trim(b);
  if (zu_zero(a)) return b;
  if (zu_zero(b)) return a;
  auto prim = [](ZU x) {
    mpz_class c = zu_content(x);
    if (c == 0) return x;
    x = zu_divexact_z(x, c);
    if (!x.empty() && x.back() < 0)
      for (auto& t : x) t = -t;
    return x;
  };
  mpz_class cont;
  mpz_gcd(cont.get_mpz_t(), zu_content(a).get_mpz_t(), zu_content(b).get_mpz_t());
  a = prim(std::move(a));
  b = prim(std::move(b));
  while (!zu_zero(b)) {
    // pseudo-remainder of a by b
    ZU r = a;
    while (!zu_zero(r) && r.size() >= b.size()) {
      mpz_class lc = b.back();
      ZU scaled = zu_scale(r, lc);
      ZU shift(r.size() - b.size(), 0);
      ZU mult = shift;
      mult.push_back(r.back());
      scaled = zu_sub(scaled, zu_mul(b, mult));
      r = std::move(scaled);
      zu_trim(r);
    }
    a = std::move(b);
    b = prim(std::move(r));
  }
  a = prim(std::move(a));
  ZU contp{cont};
  return zu_mul(a, contp);
}

using ZV = std::map<long long, ZU>;  // v-exponent -> Z[p] coefficient

ZV to_zv(const LPoly& f, mpz_class& denom_out) {
  // clear rational denominators
  mpz_class lcm = 1;
  for (const auto& t : f.terms())
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.second.get_den().get_mpz_t());
  ZV r;
  for (const auto& t : f.terms()) {
    mpz_class c = t.second.get_num() * (lcm / t.second.get_den());
    ZU& cf = r[t.first.v];
    if (cf.size() <= static_cast<size_t>(t.first.p)) cf.resize(t.first.p + 1, 0);
    cf[t.first.p] += c;
  }
  for (auto it = r.begin(); it != r.end();) {
    zu_trim(it->second);
    it = zu_zero(it->second) ? r.erase(it) : std::next(it);
  }
  denom_out = lcm;
  return r;
}

LPoly from_zv(const ZV& f) {
  std::vector<LPoly::Term> terms;
  for (const auto& [ve, cf] : f)
    for (size_t pe = 0; pe < cf.size(); ++pe)
      if (cf[pe] != 0) terms.push_back({{ve, static_cast<long long>(pe)}, Rat(cf[pe])});
  return LPoly::from_terms(std::move(terms));
}

bool zv_zero(const ZV& a) { return a.empty(); }

ZU zv_content(const ZV& a) {
  ZU g;
  for (const auto& [e, c] : a) g = zu_gcd(g, c);
  return g;
}

ZV zv_scale_u(const ZV& a, const ZU& c) {
  ZV r;
  for (const auto& [e, x] : a) {
    ZU m = zu_mul(x, c);
    if (!zu_zero(m)) r[e] = std::move(m);
  }
  return r;
}

ZV zv_divexact_u(const ZV& a, const ZU& c);

ZV zv_prim(const ZV& a, ZU* content_out = nullptr) {
  if (zv_zero(a)) {
    if (content_out) content_out->clear();
    return a;
  }
  ZU c = zv_content(a);
  ZV r = zv_divexact_u(a, c);
  if (content_out) *content_out = c;
  return r;
}

// exact division of Z[p] polynomials (must divide)
ZU zu_divexact(const ZU& a, const ZU& b) {
  if (zu_zero(a)) return {};
  ZU rem = a, q(a.size() - b.size() + 1, 0);
  while (!zu_zero(rem)) {
    if (rem.size() < b.size()) throw ScalarError("inexact Z[p] division");
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), rem.back().get_mpz_t(), b.back().get_mpz_t());
    size_t sh = rem.size() - b.size();
    q[sh] = c;
    ZU mult(sh, 0);
    mult.push_back(c);
    rem = zu_sub(rem, zu_mul(b, mult));
  }
  zu_trim(q);
  return q;
}

ZV zv_divexact_u(const ZV& a, const ZU& c) {
  ZV r;
  for (const auto& [e, x] : a) r[e] = zu_divexact(x, c);
  return r;
}

ZV zv_sub(const ZV& a, const ZV& b) {
  ZV r = a;
  for (const auto& [e, x] : b) {
    ZU d = zu_sub(r.count(e) ? r[e] : ZU{}, x);
    if (zu_zero(d))
      r.erase(e);
    else
      r[e] = std::move(d);
  }
  return r;
}

ZV zv_mul(const ZV& a, const ZV& b) {
  ZV r;
  for (const auto& [ea, xa] : a)
    for (const auto& [eb, xb] : b) {
      ZU m = zu_mul(xa, xb);
      if (zu_zero(m)) continue;
      ZU d = zu_sub(r.count(ea + eb) ? r[ea + eb] : ZU{}, zu_scale(m, mpz_class(-1)));
      if (zu_zero(d))
        r.erase(ea + eb);
      else
        r[ea + eb] = std::move(d);
    }
  return r;
}

long long zv_deg(const ZV& a) { return a.empty() ? -1 : a.rbegin()->first; }

// primitive PRS gcd in Z[p][v]; inputs are proper (exponents >= 0)
ZV zv_gcd(ZV a, ZV b) {
  if (zv_zero(a)) return b;
  if (zv_zero(b)) return a;
  ZU ca, cb;
  a = zv_prim(a, &ca);
  b = zv_prim(b, &cb);
  ZU cont = zu_gcd(ca, cb);
  while (!zv_zero(b)) {
    // pseudo-remainder of a by b in v
    ZV r = a;
    while (!zv_zero(r) && zv_deg(r) >= zv_deg(b)) {
      ZU lcb = b.rbegin()->second;
      ZU lcr = r.rbegin()->second;
      long long sh = zv_deg(r) - zv_deg(b);
      ZV mult;
      mult[sh] = lcr;
      r = zv_sub(zv_scale_u(r, lcb), zv_mul(b, mult));
    }
    a = std::move(b);
    b = zv_prim(r);
  }
  a = zv_prim(a);
  ZV cv;
  if (!zu_zero(cont)) cv[0] = cont;
  return zv_mul(a, cv);
}

}  // namespace

// ---------------------------------------------------------------------------

Scalar Scalar::monomial(long long ve, long long pe, Rat c) {
  Scalar s;
  s.num_ = LPoly::mono(ve, pe, std::move(c));
  s.den_ = LPoly(Rat(1));
  return s;
}

Scalar::Scalar(LPoly num, LPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ScalarError("division by zero");
  normalize();
}

void Scalar::normalize() {
  if (den_.is_zero()) throw ScalarError("division by zero");
  if (num_.is_zero()) {
    den_ = LPoly(Rat(1));
    return;
  }
  if (den_.is_one()) {
    // fast path: nothing to cancel
  } else {
    // strip monomial parts: den becomes proper with min exponents 0
    LPoly::Mono mn = num_.min_mono(), md = den_.min_mono();
    LPoly pnum = num_ * LPoly::mono(-mn.v, -mn.p);
    LPoly pden = den_ * LPoly::mono(-md.v, -md.p);
    mpz_class dn, dd;
    ZV zn = to_zv(pnum, dn), zd = to_zv(pden, dd);
    ZV g = zv_gcd(zn, zd);
    bool nontrivial = !(zv_deg(g) == 0 && g.begin()->second.size() == 1);
    LPoly gg = from_zv(g);
    if (nontrivial) {
      pnum = pnum.divexact(gg);
      pden = pden.divexact(gg);
    }
    num_ = pnum * LPoly::mono(mn.v - md.v, mn.p - md.p);
    den_ = pden;
  }
  // make den primitive over Z with positive leading coefficient,
  // no monomial factor; fold everything else into num
  LPoly::Mono md = den_.min_mono();
  if (md.v != 0 || md.p != 0) {
    den_ = den_ * LPoly::mono(-md.v, -md.p);
    num_ = num_ * LPoly::mono(-md.v, -md.p);
  }
  mpz_class lcmd = 1;
  for (const auto& t : den_.terms())
    mpz_lcm(lcmd.get_mpz_t(), lcmd.get_mpz_t(), t.second.get_den().get_mpz_t());
  mpz_class cont = 0;
  for (const auto& t : den_.terms()) {
    mpz_class c = t.second.get_num() * (lcmd / t.second.get_den());
    mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), c.get_mpz_t());
  }
  Rat scale = Rat(lcmd) / Rat(cont);
  if (den_.lead().second < 0) scale = -scale;
  den_ = den_.scaled(scale);
  num_ = num_.scaled(scale);
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return Scalar();
  return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ScalarError("division by zero");
  return Scalar(den_, num_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::bar() const { return Scalar(num_.bar(), den_.bar()); }

Scalar Scalar::set_p_one() const {
  auto subst = [](const LPoly& f) {
    std::vector<LPoly::Term> terms;
    for (const auto& t : f.terms()) terms.push_back({{t.first.v, 0}, t.second});
    return LPoly::from_terms(std::move(terms));
  };
  return Scalar(subst(num_), subst(den_));
}

Rat Scalar::eval(const Rat& v0, const Rat& p0) const {
  Rat d = den_.eval(v0, p0);
  if (d == 0) throw ScalarError("denominator vanishes at evaluation point");
  return num_.eval(v0, p0) / d;
}

// ---------------------------------------------------------------------------

Scalar quantum_integer(long long m, long long d) {
  if (d <= 0) throw ScalarError("quantum_integer: d must be positive");
  if (m == 0) return Scalar::zero();
  long long a = m > 0 ? m : -m;
  std::vector<LPoly::Term> terms;
  for (long long j = 0; j < a; ++j)
    terms.push_back({{2 * d * (a - 1 - 2 * j), 0}, Rat(m > 0 ? 1 : -1)});
  return Scalar(LPoly::from_terms(std::move(terms)), LPoly(Rat(1)));
}

Scalar quantum_factorial(long long m, long long d) {
  if (m < 0) throw ScalarError("quantum_factorial: m must be nonnegative");
  Scalar r = Scalar::one();
  for (long long j = 2; j <= m; ++j) r *= quantum_integer(j, d);
  return r;
}

Scalar quantum_binomial(long long m, long long n, long long d) {
  if (n < 0 || n > m) throw ScalarError("quantum_binomial: n out of range");
  // [m]! / ([n]! [m-n]!) via exact polynomial division
  Scalar num = Scalar::one();
  for (long long j = m - n + 1; j <= m; ++j) num *= quantum_integer(j, d);
  Scalar den = quantum_factorial(n, d);
  LPoly q = (num.num() * den.den()).divexact(den.num() * num.den());
  return Scalar(q, LPoly(Rat(1)));
}

Rat Partition::multiplicity_factorial() const {
  Rat r(1);
  size_t i = 0;
  while (i < parts.size()) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    for (size_t k = 2; k <= j - i; ++k) r *= Rat(static_cast<long>(k));
    i = j;
  }
  return r;
}

namespace {
void partitions_rec(long long k, long long maxpart, std::vector<long long>& cur,
                    std::vector<Partition>& out) {
  if (k == 0) {
    out.push_back(Partition{cur});
    return;
  }
  for (long long first = std::min(k, maxpart); first >= 1; --first) {
    cur.push_back(first);
    partitions_rec(k - first, first, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(long long k) {
  if (k < 1) throw ScalarError("partitions_of: k must be positive");
  std::vector<Partition> out;
  std::vector<long long> cur;
  partitions_rec(k, k, cur, out);
  return out;
}

}  // namespace qtv
