#ifndef QTV_SCALAR_HPP
#define QTV_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qtv {

using Rat = mpq_class;

struct ScalarError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Laurent polynomial in v (= q^{1/2}) and p with rational coefficients.
/// Terms are kept sorted by (v-exponent, p-exponent); zero coefficients are
/// never stored.
class LPoly {
 public:
  struct Mono {
    long long v = 0;
    long long p = 0;
    bool operator==(const Mono&) const = default;
    bool operator<(const Mono& o) const {
      return v != o.v ? v < o.v : p < o.p;
    }
  };
  using Term = std::pair<Mono, Rat>;

  LPoly() = default;
  explicit LPoly(const Rat& c) {
    if (c != 0) t_.push_back({Mono{0, 0}, c});
  }
  static LPoly mono(long long ve, long long pe, Rat c = Rat(1)) {
    LPoly r;
    if (c != 0) r.t_.push_back({Mono{ve, pe}, std::move(c)});
    return r;
  }

  bool is_zero() const { return t_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return t_.size() == 1; }
  size_t size() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }

  LPoly operator+(const LPoly& o) const;
  LPoly operator-(const LPoly& o) const;
  LPoly operator*(const LPoly& o) const;
  LPoly operator-() const;
  LPoly& operator+=(const LPoly& o) { return *this = *this + o; }
  LPoly& operator-=(const LPoly& o) { return *this = *this - o; }
  LPoly& operator*=(const LPoly& o) { return *this = *this * o; }
  bool operator==(const LPoly& o) const { return t_ == o.t_; }

  LPoly scaled(const Rat& c) const;
  /// Substitute v -> v^{-1}, p -> p^{-1} (exponent negation).
  LPoly bar() const;
  /// Exact division; throws if the remainder is nonzero.
  LPoly divexact(const LPoly& d) const;
  Rat eval(const Rat& v0, const Rat& p0) const;

  Mono min_mono() const;  // componentwise minimum of exponents
  const Term& lead() const { return t_.back(); }  // max in (v,p) lex

  static void add_term(std::vector<Term>& acc, const Mono& m, const Rat& c);
  static LPoly from_terms(std::vector<Term> terms);

 private:
  std::vector<Term> t_;
};

/// Element of the fraction field Q(v, p).  Kept normalized: the denominator
/// is a primitive integer polynomial with nonnegative exponents, no monomial
/// factor, positive leading coefficient, and gcd(num, den) = 1.  Equality is
/// therefore structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long n) : num_(LPoly(Rat(static_cast<long>(n)))), den_(LPoly(Rat(1))) { normalize(); }
  explicit Scalar(const Rat& c) : num_(LPoly(c)), den_(LPoly(Rat(1))) { normalize(); }
  Scalar(LPoly num, LPoly den);

  static Scalar zero() { return Scalar(0); }
  static Scalar one() { return Scalar(1); }
  /// v^k, i.e. q^{k/2}.
  static Scalar v_pow(long long k) { return monomial(k, 0); }
  /// q^k = v^{2k}.
  static Scalar q_pow(long long k) { return monomial(2 * k, 0); }
  static Scalar p_pow(long long k) { return monomial(0, k); }
  static Scalar q() { return q_pow(1); }
  static Scalar p() { return p_pow(1); }
  static Scalar monomial(long long ve, long long pe, Rat c = Rat(1));

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  const LPoly& num() const { return num_; }
  const LPoly& den() const { return den_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  bool operator==(const Scalar& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;
  /// Coefficient conjugation q -> q^{-1}, p -> p^{-1}.
  Scalar bar() const;
  /// Substitute p -> 1.
  Scalar set_p_one() const;
  Rat eval(const Rat& v0, const Rat& p0) const;

  std::string str() const;  // canonical text form, see expr.hpp

 private:
  void normalize();
  LPoly num_;                 // Laurent
  LPoly den_ = LPoly(Rat(1));  // proper polynomial, normalized
};

/// [m] with q_i = q^d:  (q^{dm} - q^{-dm}) / (q^d - q^{-d}).
Scalar quantum_integer(long long m, long long d = 1);
/// [m]_d!
Scalar quantum_factorial(long long m, long long d = 1);
/// [m choose n]_d; requires 0 <= n <= m.
Scalar quantum_binomial(long long m, long long n, long long d = 1);

struct Partition {
  std::vector<long long> parts;  // weakly decreasing, positive
  long long length() const { return static_cast<long long>(parts.size()); }
  /// m_lambda! = prod over part multiplicities of m_i!
  Rat multiplicity_factorial() const;
};

/// All partitions of k in lexicographically decreasing order.
std::vector<Partition> partitions_of(long long k);

}  // namespace qtv

#endif
