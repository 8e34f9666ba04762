#ifndef QTV_NCPOLY_HPP
#define QTV_NCPOLY_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtv/scalar.hpp"
#include "qtv/word.hpp"

namespace qtv {

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Root-lattice vector over the nodes plus the homogeneous degree (the
/// eigenvalue of conjugation by q^{d1}).
struct MultiDegree {
  std::vector<long long> root;  // length n+1; empty means zero
  long long hdeg = 0;

  bool operator==(const MultiDegree&) const = default;
  bool is_zero() const;
  MultiDegree& operator+=(const MultiDegree& o);
  MultiDegree operator+(const MultiDegree& o) const;
  MultiDegree operator-() const;
  std::string str() const;
};

/// Multidegree of one letter in a rank-n alphabet (nodes modulo n+1).
MultiDegree gen_degree(const Gen& g, int n);
MultiDegree word_degree(WordId w, int n);

/// Finitely supported Scalar-valued map on words; the free-algebra element.
/// Terms are sorted by WordId (storage order, not the straightening order).
class NCPoly {
 public:
  using Term = std::pair<WordId, Scalar>;

  NCPoly() = default;
  static NCPoly zero() { return {}; }
  static NCPoly unit(Scalar c = Scalar::one());
  static NCPoly letter(const Gen& g, Scalar c = Scalar::one());
  static NCPoly word(WordId w, Scalar c = Scalar::one());
  static NCPoly word(const std::vector<Gen>& letters, Scalar c = Scalar::one());
  static NCPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }
  Scalar coeff(WordId w) const;

  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly operator-() const;
  NCPoly operator*(const NCPoly& o) const;
  NCPoly& operator+=(const NCPoly& o) { return *this = *this + o; }
  NCPoly& operator-=(const NCPoly& o) { return *this = *this - o; }
  NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }
  bool operator==(const NCPoly& o) const { return t_ == o.t_; }

  NCPoly scaled(const Scalar& c) const;
  NCPoly operator*(const Scalar& c) const { return scaled(c); }
  /// Apply f to every coefficient.
  NCPoly map_coeffs(const std::function<Scalar(const Scalar&)>& f) const;

  /// Largest word under the straightening order, or nullopt if zero.
  std::optional<WordId> leading_word() const;

  /// Common multidegree of all words, or nullopt if inhomogeneous.
  std::optional<MultiDegree> multidegree(int n) const;

  std::string str() const;

 private:
  std::vector<Term> t_;
};

inline NCPoly operator*(const Scalar& c, const NCPoly& x) { return x.scaled(c); }

/// [a, b]_v = ab - v ba.
NCPoly bracket_v(const NCPoly& a, const NCPoly& b, const Scalar& v);
/// Right-nested convention: [a1, ..., [a_{s-1}, a_s]_{v1}]_{(v2, ..., v_{s-1})};
/// vs[0] is the innermost subscript.
NCPoly bracket_round(const std::vector<NCPoly>& elems, const std::vector<Scalar>& vs);
/// Left-nested convention: [[a1, a2]_{v1}, ..., a_s]; vs[0] innermost.
NCPoly bracket_angle(const std::vector<NCPoly>& elems, const std::vector<Scalar>& vs);

using GenMap = std::function<std::optional<NCPoly>(const Gen&)>;

/// Multiplicative extension of a letter map.
NCPoly apply_hom(const GenMap& map, const NCPoly& x);
/// Anti-multiplicative extension; when `conjugate` is set the coefficients are
/// conjugated q -> q^{-1}, p -> p^{-1} (the Chevalley anti-involution flag).
NCPoly apply_antihom(const GenMap& map, const NCPoly& x, bool conjugate = false);

/// Finitely supported map on tuples of words: an element of A^{\otimes k}.
class TensorPoly {
 public:
  using Key = std::vector<WordId>;
  using Term = std::pair<Key, Scalar>;

  TensorPoly() = default;
  explicit TensorPoly(int arity) : arity_(arity) {}
  static TensorPoly unit(int arity);
  /// a (x) b for NCPoly factors.
  static TensorPoly tensor(const NCPoly& a, const NCPoly& b);
  static TensorPoly tensor(const std::vector<NCPoly>& factors);

  int arity() const { return arity_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }

  TensorPoly operator+(const TensorPoly& o) const;
  TensorPoly operator-(const TensorPoly& o) const;
  TensorPoly operator-() const;
  /// Componentwise product: (a(x)b)(c(x)d) = ac (x) bd.
  TensorPoly operator*(const TensorPoly& o) const;
  TensorPoly& operator+=(const TensorPoly& o) { return *this = *this + o; }
  TensorPoly& operator-=(const TensorPoly& o) { return *this = *this - o; }
  TensorPoly& operator*=(const TensorPoly& o) { return *this = *this * o; }
  bool operator==(const TensorPoly& o) const { return arity_ == o.arity_ && t_ == o.t_; }

  TensorPoly scaled(const Scalar& c) const;
  /// Swap the two factors (arity 2 only).
  TensorPoly swapped() const;
  /// Extract factor `slot` of each term as an NCPoly-weighted decomposition:
  /// rebuilds sum of c * w_other...  Used via apply_to_slot.
  TensorPoly apply_to_slot(int slot, const std::function<NCPoly(const NCPoly&)>& f) const;
  /// Replace factor `slot` by the tensor expansion f(factor), splicing the
  /// result's factors in place (used for (Delta (x) id) style maps).
  TensorPoly expand_slot(int slot, const std::function<TensorPoly(const NCPoly&)>& f) const;

  static TensorPoly from_terms(int arity, std::vector<Term> terms);

  std::string str() const;

 private:
  int arity_ = 2;
  std::vector<Term> t_;  // sorted by key
};

inline TensorPoly operator*(const Scalar& c, const TensorPoly& x) { return x.scaled(c); }

}  // namespace qtv

#endif
