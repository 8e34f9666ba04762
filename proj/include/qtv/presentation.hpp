#ifndef QTV_PRESENTATION_HPP
#define QTV_PRESENTATION_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "qtv/cartan.hpp"
#include "qtv/ncpoly.hpp"

namespace qtv {

enum class RelClass { ExactRewrite, Residual };

struct Relation {
  std::string id;
  NCPoly element;  // interpreted as = 0 in the quotient
  RelClass cls = RelClass::Residual;
};

/// A presentation: alphabet, graded relations, and the exact-rewrite rule
/// tables that drive straightening.  Exact rules are stored as commutation
/// data; residual (Serre-type) relations are listed and consumed by the
/// linear ideal-membership oracle.
class Presentation {
 public:
  Presentation(std::string name, CartanData cartan, int window)
      : name_(std::move(name)), cartan_(std::move(cartan)), window_(window) {}

  const std::string& name() const { return name_; }
  const CartanData& cartan() const { return cartan_; }
  int rank() const { return cartan_.n; }
  int window() const { return window_; }

  // -- alphabet -------------------------------------------------------------
  void add_letter(const Gen& g);
  bool has_letter(const Gen& g) const;
  const std::vector<Gen>& alphabet() const { return alphabet_; }
  /// Group-like letters declared invertible come in (g, g^{-1}) pairs.
  bool in_window(int deg) const { return deg >= -window_ && deg <= window_; }

  // -- exact rule data --------------------------------------------------------
  /// plus * minus = minus * plus + correction   (x-type cross rule)
  struct PairRule {
    bool blocked = false;  // true: rewrite exists but leaves the degree window
    NCPoly correction;
    std::string rel_id;
  };
  void set_cross_rule(const Gen& plus, const Gen& minus, PairRule rule);
  const PairRule* cross_rule(const Gen& plus, const Gen& minus) const;

  /// [a, x] = correction   (mode-shift rule; applied in both directions)
  void set_ax_rule(const Gen& a, const Gen& x, PairRule rule);
  const PairRule* ax_rule(const Gen& a, const Gen& x) const;

  /// [a_pos, a_neg] = correction (group-like polynomial; zero off-shell)
  void set_aa_rule(const Gen& apos, const Gen& aneg, PairRule rule);
  const PairRule* aa_rule(const Gen& apos, const Gen& aneg) const;

  /// Conjugation exponent: g * x = q^c x * g for group-like g; derived from
  /// the gradings.
  long long conj_exponent(const Gen& g, const Gen& x) const;

  // -- relations --------------------------------------------------------------
  void add_residual(Relation r);
  const std::vector<Relation>& residual_relations() const { return residual_; }

  /// Registry of relation elements by id (exact-rule instances are registered
  /// lazily as they are used); serves certificate replay.
  void register_relation(const std::string& id, const NCPoly& element) const;
  std::optional<NCPoly> relation_element(const std::string& id) const;

  MultiDegree degree(WordId w) const { return word_degree(w, cartan_.n); }
  MultiDegree degree(const Gen& g) const { return gen_degree(g, cartan_.n); }

  // -- straighten memo (owned here so concurrent verifiers share it) ---------
  struct NormalForm {
    NCPoly nf;
    bool window_ok = true;
  };
  const NormalForm* memo_find(WordId w) const;
  void memo_store(WordId w, NormalForm nf) const;

 private:
  static uint64_t pack(const Gen& g);
  static std::pair<uint64_t, uint64_t> pair_key(const Gen& a, const Gen& b);
  using RuleMap = std::map<std::pair<uint64_t, uint64_t>, PairRule>;

  std::string name_;
  CartanData cartan_;
  int window_;
  std::vector<Gen> alphabet_;
  std::unordered_map<uint64_t, char> alphabet_set_;
  RuleMap cross_, ax_, aa_;
  std::vector<Relation> residual_;

  mutable std::shared_mutex reg_mu_;
  mutable std::unordered_map<std::string, NCPoly> registry_;
  mutable std::shared_mutex memo_mu_;
  mutable std::unordered_map<WordId, std::shared_ptr<const NormalForm>> memo_;
};

using PresentationPtr = std::shared_ptr<Presentation>;

}  // namespace qtv

#endif
