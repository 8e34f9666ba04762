#include "qtv/presentation.hpp"

namespace qtv {

uint64_t Presentation::pack(const Gen& g) {
  return (static_cast<uint64_t>(g.fam) << 48) |
         (static_cast<uint64_t>(static_cast<uint16_t>(g.node)) << 32) |
         static_cast<uint64_t>(static_cast<uint32_t>(g.deg));
}

std::pair<uint64_t, uint64_t> Presentation::pair_key(const Gen& a, const Gen& b) {
  return {pack(a), pack(b)};
}

void Presentation::add_letter(const Gen& g) {
  uint64_t k = pack(g);
  if (alphabet_set_.count(k)) return;
  alphabet_set_[k] = 1;
  alphabet_.push_back(g);
}

bool Presentation::has_letter(const Gen& g) const {
  return alphabet_set_.count(pack(g)) > 0;
}

void Presentation::set_cross_rule(const Gen& plus, const Gen& minus, PairRule rule) {
  cross_[pair_key(plus, minus)] = std::move(rule);
}

const Presentation::PairRule* Presentation::cross_rule(const Gen& plus,
                                                       const Gen& minus) const {
  auto it = cross_.find(pair_key(plus, minus));
  return it == cross_.end() ? nullptr : &it->second;
}

void Presentation::set_ax_rule(const Gen& a, const Gen& x, PairRule rule) {
  ax_[pair_key(a, x)] = std::move(rule);
}

const Presentation::PairRule* Presentation::ax_rule(const Gen& a, const Gen& x) const {
  auto it = ax_.find(pair_key(a, x));
  return it == ax_.end() ? nullptr : &it->second;
}

void Presentation::set_aa_rule(const Gen& apos, const Gen& aneg, PairRule rule) {
  aa_[pair_key(apos, aneg)] = std::move(rule);
}

const Presentation::PairRule* Presentation::aa_rule(const Gen& apos, const Gen& aneg) const {
  auto it = aa_.find(pair_key(apos, aneg));
  return it == aa_.end() ? nullptr : &it->second;
}

long long Presentation::conj_exponent(const Gen& g, const Gen& x) const {
  MultiDegree d = degree(x);
  switch (g.fam) {
    case Fam::K:
      return cartan_.form(d.root, g.node);
    case Fam::KInv:
      return -cartan_.form(d.root, g.node);
    case Fam::GammaHalf:
    case Fam::GammaHalfInv:
      return 0;
    case Fam::D1:
      return d.hdeg;
    case Fam::D1Inv:
      return -d.hdeg;
    case Fam::D2:
      return d.root.empty() ? 0 : d.root[0];
    case Fam::D2Inv:
      return d.root.empty() ? 0 : -d.root[0];
    default:
      throw AlgebraError("conj_exponent: not a group-like letter");
  }
}

void Presentation::add_residual(Relation r) {
  r.cls = RelClass::Residual;
  register_relation(r.id, r.element);
  residual_.push_back(std::move(r));
}

void Presentation::register_relation(const std::string& id, const NCPoly& element) const {
  std::unique_lock lock(reg_mu_);
  registry_.emplace(id, element);
}

std::optional<NCPoly> Presentation::relation_element(const std::string& id) const {
  std::shared_lock lock(reg_mu_);
  auto it = registry_.find(id);
  if (it == registry_.end()) return std::nullopt;
  return it->second;
}

const Presentation::NormalForm* Presentation::memo_find(WordId w) const {
  std::shared_lock lock(memo_mu_);
  auto it = memo_.find(w);
  return it == memo_.end() ? nullptr : it->second.get();
}

void Presentation::memo_store(WordId w, NormalForm nf) const {
  auto sp = std::make_shared<const NormalForm>(std::move(nf));
  std::unique_lock lock(memo_mu_);
  memo_.emplace(w, std::move(sp));
}

}  // namespace qtv
