#include "qtv/word.hpp"

#include <functional>
#include <stdexcept>

namespace qtv {

Gen Gen::inverse() const {
  switch (fam) {
    case Fam::K:
      return {Fam::KInv, node, 0};
    case Fam::KInv:
      return {Fam::K, node, 0};
    case Fam::GammaHalf:
      return {Fam::GammaHalfInv, 0, 0};
    case Fam::GammaHalfInv:
      return {Fam::GammaHalf, 0, 0};
    case Fam::D1:
      return {Fam::D1Inv, 0, 0};
    case Fam::D1Inv:
      return {Fam::D1, 0, 0};
    case Fam::D2:
      return {Fam::D2Inv, 0, 0};
    case Fam::D2Inv:
      return {Fam::D2, 0, 0};
    default:
      throw std::logic_error("inverse() on a non-group-like letter");
  }
}

std::string Gen::str() const {
  switch (fam) {
    case Fam::XPlus:
      return "x+_" + std::to_string(node) + "(" + std::to_string(deg) + ")";
    case Fam::XMinus:
      return "x-_" + std::to_string(node) + "(" + std::to_string(deg) + ")";
    case Fam::A:
      return "a_" + std::to_string(node) + "(" + std::to_string(deg) + ")";
    case Fam::K:
      return "K_" + std::to_string(node);
    case Fam::KInv:
      return "Kinv_" + std::to_string(node);
    case Fam::GammaHalf:
      return "ghalf";
    case Fam::GammaHalfInv:
      return "ghalfinv";
    case Fam::D1:
      return "d1";
    case Fam::D1Inv:
      return "d1inv";
    case Fam::D2:
      return "d2";
    case Fam::D2Inv:
      return "d2inv";
    case Fam::E:
      return "e_" + std::to_string(node);
    case Fam::F:
      return "f_" + std::to_string(node);
    case Fam::Generic:
      return "#g" + std::to_string(node);
  }
  return "?";
}

bool gen_less(const Gen& a, const Gen& b) {
  if (a.block() != b.block()) return a.block() < b.block();
  // group-likes sort K_0, Kinv_0, K_1, Kinv_1, ..., ghalf, ghalfinv, d1, ... so
  // that inverse pairs are adjacent and cancel.
  auto gl_key = [](const Gen& g) -> std::pair<int, int> {
    switch (g.fam) {
      case Fam::K:
        return {g.node, 0};
      case Fam::KInv:
        return {g.node, 1};
      case Fam::GammaHalf:
        return {1 << 20, 0};
      case Fam::GammaHalfInv:
        return {1 << 20, 1};
      case Fam::D1:
        return {(1 << 20) + 1, 0};
      case Fam::D1Inv:
        return {(1 << 20) + 1, 1};
      case Fam::D2:
        return {(1 << 20) + 2, 0};
      case Fam::D2Inv:
        return {(1 << 20) + 2, 1};
      default:
        return {0, 0};
    }
  };
  if (a.is_group_like() && b.is_group_like()) return gl_key(a) < gl_key(b);
  if (a.fam != b.fam) return static_cast<int>(a.fam) < static_cast<int>(b.fam);
  if (a.node != b.node) return a.node < b.node;
  return a.deg < b.deg;
}

WordStore::WordStore() {
  words_.push_back({});  // id 0 = empty word
  index_[0].push_back(0);
}

WordStore& WordStore::instance() {
  static WordStore store;
  return store;
}

namespace {
size_t hash_letters(std::span<const Gen> letters) {
  size_t h = 1469598103934665603ull;
  for (const auto& g : letters) {
    size_t x = (static_cast<size_t>(g.fam) << 48) ^
               (static_cast<size_t>(static_cast<uint16_t>(g.node)) << 32) ^
               static_cast<size_t>(static_cast<uint32_t>(g.deg));
    h = (h ^ x) * 1099511628211ull;
  }
  return h;
}
}  // namespace

WordId WordStore::intern(std::span<const Gen> letters) {
  size_t h = hash_letters(letters);
  std::lock_guard<std::mutex> lock(mu_);
  auto it = index_.find(h);
  if (it != index_.end()) {
    for (uint32_t idx : it->second) {
      const auto& w = words_[idx];
      if (w.size() == letters.size() && std::equal(w.begin(), w.end(), letters.begin()))
        return idx;
    }
  }
  uint32_t id = static_cast<uint32_t>(words_.size());
  words_.emplace_back(letters.begin(), letters.end());
  index_[h].push_back(id);
  return id;
}

const std::vector<Gen>& WordStore::letters(WordId id) const {
  std::lock_guard<std::mutex> lock(mu_);
  return words_[id];
}

WordId WordStore::concat(WordId a, WordId b) {
  if (a == kEmptyWord) return b;
  if (b == kEmptyWord) return a;
  std::vector<Gen> w = letters(a);
  const auto& wb = letters(b);
  w.insert(w.end(), wb.begin(), wb.end());
  return intern(w);
}

WordId WordStore::append(WordId a, const Gen& g) {
  std::vector<Gen> w = letters(a);
  w.push_back(g);
  return intern(w);
}

size_t WordStore::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return words_.size();
}

bool word_order_less(WordId a, WordId b) {
  if (a == b) return false;
  auto& store = WordStore::instance();
  const auto& wa = store.letters(a);
  const auto& wb = store.letters(b);
  if (wa.size() != wb.size()) return wa.size() < wb.size();
  for (size_t i = 0; i < wa.size(); ++i) {
    if (wa[i] == wb[i]) continue;
    return gen_less(wa[i], wb[i]);
  }
  return false;
}

std::string word_str(WordId w) {
  if (w == kEmptyWord) return "1";
  const auto& ls = WordStore::instance().letters(w);
  std::string s;
  for (size_t i = 0; i < ls.size(); ++i) {
    if (i) s += " ";
    s += ls[i].str();
  }
  return s;
}

}  // namespace qtv
