#ifndef QTV_WORD_HPP
#define QTV_WORD_HPP

#include <cstdint>
#include <deque>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace qtv {

enum class Fam : uint8_t {
  XPlus,
  XMinus,
  A,
  K,
  KInv,
  GammaHalf,
  GammaHalfInv,
  D1,
  D1Inv,
  D2,
  D2Inv,
  E,
  F,
  Generic,
};

/// A tagged alphabet letter.  `node` is the Dynkin node (or the label id for
/// Generic letters); `deg` is the mode index for XPlus/XMinus/A letters.
struct Gen {
  Fam fam = Fam::Generic;
  int16_t node = 0;
  int32_t deg = 0;

  bool operator==(const Gen&) const = default;

  bool is_group_like() const {
    switch (fam) {
      case Fam::K:
      case Fam::KInv:
      case Fam::GammaHalf:
      case Fam::GammaHalfInv:
      case Fam::D1:
      case Fam::D1Inv:
      case Fam::D2:
      case Fam::D2Inv:
        return true;
      default:
        return false;
    }
  }
  bool is_x_like() const {
    return fam == Fam::XPlus || fam == Fam::XMinus || fam == Fam::E || fam == Fam::F;
  }
  bool is_a() const { return fam == Fam::A; }

  /// Block position in the straightened form:
  /// XMinus/F (0) < A<0 (1) < group-likes (2) < A>0 (3) < XPlus/E (4) < Generic (5).
  int block() const {
    switch (fam) {
      case Fam::XMinus:
      case Fam::F:
        return 0;
      case Fam::A:
        return deg < 0 ? 1 : 3;
      case Fam::XPlus:
      case Fam::E:
        return 4;
      case Fam::Generic:
        return 5;
      default:
        return 2;
    }
  }

  Gen inverse() const;  // group-likes only
  std::string str() const;
};

inline Gen xplus(int node, int deg) { return {Fam::XPlus, static_cast<int16_t>(node), deg}; }
inline Gen xminus(int node, int deg) { return {Fam::XMinus, static_cast<int16_t>(node), deg}; }
inline Gen amode(int node, int deg) { return {Fam::A, static_cast<int16_t>(node), deg}; }
inline Gen kgen(int node) { return {Fam::K, static_cast<int16_t>(node), 0}; }
inline Gen kinv(int node) { return {Fam::KInv, static_cast<int16_t>(node), 0}; }
inline Gen ghalf() { return {Fam::GammaHalf, 0, 0}; }
inline Gen ghalfinv() { return {Fam::GammaHalfInv, 0, 0}; }
inline Gen d1gen() { return {Fam::D1, 0, 0}; }
inline Gen d1inv() { return {Fam::D1Inv, 0, 0}; }
inline Gen d2gen() { return {Fam::D2, 0, 0}; }
inline Gen d2inv() { return {Fam::D2Inv, 0, 0}; }
inline Gen egen(int node) { return {Fam::E, static_cast<int16_t>(node), 0}; }
inline Gen fgen(int node) { return {Fam::F, static_cast<int16_t>(node), 0}; }
inline Gen generic(int label) { return {Fam::Generic, static_cast<int16_t>(label), 0}; }

/// Total order on letters used by the straightening word order.
bool gen_less(const Gen& a, const Gen& b);

using WordId = uint32_t;
constexpr WordId kEmptyWord = 0;

/// Global hash-consed word table.  Words are immutable letter sequences; the
/// table supports concurrent insert-or-get.
class WordStore {
 public:
  static WordStore& instance();

  WordId intern(std::span<const Gen> letters);
  WordId intern(const std::vector<Gen>& letters) {
    return intern(std::span<const Gen>(letters));
  }
  const std::vector<Gen>& letters(WordId id) const;
  WordId concat(WordId a, WordId b);
  WordId append(WordId a, const Gen& g);

  size_t size() const;

 private:
  WordStore();
  struct Key {
    size_t hash;
    uint32_t index;
  };
  // deque keeps references to existing words stable across inserts
  mutable std::mutex mu_;
  std::deque<std::vector<Gen>> words_;
  std::unordered_map<size_t, std::vector<uint32_t>> index_;
};

/// Word order: graded by length, then blockwise, then letterwise.
bool word_order_less(WordId a, WordId b);

std::string word_str(WordId w);

}  // namespace qtv

#endif
