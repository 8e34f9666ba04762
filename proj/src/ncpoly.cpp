#include "qtv/ncpoly.hpp"

#include <algorithm>

namespace qtv {

bool MultiDegree::is_zero() const {
  if (hdeg != 0) return false;
  for (long long r : root)
    if (r != 0) return false;
  return true;
}

MultiDegree& MultiDegree::operator+=(const MultiDegree& o) {
  if (root.size() < o.root.size()) root.resize(o.root.size(), 0);
  for (size_t i = 0; i < o.root.size(); ++i) root[i] += o.root[i];
  hdeg += o.hdeg;
  return *this;
}

MultiDegree MultiDegree::operator+(const MultiDegree& o) const {
  MultiDegree r = *this;
  r += o;
  return r;
}

MultiDegree MultiDegree::operator-() const {
  MultiDegree r = *this;
  for (auto& x : r.root) x = -x;
  r.hdeg = -r.hdeg;
  return r;
}

std::string MultiDegree::str() const {
  std::string s = "(";
  for (size_t i = 0; i < root.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(root[i]);
  }
  s += ";" + std::to_string(hdeg) + ")";
  return s;
}

MultiDegree gen_degree(const Gen& g, int n) {
  MultiDegree d;
  d.root.assign(n + 1, 0);
  int node = ((g.node % (n + 1)) + (n + 1)) % (n + 1);
  switch (g.fam) {
    case Fam::XPlus:
      d.root[node] = 1;
      d.hdeg = g.deg;
      break;
    case Fam::XMinus:
      d.root[node] = -1;
      d.hdeg = -g.deg;
      break;
    case Fam::A:
      d.hdeg = g.deg;
      break;
    case Fam::E:
      d.root[node] = 1;
      d.hdeg = node == 0 ? 1 : 0;
      break;
    case Fam::F:
      d.root[node] = -1;
      d.hdeg = node == 0 ? -1 : 0;
      break;
    default:
      break;  // group-likes and generic letters are degree 0
  }
  return d;
}

MultiDegree word_degree(WordId w, int n) {
  MultiDegree d;
  d.root.assign(n + 1, 0);
  for (const auto& g : WordStore::instance().letters(w)) d += gen_degree(g, n);
  return d;
}

// ---------------------------------------------------------------------------

NCPoly NCPoly::unit(Scalar c) { return word(kEmptyWord, std::move(c)); }

NCPoly NCPoly::letter(const Gen& g, Scalar c) {
  return word(WordStore::instance().intern(std::vector<Gen>{g}), std::move(c));
}

NCPoly NCPoly::word(WordId w, Scalar c) {
  NCPoly r;
  if (!c.is_zero()) r.t_.push_back({w, std::move(c)});
  return r;
}

NCPoly NCPoly::word(const std::vector<Gen>& letters, Scalar c) {
  return word(WordStore::instance().intern(letters), std::move(c));
}

NCPoly NCPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  NCPoly r;
  for (auto& t : terms) {
    if (!r.t_.empty() && r.t_.back().first == t.first) {
      r.t_.back().second += t.second;
      if (r.t_.back().second.is_zero()) r.t_.pop_back();
    } else if (!t.second.is_zero()) {
      r.t_.push_back(std::move(t));
    }
  }
  return r;
}

Scalar NCPoly::coeff(WordId w) const {
  auto it = std::lower_bound(t_.begin(), t_.end(), w,
                             [](const Term& t, WordId k) { return t.first < k; });
  if (it != t_.end() && it->first == w) return it->second;
  return Scalar::zero();
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  std::vector<Term> acc;
  acc.reserve(t_.size() + o.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    if (t_[i].first < o.t_[j].first) {
      acc.push_back(t_[i++]);
    } else if (o.t_[j].first < t_[i].first) {
      acc.push_back(o.t_[j++]);
    } else {
      Scalar c = t_[i].second + o.t_[j].second;
      if (!c.is_zero()) acc.push_back({t_[i].first, std::move(c)});
      ++i, ++j;
    }
  }
  for (; i < t_.size(); ++i) acc.push_back(t_[i]);
  for (; j < o.t_.size(); ++j) acc.push_back(o.t_[j]);
  NCPoly r;
  r.t_ = std::move(acc);
  return r;
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& t : r.t_) t.second = -t.second;
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const { return *this + (-o); }

NCPoly NCPoly::operator*(const NCPoly& o) const {
  auto& store = WordStore::instance();
  std::vector<Term> acc;
  acc.reserve(t_.size() * o.t_.size());
  for (const auto& a : t_)
    for (const auto& b : o.t_)
      acc.push_back({store.concat(a.first, b.first), a.second * b.second});
  return from_terms(std::move(acc));
}

NCPoly NCPoly::scaled(const Scalar& c) const {
  if (c.is_zero()) return {};
  NCPoly r = *this;
  for (auto& t : r.t_) t.second *= c;
  return r;
}

NCPoly NCPoly::map_coeffs(const std::function<Scalar(const Scalar&)>& f) const {
  std::vector<Term> acc;
  for (const auto& t : t_) {
    Scalar c = f(t.second);
    if (!c.is_zero()) acc.push_back({t.first, std::move(c)});
  }
  return from_terms(std::move(acc));
}

std::optional<WordId> NCPoly::leading_word() const {
  if (t_.empty()) return std::nullopt;
  WordId best = t_[0].first;
  for (const auto& t : t_)
    if (word_order_less(best, t.first)) best = t.first;
  return best;
}

std::optional<MultiDegree> NCPoly::multidegree(int n) const {
  std::optional<MultiDegree> d;
  for (const auto& t : t_) {
    MultiDegree wd = word_degree(t.first, n);
    if (!d)
      d = wd;
    else if (!(*d == wd))
      return std::nullopt;
  }
  if (!d) {
    MultiDegree z;
    z.root.assign(n + 1, 0);
    return z;
  }
  return d;
}

std::string NCPoly::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < t_.size(); ++i) {
    if (i) s += " + ";
    s += "(" + t_[i].second.str() + ")";
    if (t_[i].first != kEmptyWord) s += " " + word_str(t_[i].first);
  }
  return s;
}

// ---------------------------------------------------------------------------

NCPoly bracket_v(const NCPoly& a, const NCPoly& b, const Scalar& v) {
  return a * b - (b * a).scaled(v);
}

NCPoly bracket_round(const std::vector<NCPoly>& elems, const std::vector<Scalar>& vs) {
  if (elems.empty()) throw AlgebraError("bracket_round: no elements");
  if (vs.size() + 1 != elems.size())
    throw AlgebraError("bracket_round: need one subscript fewer than elements");
  NCPoly acc = elems.back();
  for (size_t t = 0; t < vs.size(); ++t)
    acc = bracket_v(elems[elems.size() - 2 - t], acc, vs[t]);
  return acc;
}

NCPoly bracket_angle(const std::vector<NCPoly>& elems, const std::vector<Scalar>& vs) {
  if (elems.empty()) throw AlgebraError("bracket_angle: no elements");
  if (vs.size() + 1 != elems.size())
    throw AlgebraError("bracket_angle: need one subscript fewer than elements");
  NCPoly acc = elems.front();
  for (size_t t = 0; t < vs.size(); ++t) acc = bracket_v(acc, elems[t + 1], vs[t]);
  return acc;
}

NCPoly apply_hom(const GenMap& map, const NCPoly& x) {
  auto& store = WordStore::instance();
  NCPoly out;
  for (const auto& [w, c] : x.terms()) {
    NCPoly img = NCPoly::unit(c);
    for (const auto& g : store.letters(w)) {
      auto m = map(g);
      if (!m) throw AlgebraError("apply_hom: unmapped letter " + g.str());
      img *= *m;
    }
    out += img;
  }
  return out;
}

NCPoly apply_antihom(const GenMap& map, const NCPoly& x, bool conjugate) {
  auto& store = WordStore::instance();
  NCPoly out;
  for (const auto& [w, c] : x.terms()) {
    NCPoly img = NCPoly::unit(conjugate ? c.bar() : c);
    const auto& ls = store.letters(w);
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
      auto m = map(*it);
      if (!m) throw AlgebraError("apply_antihom: unmapped letter " + it->str());
      img *= *m;
    }
    out += img;
  }
  return out;
}

// ---------------------------------------------------------------------------

TensorPoly TensorPoly::unit(int arity) {
  TensorPoly r(arity);
  r.t_.push_back({Key(arity, kEmptyWord), Scalar::one()});
  return r;
}

TensorPoly TensorPoly::from_terms(int arity, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  TensorPoly r(arity);
  for (auto& t : terms) {
    if (!r.t_.empty() && r.t_.back().first == t.first) {
      r.t_.back().second += t.second;
      if (r.t_.back().second.is_zero()) r.t_.pop_back();
    } else if (!t.second.is_zero()) {
      r.t_.push_back(std::move(t));
    }
  }
  return r;
}

TensorPoly TensorPoly::tensor(const NCPoly& a, const NCPoly& b) {
  return tensor(std::vector<NCPoly>{a, b});
}

TensorPoly TensorPoly::tensor(const std::vector<NCPoly>& factors) {
  int arity = static_cast<int>(factors.size());
  std::vector<Term> acc{{Key{}, Scalar::one()}};
  for (const auto& f : factors) {
    std::vector<Term> next;
    next.reserve(acc.size() * f.size());
    for (const auto& [key, c] : acc)
      for (const auto& [w, d] : f.terms()) {
        Key k = key;
        k.push_back(w);
        next.push_back({std::move(k), c * d});
      }
    acc = std::move(next);
  }
  return from_terms(arity, std::move(acc));
}

TensorPoly TensorPoly::operator+(const TensorPoly& o) const {
  if (arity_ != o.arity_ && !is_zero() && !o.is_zero())
    throw AlgebraError("tensor arity mismatch");
  std::vector<Term> acc = t_;
  acc.insert(acc.end(), o.t_.begin(), o.t_.end());
  return from_terms(is_zero() ? o.arity_ : arity_, std::move(acc));
}

TensorPoly TensorPoly::operator-() const {
  TensorPoly r = *this;
  for (auto& t : r.t_) t.second = -t.second;
  return r;
}

TensorPoly TensorPoly::operator-(const TensorPoly& o) const { return *this + (-o); }

TensorPoly TensorPoly::operator*(const TensorPoly& o) const {
  if (arity_ != o.arity_) throw AlgebraError("tensor arity mismatch");
  auto& store = WordStore::instance();
  std::vector<Term> acc;
  acc.reserve(t_.size() * o.t_.size());
  for (const auto& a : t_)
    for (const auto& b : o.t_) {
      Key k(arity_);
      for (int i = 0; i < arity_; ++i) k[i] = store.concat(a.first[i], b.first[i]);
      acc.push_back({std::move(k), a.second * b.second});
    }
  return from_terms(arity_, std::move(acc));
}

TensorPoly TensorPoly::scaled(const Scalar& c) const {
  if (c.is_zero()) return TensorPoly(arity_);
  TensorPoly r = *this;
  for (auto& t : r.t_) t.second *= c;
  return r;
}

TensorPoly TensorPoly::swapped() const {
  if (arity_ != 2) throw AlgebraError("swapped: arity 2 only");
  std::vector<Term> acc;
  acc.reserve(t_.size());
  for (const auto& t : t_) acc.push_back({{t.first[1], t.first[0]}, t.second});
  return from_terms(2, std::move(acc));
}

TensorPoly TensorPoly::apply_to_slot(int slot,
                                     const std::function<NCPoly(const NCPoly&)>& f) const {
  std::vector<Term> acc;
  for (const auto& [key, c] : t_) {
    NCPoly img = f(NCPoly::word(key[slot]));
    for (const auto& [w, d] : img.terms()) {
      Key k = key;
      k[slot] = w;
      acc.push_back({std::move(k), c * d});
    }
  }
  return from_terms(arity_, std::move(acc));
}

TensorPoly TensorPoly::expand_slot(int slot,
                                   const std::function<TensorPoly(const NCPoly&)>& f) const {
  std::vector<Term> acc;
  int out_arity = -1;
  for (const auto& [key, c] : t_) {
    TensorPoly img = f(NCPoly::word(key[slot]));
    if (out_arity < 0) out_arity = arity_ - 1 + img.arity();
    for (const auto& [ikey, d] : img.terms()) {
      Key k;
      k.reserve(out_arity);
      for (int i = 0; i < slot; ++i) k.push_back(key[i]);
      for (WordId w : ikey) k.push_back(w);
      for (int i = slot + 1; i < arity_; ++i) k.push_back(key[i]);
      acc.push_back({std::move(k), c * d});
    }
  }
  if (out_arity < 0) out_arity = arity_ + 1;
  return from_terms(out_arity, std::move(acc));
}

std::string TensorPoly::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < t_.size(); ++i) {
    if (i) s += " + ";
    s += "(" + t_[i].second.str() + ") ";
    for (size_t j = 0; j < t_[i].first.size(); ++j) {
      if (j) s += " (x) ";
      s += word_str(t_[i].first[j]);
    }
  }
  return s;
}

}  // namespace qtv
