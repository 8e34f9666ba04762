#include "qtv/rewrite.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qtv {

std::string status_str(Status s) {
  switch (s) {
    case Status::Zero:
      return "ZERO";
    case Status::NonzeroNormal:
      return "NONZERO_NORMAL";
    case Status::Undecided:
      return "UNDECIDED_AT_BOUND";
    case Status::Skipped:
      return "SKIPPED";
    case Status::Failed:
      return "FAILED";
  }
  return "?";
}

namespace {

struct PairStep {
  bool applies = false;
  bool blocked = false;
  NCPoly replacement;    // the pair a*b rewrites to this
  std::string rel_id;    // id of the witnessing relation a*b - replacement
};

std::string pair_rel_id(const char* tag, const Gen& a, const Gen& b) {
  return std::string("ex:") + tag + ":" + a.str() + "|" + b.str();
}

/// Decide whether the adjacent pair (a, b) rewrites, and to what.
PairStep pair_step(const Gen& a, const Gen& b, const Presentation& P) {
  PairStep out;
  auto swap_poly = [&](Scalar c) {
    return NCPoly::word(std::vector<Gen>{b, a}, std::move(c));
  };
  if (a.is_group_like() && b.is_group_like()) {
    if (b == a.inverse()) {
      out.applies = true;
      out.replacement = NCPoly::unit();
      out.rel_id = pair_rel_id("inv", a, b);
      return out;
    }
    if (gen_less(b, a)) {
      out.applies = true;
      out.replacement = swap_poly(Scalar::one());
      out.rel_id = pair_rel_id("comm", a, b);
    }
    return out;
  }
  if (a.is_group_like() && b.block() < 2) {
    long long c = P.conj_exponent(a, b);
    out.applies = true;
    out.replacement = swap_poly(Scalar::q_pow(c));
    out.rel_id = pair_rel_id("conj", a, b);
    return out;
  }
  if (b.is_group_like() && a.block() > 2) {
    long long c = P.conj_exponent(b, a);
    out.applies = true;
    out.replacement = swap_poly(Scalar::q_pow(-c));
    out.rel_id = pair_rel_id("conj", a, b);
    return out;
  }
  if (a.is_a() && b.is_a()) {
    if ((a.deg > 0) == (b.deg > 0)) {
      if (gen_less(b, a)) {
        out.applies = true;
        out.replacement = swap_poly(Scalar::one());
        out.rel_id = pair_rel_id("comm", a, b);
      }
      return out;
    }
    if (a.deg > 0 && b.deg < 0) {
      const auto* r = P.aa_rule(a, b);
      if (!r) return out;
      if (r->blocked) {
        out.blocked = true;
        return out;
      }
      out.applies = true;
      out.replacement = swap_poly(Scalar::one()) + r->correction;
      out.rel_id = r->rel_id;
    }
    return out;
  }
  if (a.is_a() && b.block() == 0) {
    const auto* r = P.ax_rule(a, b);
    if (!r) return out;
    if (r->blocked) {
      out.blocked = true;
      return out;
    }
    out.applies = true;
    out.replacement = swap_poly(Scalar::one()) + r->correction;
    out.rel_id = r->rel_id;
    return out;
  }
  if (a.block() == 4 && b.is_a()) {
    const auto* r = P.ax_rule(b, a);
    if (!r) return out;
    if (r->blocked) {
      out.blocked = true;
      return out;
    }
    out.applies = true;
    out.replacement = swap_poly(Scalar::one()) - r->correction;
    out.rel_id = r->rel_id;
    return out;
  }
  if (a.block() == 4 && b.block() == 0) {
    const auto* r = P.cross_rule(a, b);
    if (!r) return out;
    if (r->blocked) {
      out.blocked = true;
      return out;
    }
    out.applies = true;
    out.replacement = swap_poly(Scalar::one()) + r->correction;
    out.rel_id = r->rel_id;
    return out;
  }
  return out;
}

NCPoly pair_relation_element(const Gen& a, const Gen& b, const PairStep& st) {
  return NCPoly::word(std::vector<Gen>{a, b}) - st.replacement;
}

const Presentation::NormalForm& norm_word(WordId w, const Presentation& P);

Presentation::NormalForm compute_norm(WordId w, const Presentation& P) {
  auto& store = WordStore::instance();
  const auto& ls = store.letters(w);
  bool window_ok = true;
  for (size_t i = 0; i + 1 < ls.size(); ++i) {
    PairStep st = pair_step(ls[i], ls[i + 1], P);
    if (st.blocked) {
      window_ok = false;
      continue;
    }
    if (!st.applies) continue;
    P.register_relation(st.rel_id, pair_relation_element(ls[i], ls[i + 1], st));
    std::vector<Gen> prefix(ls.begin(), ls.begin() + i);
    std::vector<Gen> suffix(ls.begin() + i + 2, ls.end());
    Presentation::NormalForm out;
    out.window_ok = window_ok;
    for (const auto& [m, c] : st.replacement.terms()) {
      std::vector<Gen> sub = prefix;
      const auto& mid = store.letters(m);
      sub.insert(sub.end(), mid.begin(), mid.end());
      sub.insert(sub.end(), suffix.begin(), suffix.end());
      const auto& nf = norm_word(store.intern(sub), P);
      out.nf += nf.nf.scaled(c);
      out.window_ok = out.window_ok && nf.window_ok;
    }
    return out;
  }
  Presentation::NormalForm out;
  out.nf = NCPoly::word(w);
  out.window_ok = window_ok;
  return out;
}

const Presentation::NormalForm& norm_word(WordId w, const Presentation& P) {
  if (const auto* hit = P.memo_find(w)) return *hit;
  Presentation::NormalForm nf = compute_norm(w, P);
  P.memo_store(w, std::move(nf));
  return *P.memo_find(w);
}

}  // namespace

StraightenResult straighten(const NCPoly& x, const Presentation& P) {
  StraightenResult out;
  for (const auto& [w, c] : x.terms()) {
    const auto& nf = norm_word(w, P);
    out.nf += nf.nf.scaled(c);
    out.window_ok = out.window_ok && nf.window_ok;
  }
  return out;
}

NCPoly straighten_traced(const NCPoly& x, const Presentation& P,
                         std::vector<CertEntry>& trace, bool& window_ok) {
  auto& store = WordStore::instance();
  std::vector<NCPoly::Term> work(x.terms().begin(), x.terms().end());
  NCPoly out;
  window_ok = true;
  while (!work.empty()) {
    auto [w, c] = work.back();
    work.pop_back();
    const auto& ls = store.letters(w);
    bool rewrote = false;
    for (size_t i = 0; i + 1 < ls.size(); ++i) {
      PairStep st = pair_step(ls[i], ls[i + 1], P);
      if (st.blocked) {
        window_ok = false;
        continue;
      }
      if (!st.applies) continue;
      P.register_relation(st.rel_id, pair_relation_element(ls[i], ls[i + 1], st));
      std::vector<Gen> prefix(ls.begin(), ls.begin() + i);
      std::vector<Gen> suffix(ls.begin() + i + 2, ls.end());
      WordId left = store.intern(prefix);
      WordId right = store.intern(suffix);
      trace.push_back({c, left, st.rel_id, right});
      for (const auto& [m, cm] : st.replacement.terms()) {
        std::vector<Gen> sub = prefix;
        const auto& mid = store.letters(m);
        sub.insert(sub.end(), mid.begin(), mid.end());
        sub.insert(sub.end(), suffix.begin(), suffix.end());
        work.push_back({store.intern(sub), c * cm});
      }
      rewrote = true;
      break;
    }
    if (!rewrote) out += NCPoly::word(w, c);
  }
  return out;
}

TensorPoly straighten_tensor(const TensorPoly& t, const Presentation& P, bool* ok) {
  if (ok) *ok = true;
  std::vector<TensorPoly::Term> acc;
  for (const auto& [key, c] : t.terms()) {
    std::vector<std::pair<TensorPoly::Key, Scalar>> cur{{{}, c}};
    for (WordId w : key) {
      const auto& nf = norm_word(w, P);
      if (ok) *ok = *ok && nf.window_ok;
      std::vector<std::pair<TensorPoly::Key, Scalar>> next;
      for (const auto& [k0, c0] : cur)
        for (const auto& [wn, cn] : nf.nf.terms()) {
          TensorPoly::Key k = k0;
          k.push_back(wn);
          next.push_back({std::move(k), c0 * cn});
        }
      cur = std::move(next);
    }
    for (auto& term : cur) acc.push_back(std::move(term));
  }
  return TensorPoly::from_terms(t.arity(), std::move(acc));
}

// ---------------------------------------------------------------------------
// Sparse elimination over Scalar with combination tracking.

namespace {

template <class Key, class Less>
struct Solver {
  using Vec = std::map<Key, Scalar, Less>;
  using Combo = std::map<int, Scalar>;
  struct Row {
    Vec v;  // leading key has coefficient 1
    Combo combo;
  };
  std::map<Key, Row, Less> rows;

  static void axpy(Vec& dst, const Scalar& c, const Vec& src) {
    for (const auto& [k, s] : src) {
      auto it = dst.find(k);
      if (it == dst.end()) {
        Scalar val = c * s;
        if (!val.is_zero()) dst.emplace(k, std::move(val));
      } else {
        it->second += c * s;
        if (it->second.is_zero()) dst.erase(it);
      }
    }
  }
  static void combo_axpy(Combo& dst, const Scalar& c, const Combo& src) {
    for (const auto& [k, s] : src) {
      Scalar val = c * s;
      auto it = dst.find(k);
      if (it == dst.end()) {
        if (!val.is_zero()) dst.emplace(k, std::move(val));
      } else {
        it->second += val;
        if (it->second.is_zero()) dst.erase(it);
      }
    }
  }

  void reduce(Vec& v, Combo& combo) const {
    if (rows.empty() || v.empty()) return;
    bool progress = true;
    while (progress && !v.empty()) {
      progress = false;
      for (auto it = v.rbegin(); it != v.rend(); ++it) {
        auto r = rows.find(it->first);
        if (r == rows.end()) continue;
        Scalar c = it->second;
        axpy(v, -c, r->second.v);
        combo_axpy(combo, c, r->second.combo);
        progress = true;
        break;
      }
    }
  }

  /// Returns false if the row reduced to zero (dependent).
  bool insert(Vec v, Combo combo) {
    reduce(v, combo);
    if (v.empty()) return false;
    auto lead = std::prev(v.end());
    Scalar inv = lead->second.inverse();
    Vec nv;
    for (auto& [k, s] : v) nv.emplace(k, s * inv);
    Combo nc;
    for (auto& [k, s] : combo) nc.emplace(k, s * inv);
    Key pivot = lead->first;
    rows.emplace(std::move(pivot), Row{std::move(nv), std::move(nc)});
    return true;
  }
};

struct WordLess {
  bool operator()(WordId a, WordId b) const { return word_order_less(a, b); }
};

struct KeyLess {
  bool operator()(const TensorPoly::Key& a, const TensorPoly::Key& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] == b[i]) continue;
      return word_order_less(a[i], b[i]);
    }
    return false;
  }
};

using PlainSolver = Solver<WordId, WordLess>;
using TensorSolver = Solver<TensorPoly::Key, KeyLess>;

size_t word_len(WordId w) { return WordStore::instance().letters(w).size(); }

size_t max_word_len(const NCPoly& x) {
  size_t m = 0;
  for (const auto& [w, c] : x.terms()) m = std::max(m, word_len(w));
  return m;
}

/// All ways to cut a relation word out of w: w = left * m * right with m a
/// word of rel.  Returns (left, wordIndexInRel, right, matchedWord).
struct Cut {
  WordId left, right;
  WordId matched;
};

void enumerate_cuts(WordId w, const NCPoly& rel_element, std::vector<Cut>& out) {
  auto& store = WordStore::instance();
  const auto& ls = store.letters(w);
  for (const auto& [m, c] : rel_element.terms()) {
    const auto& ms = store.letters(m);
    if (ms.empty() || ms.size() > ls.size()) continue;
    for (size_t pos = 0; pos + ms.size() <= ls.size(); ++pos) {
      bool match = true;
      for (size_t i = 0; i < ms.size(); ++i)
        if (!(ls[pos + i] == ms[i])) {
          match = false;
          break;
        }
      if (!match) continue;
      std::vector<Gen> left(ls.begin(), ls.begin() + pos);
      std::vector<Gen> right(ls.begin() + pos + ms.size(), ls.end());
      out.push_back({store.intern(left), store.intern(right), m});
    }
  }
}

struct GenRowInfo {
  WordId left, right;
  int rel_index;
  int slot = 0;                     // tensor slot, 0 for plain
  std::vector<WordId> context;      // other slots (tensor only)
};

void append_traced_product(const Presentation& P, const NCPoly& prod, const Scalar& scale,
                           const GenRowInfo& info, std::vector<CertEntry>& cert) {
  // prod = left * rel * right;  certificate gets (scale, left, rel, right)
  // plus the negated straightening trace of prod.
  const auto& rel = P.residual_relations()[info.rel_index];
  cert.push_back({scale, info.left, rel.id, info.right});
  std::vector<CertEntry> trace;
  bool ok = true;
  (void)straighten_traced(prod, P, trace, ok);
  for (auto& e : trace) cert.push_back({-(scale * e.coeff), e.left, e.rel_id, e.right});
}

}  // namespace

// ---------------------------------------------------------------------------

ReductionOutcome ideal_member(const NCPoly& x, const Presentation& P, MemberOptions opt) {
  ReductionOutcome out;
  auto st = straighten(x, P);
  out.window_ok = st.window_ok;
  out.normal_form = st.nf;
  if (st.nf.is_zero()) {
    out.status = Status::Zero;
    bool ok = true;
    (void)straighten_traced(x, P, out.certificate, ok);
    return out;
  }
  const auto& rels = P.residual_relations();
  bool cap_skipped = !st.window_ok;
  if (rels.empty()) {
    out.status = cap_skipped ? Status::Undecided : Status::NonzeroNormal;
    return out;
  }

  auto& store = WordStore::instance();
  PlainSolver solver;
  std::vector<GenRowInfo> gens;
  std::vector<NCPoly> gen_products;
  std::set<std::tuple<WordId, int, WordId>> seen;
  std::set<WordId> activated;

  PlainSolver::Vec target;
  for (const auto& [w, c] : st.nf.terms()) target.emplace(w, c);
  PlainSolver::Combo tcombo;

  std::vector<WordId> frontier;
  for (const auto& [w, c] : st.nf.terms()) frontier.push_back(w);

  for (int round = 0; round < opt.rounds && !target.empty(); ++round) {
    std::vector<WordId> next_frontier;
    bool added = false;
    for (WordId w : frontier) {
      if (activated.count(w)) continue;
      activated.insert(w);
      for (size_t ri = 0; ri < rels.size(); ++ri) {
        std::vector<Cut> cuts;
        enumerate_cuts(w, rels[ri].element, cuts);
        size_t rel_len = max_word_len(rels[ri].element);
        for (const auto& cut : cuts) {
          if (word_len(cut.left) + rel_len + word_len(cut.right) >
              static_cast<size_t>(opt.cap)) {
            cap_skipped = true;
            continue;
          }
          auto key = std::make_tuple(cut.left, static_cast<int>(ri), cut.right);
          if (seen.count(key)) continue;
          seen.insert(key);
          if (gens.size() >= opt.max_rows) {
            cap_skipped = true;
            break;
          }
          NCPoly prod =
              NCPoly::word(cut.left) * rels[ri].element * NCPoly::word(cut.right);
          auto gs = straighten(prod, P);
          if (gs.nf.is_zero()) continue;
          PlainSolver::Vec v;
          for (const auto& [gw, gc] : gs.nf.terms()) {
            v.emplace(gw, gc);
            next_frontier.push_back(gw);
          }
          PlainSolver::Combo combo;
          combo.emplace(static_cast<int>(gens.size()), Scalar::one());
          gens.push_back({cut.left, cut.right, static_cast<int>(ri)});
          gen_products.push_back(prod);
          if (solver.insert(std::move(v), std::move(combo))) added = true;
        }
      }
    }
    solver.reduce(target, tcombo);
    if (target.empty()) break;
    for (const auto& [w, c] : target) next_frontier.push_back(w);
    if (!added && next_frontier.empty()) break;
    frontier = std::move(next_frontier);
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    bool any_new = false;
    for (WordId w : frontier)
      if (!activated.count(w)) any_new = true;
    if (!any_new) break;
  }

  out.rows_used = gens.size();
  if (target.empty()) {
    out.status = Status::Zero;
    bool ok = true;
    (void)straighten_traced(x, P, out.certificate, ok);
    for (const auto& [gi, lambda] : tcombo)
      append_traced_product(P, gen_products[gi], lambda, gens[gi], out.certificate);
    out.normal_form = NCPoly();
    return out;
  }
  NCPoly rem;
  for (const auto& [w, c] : target) rem += NCPoly::word(w, c);
  out.normal_form = rem;
  out.status = cap_skipped ? Status::Undecided : Status::NonzeroNormal;
  (void)store;
  return out;
}

// ---------------------------------------------------------------------------

ReductionOutcome tensor_ideal_member(const TensorPoly& t, const Presentation& P,
                                     MemberOptions opt) {
  ReductionOutcome out;
  bool ok = true;
  TensorPoly st = straighten_tensor(t, P, &ok);
  out.window_ok = ok;
  if (st.is_zero()) {
    out.status = Status::Zero;
    // factorwise straightening trace
    std::vector<CertEntry> cert;
    for (const auto& [key, c] : t.terms()) {
      // straighten slot by slot, tracing each
      std::vector<std::pair<TensorPoly::Key, Scalar>> cur{{key, c}};
      for (int s = 0; s < t.arity(); ++s) {
        std::vector<std::pair<TensorPoly::Key, Scalar>> next;
        for (const auto& [k0, c0] : cur) {
          std::vector<CertEntry> trace;
          bool wok = true;
          NCPoly nf = straighten_traced(NCPoly::word(k0[s]), P, trace, wok);
          for (const auto& e : trace) {
            CertEntry ce = e;
            ce.coeff = c0 * e.coeff;
            ce.slot = s;
            for (int j = 0; j < t.arity(); ++j)
              if (j != s) ce.context.push_back(k0[j]);
            cert.push_back(std::move(ce));
          }
          for (const auto& [wn, cn] : nf.terms()) {
            TensorPoly::Key k = k0;
            k[s] = wn;
            next.push_back({std::move(k), c0 * cn});
          }
        }
        cur = std::move(next);
      }
    }
    out.certificate = std::move(cert);
    return out;
  }

  const auto& rels = P.residual_relations();
  bool cap_skipped = !ok;
  if (rels.empty()) {
    out.status = cap_skipped ? Status::Undecided : Status::NonzeroNormal;
    return out;
  }

  TensorSolver solver;
  std::vector<GenRowInfo> gens;
  std::vector<NCPoly> gen_products;  // the straightened slot content source
  std::set<std::tuple<int, WordId, int, WordId, std::string>> seen;
  std::set<TensorPoly::Key> activated;

  TensorSolver::Vec target;
  for (const auto& [k, c] : st.terms()) target.emplace(k, c);
  TensorSolver::Combo tcombo;

  std::vector<TensorPoly::Key> frontier;
  for (const auto& [k, c] : st.terms()) frontier.push_back(k);

  auto context_sig = [](const TensorPoly::Key& key, int slot) {
    std::string s;
    for (size_t i = 0; i < key.size(); ++i) {
      if (static_cast<int>(i) == slot) continue;
      s += std::to_string(key[i]) + ",";
    }
    return s;
  };

  for (int round = 0; round < opt.rounds && !target.empty(); ++round) {
    std::vector<TensorPoly::Key> next_frontier;
    for (const auto& key : frontier) {
      if (activated.count(key)) continue;
      activated.insert(key);
      for (int slot = 0; slot < st.arity(); ++slot) {
        for (size_t ri = 0; ri < rels.size(); ++ri) {
          std::vector<Cut> cuts;
          enumerate_cuts(key[slot], rels[ri].element, cuts);
          size_t rel_len = max_word_len(rels[ri].element);
          for (const auto& cut : cuts) {
            if (word_len(cut.left) + rel_len + word_len(cut.right) >
                static_cast<size_t>(opt.cap)) {
              cap_skipped = true;
              continue;
            }
            auto sig = std::make_tuple(slot, cut.left, static_cast<int>(ri), cut.right,
                                       context_sig(key, slot));
            if (seen.count(sig)) continue;
            seen.insert(sig);
            if (gens.size() >= opt.max_rows) {
              cap_skipped = true;
              break;
            }
            NCPoly prod =
                NCPoly::word(cut.left) * rels[ri].element * NCPoly::word(cut.right);
            auto gs = straighten(prod, P);
            if (gs.nf.is_zero()) continue;
            TensorSolver::Vec v;
            for (const auto& [gw, gc] : gs.nf.terms()) {
              TensorPoly::Key k = key;
              k[slot] = gw;
              next_frontier.push_back(k);
              v.emplace(std::move(k), gc);
            }
            TensorSolver::Combo combo;
            combo.emplace(static_cast<int>(gens.size()), Scalar::one());
            GenRowInfo info{cut.left, cut.right, static_cast<int>(ri), slot, {}};
            for (size_t j = 0; j < key.size(); ++j)
              if (static_cast<int>(j) != slot) info.context.push_back(key[j]);
            gens.push_back(std::move(info));
            gen_products.push_back(prod);
            solver.insert(std::move(v), std::move(combo));
          }
        }
      }
    }
    solver.reduce(target, tcombo);
    if (target.empty()) break;
    for (const auto& [k, c] : target) next_frontier.push_back(k);
    std::sort(next_frontier.begin(), next_frontier.end());
    next_frontier.erase(std::unique(next_frontier.begin(), next_frontier.end()),
                        next_frontier.end());
    bool any_new = false;
    for (const auto& k : next_frontier)
      if (!activated.count(k)) any_new = true;
    if (!any_new) break;
    frontier = std::move(next_frontier);
  }

  out.rows_used = gens.size();
  if (target.empty()) {
    out.status = Status::Zero;
    std::vector<CertEntry> cert;
    for (const auto& [key, c] : t.terms()) {
      std::vector<std::pair<TensorPoly::Key, Scalar>> cur{{key, c}};
      for (int s = 0; s < t.arity(); ++s) {
        std::vector<std::pair<TensorPoly::Key, Scalar>> next;
        for (const auto& [k0, c0] : cur) {
          std::vector<CertEntry> trace;
          bool wok = true;
          NCPoly nf = straighten_traced(NCPoly::word(k0[s]), P, trace, wok);
          for (const auto& e : trace) {
            CertEntry ce = e;
            ce.coeff = c0 * e.coeff;
            ce.slot = s;
            for (int j = 0; j < t.arity(); ++j)
              if (j != s) ce.context.push_back(k0[j]);
            cert.push_back(std::move(ce));
          }
          for (const auto& [wn, cn] : nf.terms()) {
            TensorPoly::Key k = k0;
            k[s] = wn;
            next.push_back({std::move(k), c0 * cn});
          }
        }
        cur = std::move(next);
      }
    }
    for (const auto& [gi, lambda] : tcombo) {
      const auto& info = gens[gi];
      const auto& rel = rels[info.rel_index];
      CertEntry ce{lambda, info.left, rel.id, info.right};
      ce.slot = info.slot;
      ce.context = info.context;
      cert.push_back(std::move(ce));
      std::vector<CertEntry> trace;
      bool wok = true;
      (void)straighten_traced(gen_products[gi], P, trace, wok);
      for (const auto& e : trace) {
        CertEntry c2 = e;
        c2.coeff = -(lambda * e.coeff);
        c2.slot = info.slot;
        c2.context = info.context;
        cert.push_back(std::move(c2));
      }
    }
    out.certificate = std::move(cert);
    return out;
  }
  out.status = cap_skipped ? Status::Undecided : Status::NonzeroNormal;
  return out;
}

// ---------------------------------------------------------------------------

bool replay_certificate(const NCPoly& x, const std::vector<CertEntry>& cert,
                        const Presentation& P) {
  NCPoly sum;
  for (const auto& e : cert) {
    auto rel = P.relation_element(e.rel_id);
    if (!rel) return false;
    if (!e.context.empty()) return false;  // tensor entry in a plain certificate
    sum += (NCPoly::word(e.left) * *rel * NCPoly::word(e.right)).scaled(e.coeff);
  }
  return sum == x;
}

bool replay_certificate_tensor(const TensorPoly& t, const std::vector<CertEntry>& cert,
                               const Presentation& P) {
  TensorPoly sum(t.arity());
  for (const auto& e : cert) {
    auto rel = P.relation_element(e.rel_id);
    if (!rel) return false;
    if (static_cast<int>(e.context.size()) + 1 != t.arity()) return false;
    NCPoly mid = (NCPoly::word(e.left) * *rel * NCPoly::word(e.right)).scaled(e.coeff);
    std::vector<NCPoly> factors;
    size_t ci = 0;
    for (int s = 0; s < t.arity(); ++s) {
      if (s == e.slot)
        factors.push_back(mid);
      else
        factors.push_back(NCPoly::word(e.context[ci++]));
    }
    sum += TensorPoly::tensor(factors);
  }
  return sum == t;
}

// ---------------------------------------------------------------------------

FitResult fit_coefficients(const std::vector<FitConstraint>& constraints,
                           const Presentation& P, MemberOptions opt) {
  // Build, per constraint, the reduced residuals of base and templates against
  // the generated row space, then solve the joint linear system in the c_i.
  size_t nunk = 0;
  for (const auto& c : constraints)
    nunk = std::max(nunk, c.is_tensor ? c.ttemplates.size() : c.templates.size());

  // equations: rows over unknowns with rhs
  std::vector<std::vector<Scalar>> eq;  // each row: nunk coeffs + rhs at back
  for (const auto& con : constraints) {
    if (!con.is_tensor) {
      PlainSolver solver;
      std::set<std::tuple<WordId, int, WordId>> seen;
      std::set<WordId> activated;
      const auto& rels = P.residual_relations();
      auto add_rows_for = [&](const NCPoly& nf) {
        std::vector<WordId> frontier;
        for (const auto& [w, c] : nf.terms()) frontier.push_back(w);
        for (int round = 0; round < opt.rounds; ++round) {
          std::vector<WordId> next;
          for (WordId w : frontier) {
            if (activated.count(w)) continue;
            activated.insert(w);
            for (size_t ri = 0; ri < rels.size(); ++ri) {
              std::vector<Cut> cuts;
              enumerate_cuts(w, rels[ri].element, cuts);
              size_t rel_len = max_word_len(rels[ri].element);
              for (const auto& cut : cuts) {
                if (word_len(cut.left) + rel_len + word_len(cut.right) >
                    static_cast<size_t>(opt.cap))
                  continue;
                auto key = std::make_tuple(cut.left, static_cast<int>(ri), cut.right);
                if (seen.count(key)) continue;
                seen.insert(key);
                NCPoly prod =
                    NCPoly::word(cut.left) * rels[ri].element * NCPoly::word(cut.right);
                auto gs = straighten(prod, P);
                if (gs.nf.is_zero()) continue;
                PlainSolver::Vec v;
                for (const auto& [gw, gc] : gs.nf.terms()) {
                  v.emplace(gw, gc);
                  next.push_back(gw);
                }
                PlainSolver::Combo combo;
                solver.insert(std::move(v), std::move(combo));
              }
            }
          }
          if (next.empty()) break;
          frontier = std::move(next);
        }
      };
      auto sb = straighten(con.base, P);
      add_rows_for(sb.nf);
      std::vector<StraightenResult> stt;
      for (const auto& t : con.templates) {
        stt.push_back(straighten(t, P));
        add_rows_for(stt.back().nf);
      }
      PlainSolver::Vec vb;
      for (const auto& [w, c] : sb.nf.terms()) vb.emplace(w, c);
      PlainSolver::Combo cb;
      solver.reduce(vb, cb);
      std::vector<PlainSolver::Vec> vts(stt.size());
      for (size_t i = 0; i < stt.size(); ++i) {
        for (const auto& [w, c] : stt[i].nf.terms()) vts[i].emplace(w, c);
        PlainSolver::Combo cc;
        solver.reduce(vts[i], cc);
      }
      // words appearing in residuals
      std::set<WordId> cols;
      for (const auto& [w, c] : vb) cols.insert(w);
      for (const auto& v : vts)
        for (const auto& [w, c] : v) cols.insert(w);
      for (WordId w : cols) {
        std::vector<Scalar> row(nunk + 1, Scalar::zero());
        for (size_t i = 0; i < vts.size(); ++i) {
          auto it = vts[i].find(w);
          if (it != vts[i].end()) row[i] = it->second;
        }
        auto itb = vb.find(w);
        row[nunk] = itb == vb.end() ? Scalar::zero() : -itb->second;
        eq.push_back(std::move(row));
      }
    } else {
      // tensor constraint: reduce against rows generated from the union of
      // supports of base and templates
      TensorSolver solver;
      const auto& rels = P.residual_relations();
      std::set<std::tuple<int, WordId, int, WordId, std::string>> seen;
      std::set<TensorPoly::Key> activated;
      auto context_sig = [](const TensorPoly::Key& key, int slot) {
        std::string s;
        for (size_t i = 0; i < key.size(); ++i) {
          if (static_cast<int>(i) == slot) continue;
          s += std::to_string(key[i]) + ",";
        }
        return s;
      };
      auto add_rows_for = [&](const TensorPoly& nf) {
        std::vector<TensorPoly::Key> frontier;
        for (const auto& [k, c] : nf.terms()) frontier.push_back(k);
        for (int round = 0; round < opt.rounds; ++round) {
          std::vector<TensorPoly::Key> next;
          for (const auto& key : frontier) {
            if (activated.count(key)) continue;
            activated.insert(key);
            for (int slot = 0; slot < nf.arity(); ++slot) {
              for (size_t ri = 0; ri < rels.size(); ++ri) {
                std::vector<Cut> cuts;
                enumerate_cuts(key[slot], rels[ri].element, cuts);
                size_t rel_len = max_word_len(rels[ri].element);
                for (const auto& cut : cuts) {
                  if (word_len(cut.left) + rel_len + word_len(cut.right) >
                      static_cast<size_t>(opt.cap))
                    continue;
                  auto sig = std::make_tuple(slot, cut.left, static_cast<int>(ri),
                                             cut.right, context_sig(key, slot));
                  if (seen.count(sig)) continue;
                  seen.insert(sig);
                  NCPoly prod =
                      NCPoly::word(cut.left) * rels[ri].element * NCPoly::word(cut.right);
                  auto gs = straighten(prod, P);
                  if (gs.nf.is_zero()) continue;
                  TensorSolver::Vec v;
                  for (const auto& [gw, gc] : gs.nf.terms()) {
                    TensorPoly::Key k = key;
                    k[slot] = gw;
                    next.push_back(k);
                    v.emplace(std::move(k), gc);
                  }
                  TensorSolver::Combo combo;
                  solver.insert(std::move(v), std::move(combo));
                }
              }
            }
          }
          if (next.empty()) break;
          std::sort(next.begin(), next.end());
          next.erase(std::unique(next.begin(), next.end()), next.end());
          frontier = std::move(next);
        }
      };
      TensorPoly sb = straighten_tensor(con.tbase, P);
      add_rows_for(sb);
      std::vector<TensorPoly> stt;
      for (const auto& t : con.ttemplates) {
        stt.push_back(straighten_tensor(t, P));
        add_rows_for(stt.back());
      }
      TensorSolver::Vec vb;
      for (const auto& [k, c] : sb.terms()) vb.emplace(k, c);
      TensorSolver::Combo cb;
      solver.reduce(vb, cb);
      std::vector<TensorSolver::Vec> vts(stt.size());
      for (size_t i = 0; i < stt.size(); ++i) {
        for (const auto& [k, c] : stt[i].terms()) vts[i].emplace(k, c);
        TensorSolver::Combo cc;
        solver.reduce(vts[i], cc);
      }
      std::set<TensorPoly::Key> cols;
      for (const auto& [k, c] : vb) cols.insert(k);
      for (const auto& v : vts)
        for (const auto& [k, c] : v) cols.insert(k);
      for (const auto& k : cols) {
        std::vector<Scalar> row(nunk + 1, Scalar::zero());
        for (size_t i = 0; i < vts.size(); ++i) {
          auto it = vts[i].find(k);
          if (it != vts[i].end()) row[i] = it->second;
        }
        auto itb = vb.find(k);
        row[nunk] = itb == vb.end() ? Scalar::zero() : -itb->second;
        eq.push_back(std::move(row));
      }
    }
  }

  // dense Gaussian elimination on eq (nunk unknowns)
  size_t rows = eq.size();
  size_t rank = 0;
  std::vector<int> pivot_col;
  for (size_t col = 0; col < nunk && rank < rows; ++col) {
    size_t p = rank;
    while (p < rows && eq[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(eq[rank], eq[p]);
    Scalar inv = eq[rank][col].inverse();
    for (auto& s : eq[rank]) s *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || eq[r][col].is_zero()) continue;
      Scalar f = eq[r][col];
      for (size_t c = 0; c <= nunk; ++c) eq[r][c] -= f * eq[rank][c];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++rank;
  }
  for (size_t r = rank; r < rows; ++r)
    if (!eq[r][nunk].is_zero()) return FitResult{false, {}};

  FitResult res;
  res.feasible = true;
  res.values.assign(nunk, Scalar::zero());
  for (size_t r = 0; r < rank; ++r) res.values[pivot_col[r]] = eq[r][nunk];
  return res;
}

}  // namespace qtv
