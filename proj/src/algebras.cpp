#include "qtv/algebras.hpp"

#include <algorithm>

namespace qtv {

namespace {

Scalar qmqinv() { return Scalar::q() - Scalar::q_pow(-1); }

void add_gl_letters(Presentation& P, bool with_d2) {
  const auto& C = P.cartan();
  for (int i = 0; i <= C.n; ++i) {
    P.add_letter(kgen(i));
    P.add_letter(kinv(i));
  }
  P.add_letter(ghalf());
  P.add_letter(ghalfinv());
  P.add_letter(d1gen());
  P.add_letter(d1inv());
  if (with_d2) {
    P.add_letter(d2gen());
    P.add_letter(d2inv());
  }
}

std::string mode_str(int i, int k) {
  return std::to_string(i) + "(" + std::to_string(k) + ")";
}

}  // namespace

NCPoly gamma_pow_half(long long e) {
  std::vector<Gen> w;
  for (long long i = 0; i < std::llabs(e); ++i) w.push_back(e > 0 ? ghalf() : ghalfinv());
  return NCPoly::word(w);
}

NCPoly gl_monomial(const CartanData& C, const std::vector<long long>& kexp,
                   long long ghalf_exp, long long d1_exp, long long d2_exp) {
  std::vector<Gen> w;
  for (int i = 0; i <= C.n; ++i) {
    long long e = i < static_cast<int>(kexp.size()) ? kexp[i] : 0;
    for (long long t = 0; t < std::llabs(e); ++t) w.push_back(e > 0 ? kgen(i) : kinv(i));
  }
  for (long long t = 0; t < std::llabs(ghalf_exp); ++t)
    w.push_back(ghalf_exp > 0 ? ghalf() : ghalfinv());
  for (long long t = 0; t < std::llabs(d1_exp); ++t)
    w.push_back(d1_exp > 0 ? d1gen() : d1inv());
  for (long long t = 0; t < std::llabs(d2_exp); ++t)
    w.push_back(d2_exp > 0 ? d2gen() : d2inv());
  return NCPoly::word(w);
}

NCPoly phi_partition(const CartanData& C, int node, int m, int sign) {
  if (m < 0) throw AlgebraError("phi_partition: m must be >= 0");
  std::vector<long long> kexp(C.n + 1, 0);
  kexp[C.reduce(node)] = sign > 0 ? 1 : -1;
  NCPoly khead = gl_monomial(C, kexp);
  if (m == 0) return khead;
  Scalar base = sign > 0 ? qmqinv() : -qmqinv();
  NCPoly sum;
  for (const auto& lam : partitions_of(m)) {
    Scalar coeff = Scalar::one();
    for (long long t = 0; t < lam.length(); ++t) coeff *= base;
    coeff = coeff / Scalar(Rat(lam.multiplicity_factorial()));
    std::vector<Gen> w;
    // ascending mode order keeps the word straightened
    for (auto it = lam.parts.rbegin(); it != lam.parts.rend(); ++it)
      w.push_back(amode(node, static_cast<int>(sign > 0 ? *it : -*it)));
    if (sign < 0) std::reverse(w.begin(), w.end());
    sum += NCPoly::word(w, coeff);
  }
  return khead * sum;
}

// ---------------------------------------------------------------------------

PresentationPtr build_dj_affine(const CartanData& C) {
  auto P = std::make_shared<Presentation>("dj_affine(" + std::to_string(C.n) + ")", C, 1);
  add_gl_letters(*P, /*with_d2=*/false);
  for (int i = 0; i <= C.n; ++i) {
    P->add_letter(egen(i));
    P->add_letter(fgen(i));
  }
  // cross rules: [e_i, f_j] = delta_ij (K_i - K_i^{-1}) / (q_i - q_i^{-1})
  for (int i = 0; i <= C.n; ++i)
    for (int j = 0; j <= C.n; ++j) {
      Presentation::PairRule rule;
      rule.rel_id = "X3[" + std::to_string(i) + "," + std::to_string(j) + "]";
      if (i == j) {
        std::vector<long long> e(C.n + 1, 0);
        e[i] = 1;
        NCPoly k = gl_monomial(C, e);
        e[i] = -1;
        NCPoly kv = gl_monomial(C, e);
        rule.correction = (k - kv).scaled(qmqinv().inverse());
      }
      P->set_cross_rule(egen(i), fgen(j), rule);
    }
  // expanded q-Serre relations
  for (int i = 0; i <= C.n; ++i)
    for (int j = 0; j <= C.n; ++j) {
      if (i == j) continue;
      long long m = 1 - C.a(i, j);
      NCPoly se, sf;
      for (long long k = 0; k <= m; ++k) {
        Scalar c = quantum_binomial(m, k, C.d(i));
        if (k % 2) c = -c;
        NCPoly epow_l = NCPoly::unit(), epow_r = NCPoly::unit();
        NCPoly fpow_l = NCPoly::unit(), fpow_r = NCPoly::unit();
        for (long long t = 0; t < m - k; ++t) epow_l *= NCPoly::letter(egen(i));
        for (long long t = 0; t < k; ++t) epow_r *= NCPoly::letter(egen(i));
        for (long long t = 0; t < k; ++t) fpow_l *= NCPoly::letter(fgen(i));
        for (long long t = 0; t < m - k; ++t) fpow_r *= NCPoly::letter(fgen(i));
        se += (epow_l * NCPoly::letter(egen(j)) * epow_r).scaled(c);
        sf += (fpow_l * NCPoly::letter(fgen(j)) * fpow_r).scaled(c);
      }
      P->add_residual({"X4e[" + std::to_string(i) + "," + std::to_string(j) + "]", se});
      P->add_residual({"X4f[" + std::to_string(i) + "," + std::to_string(j) + "]", sf});
    }
  return P;
}

// ---------------------------------------------------------------------------

namespace {

/// Shared loop-algebra construction: nodes listed in `nodes`, modes |k| <= N.
/// p-twists are activated by `with_p`; d2 letters by `with_d2`.
PresentationPtr build_loop(const std::string& name, const CartanData& C, int N,
                           const std::vector<int>& nodes, bool with_p, bool with_d2) {
  auto P = std::make_shared<Presentation>(name, C, N);
  add_gl_letters(*P, with_d2);
  for (int i : nodes)
    for (int k = -N; k <= N; ++k) {
      P->add_letter(xplus(i, k));
      P->add_letter(xminus(i, k));
      if (k != 0) P->add_letter(amode(i, k));
    }

  auto ptw = [&](long long e) { return with_p ? Scalar::p_pow(e) : Scalar::one(); };

  // a-a rules
  for (int i : nodes)
    for (int j : nodes)
      for (int r = 1; r <= N; ++r)
        for (int s = -N; s <= -1; ++s) {
          Presentation::PairRule rule;
          rule.rel_id = "aa[" + mode_str(i, r) + "," + mode_str(j, s) + "]";
          if (r + s == 0) {
            Scalar c = quantum_integer(r * C.a(i, j)) / Scalar(r) * ptw(r * C.b(i, j)) /
                       qmqinv();
            rule.correction = (gamma_pow_half(2 * r) - gamma_pow_half(-2 * r)).scaled(c);
          }
          P->set_aa_rule(amode(i, r), amode(j, s), rule);
        }

  // a-x rules: [a_i(r), x_j^s(k)] = s ([r a_ij]/r) gamma^{-s|r|/2} x_j^s(r+k) p^{r b_ij}
  for (int i : nodes)
    for (int j : nodes)
      for (int r = -N; r <= N; ++r) {
        if (r == 0) continue;
        for (int k = -N; k <= N; ++k)
          for (int sgn : {+1, -1}) {
            Gen x = sgn > 0 ? xplus(j, k) : xminus(j, k);
            Presentation::PairRule rule;
            rule.rel_id = "ax[" + mode_str(i, r) + "," + std::string(sgn > 0 ? "+" : "-") +
                          mode_str(j, k) + "]";
            if (C.a(i, j) != 0 || C.b(i, j) != 0) {
              if (std::abs(r + k) > N) {
                rule.blocked = true;
                P->set_ax_rule(amode(i, r), x, rule);
                continue;
              }
              Scalar c = Scalar(sgn) * quantum_integer(r * C.a(i, j)) / Scalar(r) *
                         ptw(r * C.b(i, j));
              Gen xs = sgn > 0 ? xplus(j, r + k) : xminus(j, r + k);
              NCPoly corr = gamma_pow_half(-sgn * std::llabs(r)) * NCPoly::letter(xs);
              rule.correction = corr.scaled(c);
            }
            P->set_ax_rule(amode(i, r), x, rule);
          }
      }

  // cross rules: x_i^+(k) x_j^-(l)
  for (int i : nodes)
    for (int j : nodes)
      for (int k = -N; k <= N; ++k)
        for (int l = -N; l <= N; ++l) {
          Presentation::PairRule rule;
          rule.rel_id = "xx[" + mode_str(i, k) + "," + mode_str(j, l) + "]";
          if (i == j) {
            int m = k + l;
            if (std::abs(m) > N) {
              rule.blocked = true;
              P->set_cross_rule(xplus(i, k), xminus(j, l), rule);
              continue;
            }
            NCPoly corr;
            if (m >= 0) corr += gamma_pow_half(k - l) * phi_partition(C, i, m, +1);
            if (m <= 0) corr -= gamma_pow_half(l - k) * phi_partition(C, i, -m, -1);
            rule.correction = corr.scaled(qmqinv().inverse());
          }
          P->set_cross_rule(xplus(i, k), xminus(j, l), rule);
        }

  // residual: degree-shift relations
  for (int sgn : {+1, -1})
    for (size_t ii = 0; ii < nodes.size(); ++ii)
      for (size_t jj = ii; jj < nodes.size(); ++jj) {
        int i = nodes[ii], j = nodes[jj];
        for (int k = -N; k + 1 <= N; ++k)
          for (int l = -N; l + 1 <= N; ++l) {
            if (i == j && l > k) continue;  // (i,j,k,l) ~ (j,i,l,k)
            auto xg = [&](int node, int mode) {
              return NCPoly::letter(sgn > 0 ? xplus(node, mode) : xminus(node, mode));
            };
            Scalar sub = Scalar::q_pow(sgn * C.form(i, j));
            NCPoly el = bracket_v(xg(i, k + 1), xg(j, l), sub).scaled(ptw(C.b(i, j))) +
                        bracket_v(xg(j, l + 1), xg(i, k), sub);
            if (el.is_zero()) continue;
            P->add_residual({"shift[" + std::string(sgn > 0 ? "+" : "-") + "," +
                                 mode_str(i, k) + "," + mode_str(j, l) + "]",
                             el});
          }
      }

  // residual: Serre relations for a_ij = -1
  for (int sgn : {+1, -1})
    for (int i : nodes)
      for (int j : nodes) {
        if (i == j || C.a(i, j) != -1) continue;
        auto xg = [&](int node, int mode) {
          return NCPoly::letter(sgn > 0 ? xplus(node, mode) : xminus(node, mode));
        };
        for (int k1 = -N; k1 <= N; ++k1)
          for (int k2 = k1; k2 <= N; ++k2)
            for (int l = -N; l <= N; ++l) {
              auto sym = [&](int a, int b) {
                return xg(i, a) * xg(i, b) * xg(j, l) -
                       (xg(i, a) * xg(j, l) * xg(i, b)).scaled(quantum_integer(2)) +
                       xg(j, l) * xg(i, a) * xg(i, b);
              };
              NCPoly el = sym(k1, k2) + sym(k2, k1);
              P->add_residual({"serre[" + std::string(sgn > 0 ? "+" : "-") + "," +
                                   mode_str(i, k1) + "," + mode_str(i, k2) + "," +
                                   mode_str(j, l) + "]",
                               el});
            }
      }

  return P;
}

}  // namespace

PresentationPtr build_drinfeld_affine(const CartanData& C, int N) {
  std::vector<int> nodes;
  for (int i = 1; i <= C.n; ++i) nodes.push_back(i);
  return build_loop("drinfeld_affine(" + std::to_string(C.n) + "," + std::to_string(N) + ")",
                    C, N, nodes, /*with_p=*/false, /*with_d2=*/false);
}

PresentationPtr build_toroidal(const CartanData& C, int N) {
  std::vector<int> nodes;
  for (int i = 0; i <= C.n; ++i) nodes.push_back(i);
  return build_loop("toroidal(" + std::to_string(C.n) + "," + std::to_string(N) + ")", C, N,
                    nodes, /*with_p=*/true, /*with_d2=*/true);
}

// ---------------------------------------------------------------------------

namespace {

/// Letters of the finite presentations: degree-zero modes at every node plus
/// one lowering and one raising letter of nonzero mode.
struct FiniteAlphabet {
  std::vector<Gen> xs;
  Gen plus_deg;   // x_{node}^{+}(-mode) style letter
  Gen minus_deg;  // partner
};

void add_zero_mode_cross_rules(Presentation& P, const CartanData& C,
                               const std::vector<int>& zero_nodes) {
  for (int i : zero_nodes)
    for (int j : zero_nodes) {
      Presentation::PairRule rule;
      rule.rel_id = "comm0[" + std::to_string(i) + "," + std::to_string(j) + "]";
      if (i == j) {
        std::vector<long long> e(C.n + 1, 0);
        e[i] = 1;
        NCPoly k = gl_monomial(C, e);
        e[i] = -1;
        NCPoly kv = gl_monomial(C, e);
        rule.correction = (k - kv).scaled(qmqinv().inverse());
      }
      P.set_cross_rule(xplus(i, 0), xminus(j, 0), rule);
    }
}

void add_serre_residuals(Presentation& P, const CartanData& C, const Gen& gi, const Gen& gj,
                         const std::string& id) {
  // x_i x_i x_j - [2] x_i x_j x_i + x_j x_i x_i, letters given directly
  NCPoly xi = NCPoly::letter(gi), xj = NCPoly::letter(gj);
  NCPoly el = xi * xi * xj - (xi * xj * xi).scaled(quantum_integer(2)) + xj * xi * xi;
  P.add_residual({id, el});
}

}  // namespace

PresentationPtr build_U0(const CartanData& C) {
  auto P = std::make_shared<Presentation>("U0(" + std::to_string(C.n) + ")", C, 1);
  add_gl_letters(*P, /*with_d2=*/true);
  std::vector<int> all;
  for (int i = 0; i <= C.n; ++i) {
    all.push_back(i);
    P->add_letter(xplus(i, 0));
    P->add_letter(xminus(i, 0));
  }
  P->add_letter(xplus(0, -1));
  P->add_letter(xminus(0, 1));

  add_zero_mode_cross_rules(*P, C, all);
  // [x_0^+(-1), x_0^-(1)] = (gamma^{-1} K_0 - gamma K_0^{-1})/(q - q^{-1})
  {
    Presentation::PairRule rule;
    rule.rel_id = "deg-pair";
    std::vector<long long> e(C.n + 1, 0);
    e[0] = 1;
    NCPoly t1 = gamma_pow_half(-2) * gl_monomial(C, e);
    e[0] = -1;
    NCPoly t2 = gamma_pow_half(2) * gl_monomial(C, e);
    rule.correction = (t1 - t2).scaled(qmqinv().inverse());
    P->set_cross_rule(xplus(0, -1), xminus(0, 1), rule);
  }
  // mixed-sign zero commutators with the degree letters, i != 0
  for (int i = 1; i <= C.n; ++i) {
    Presentation::PairRule r1;
    r1.rel_id = "mix[+," + std::to_string(i) + "]";
    P->set_cross_rule(xplus(0, -1), xminus(i, 0), r1);
    Presentation::PairRule r2;
    r2.rel_id = "mix[-," + std::to_string(i) + "]";
    P->set_cross_rule(xplus(i, 0), xminus(0, 1), r2);
  }

  // residual relations
  // q^{-2}-commutation of the degree letters with their zero-mode partners
  P->add_residual({"4.5[+]", bracket_v(NCPoly::letter(xplus(0, -1)),
                                       NCPoly::letter(xplus(0, 0)), Scalar::q_pow(-2))});
  P->add_residual({"4.5[-]", bracket_v(NCPoly::letter(xminus(0, 1)),
                                       NCPoly::letter(xminus(0, 0)), Scalar::q_pow(-2))});
  // vanishing commutators at distance >= 2
  for (int i = 0; i <= C.n; ++i)
    for (int j = i + 1; j <= C.n; ++j) {
      if (C.a(i, j) != 0) continue;
      for (int sgn : {+1, -1}) {
        auto g = [&](int node) {
          return NCPoly::letter(sgn > 0 ? xplus(node, 0) : xminus(node, 0));
        };
        P->add_residual({"4.8[" + std::string(sgn > 0 ? "+" : "-") + "," +
                             std::to_string(i) + "," + std::to_string(j) + "]",
                         g(i) * g(j) - g(j) * g(i)});
      }
    }
  for (int k = 1; k <= C.n; ++k) {
    if (C.a(0, k) != 0) continue;
    for (int eps : {+1, -1}) {
      NCPoly xd = NCPoly::letter(eps > 0 ? xplus(0, -1) : xminus(0, 1));
      NCPoly xk = NCPoly::letter(eps > 0 ? xplus(k, 0) : xminus(k, 0));
      P->add_residual({"4.9[" + std::string(eps > 0 ? "+" : "-") + "," + std::to_string(k) +
                           "]",
                       xd * xk - xk * xd});
    }
  }
  // Serre relations among zero modes
  for (int i = 0; i <= C.n; ++i)
    for (int j = 0; j <= C.n; ++j) {
      if (i == j || C.a(i, j) != -1) continue;
      for (int sgn : {+1, -1}) {
        Gen gi = sgn > 0 ? xplus(i, 0) : xminus(i, 0);
        Gen gj = sgn > 0 ? xplus(j, 0) : xminus(j, 0);
        add_serre_residuals(*P, C, gi, gj,
                            "4.10[" + std::string(sgn > 0 ? "+" : "-") + "," +
                                std::to_string(i) + "," + std::to_string(j) + "]");
      }
    }
  // Serre relations with one degree letter
  for (int j = 1; j <= C.n; ++j) {
    if (C.a(0, j) != -1) continue;
    for (int eps : {+1, -1}) {
      std::string es(eps > 0 ? "+" : "-");
      Gen xd = eps > 0 ? xplus(0, -1) : xminus(0, 1);
      Gen xj = eps > 0 ? xplus(j, 0) : xminus(j, 0);
      Gen x0 = eps > 0 ? xplus(0, 0) : xminus(0, 0);
      add_serre_residuals(*P, C, xj, xd, "4.11[" + es + "," + std::to_string(j) + "]");
      // mixed six-term relation: modes -eps and 0 at node 0
      NCPoly A = NCPoly::letter(xd), B = NCPoly::letter(x0), J = NCPoly::letter(xj);
      Scalar two = quantum_integer(2);
      NCPoly el = A * B * J - (A * J * B).scaled(two) + J * A * B + B * A * J -
                  (B * J * A).scaled(two) + J * B * A;
      P->add_residual({"4.13[" + es + "," + std::to_string(j) + "]", el});
    }
  }
  return P;
}

PresentationPtr build_U1(const CartanData& C) {
  auto P = std::make_shared<Presentation>("U1(" + std::to_string(C.n) + ")", C, 1);
  add_gl_letters(*P, /*with_d2=*/true);
  std::vector<int> zero_nodes;
  for (int i = 1; i <= C.n; ++i) {
    zero_nodes.push_back(i);
    P->add_letter(xplus(i, 0));
    P->add_letter(xminus(i, 0));
  }
  P->add_letter(xplus(1, 1));
  P->add_letter(xminus(1, -1));
  P->add_letter(xplus(0, -1));
  P->add_letter(xminus(0, 1));

  add_zero_mode_cross_rules(*P, C, zero_nodes);
  auto zero_rule = [&](const Gen& p, const Gen& m, const std::string& id) {
    Presentation::PairRule r;
    r.rel_id = id;
    P->set_cross_rule(p, m, r);
  };
  // [x_1^+(1), x_1^-(-1)] = (gamma K_1 - gamma^{-1} K_1^{-1})/(q-q^{-1})
  {
    Presentation::PairRule rule;
    rule.rel_id = "deg-pair[1]";
    std::vector<long long> e(C.n + 1, 0);
    e[1] = 1;
    NCPoly t1 = gamma_pow_half(2) * gl_monomial(C, e);
    e[1] = -1;
    NCPoly t2 = gamma_pow_half(-2) * gl_monomial(C, e);
    rule.correction = (t1 - t2).scaled(qmqinv().inverse());
    P->set_cross_rule(xplus(1, 1), xminus(1, -1), rule);
  }
  {
    Presentation::PairRule rule;
    rule.rel_id = "deg-pair[0]";
    std::vector<long long> e(C.n + 1, 0);
    e[0] = 1;
    NCPoly t1 = gamma_pow_half(-2) * gl_monomial(C, e);
    e[0] = -1;
    NCPoly t2 = gamma_pow_half(2) * gl_monomial(C, e);
    rule.correction = (t1 - t2).scaled(qmqinv().inverse());
    P->set_cross_rule(xplus(0, -1), xminus(0, 1), rule);
  }
  for (int i = 1; i <= C.n; ++i) {
    zero_rule(xplus(0, -1), xminus(i, 0), "mix[0+," + std::to_string(i) + "]");
    zero_rule(xplus(i, 0), xminus(0, 1), "mix[0-," + std::to_string(i) + "]");
    if (i != 1) {
      zero_rule(xplus(1, 1), xminus(i, 0), "mix[1+," + std::to_string(i) + "]");
      zero_rule(xplus(i, 0), xminus(1, -1), "mix[1-," + std::to_string(i) + "]");
    }
  }
  zero_rule(xplus(0, -1), xminus(1, -1), "mix[01+]");
  zero_rule(xplus(1, 1), xminus(0, 1), "mix[01-]");

  // residuals: q^{\mp 2}-commutations and Serre-type relations among letters
  P->add_residual({"u1.c[+]", bracket_v(NCPoly::letter(xplus(1, 1)),
                                        NCPoly::letter(xplus(1, 0)), Scalar::q_pow(2))});
  P->add_residual({"u1.c[-]", bracket_v(NCPoly::letter(xminus(1, -1)),
                                        NCPoly::letter(xminus(1, 0)), Scalar::q_pow(2))});
  for (int i = 1; i <= C.n; ++i)
    for (int j = i + 1; j <= C.n; ++j) {
      if (C.a(i, j) != 0) continue;
      for (int sgn : {+1, -1}) {
        auto g = [&](int node) {
          return NCPoly::letter(sgn > 0 ? xplus(node, 0) : xminus(node, 0));
        };
        P->add_residual({"u1.comm[" + std::string(sgn > 0 ? "+" : "-") + "," +
                             std::to_string(i) + "," + std::to_string(j) + "]",
                         g(i) * g(j) - g(j) * g(i)});
      }
    }
  for (int k = 2; k <= C.n; ++k) {
    if (C.a(1, k) != 0) continue;
    for (int eps : {+1, -1}) {
      NCPoly xd = NCPoly::letter(eps > 0 ? xplus(1, 1) : xminus(1, -1));
      NCPoly xk = NCPoly::letter(eps > 0 ? xplus(k, 0) : xminus(k, 0));
      P->add_residual({"u1.comm1[" + std::string(eps > 0 ? "+" : "-") + "," +
                           std::to_string(k) + "]",
                       xd * xk - xk * xd});
    }
  }
  for (int i = 1; i <= C.n; ++i)
    for (int j = 1; j <= C.n; ++j) {
      if (i == j || C.a(i, j) != -1) continue;
      for (int sgn : {+1, -1}) {
        Gen gi = sgn > 0 ? xplus(i, 0) : xminus(i, 0);
        Gen gj = sgn > 0 ? xplus(j, 0) : xminus(j, 0);
        add_serre_residuals(*P, C, gi, gj,
                            "u1.serre[" + std::string(sgn > 0 ? "+" : "-") + "," +
                                std::to_string(i) + "," + std::to_string(j) + "]");
      }
    }
  for (int j = 1; j <= C.n; ++j) {
    if (C.a(1, j) != -1) continue;
    for (int eps : {+1, -1}) {
      Gen xd = eps > 0 ? xplus(1, 1) : xminus(1, -1);
      Gen xj = eps > 0 ? xplus(j, 0) : xminus(j, 0);
      add_serre_residuals(*P, C, xj, xd,
                          "u1.serre1[" + std::string(eps > 0 ? "+" : "-") + "," +
                              std::to_string(j) + "]");
    }
  }
  return P;
}

std::pair<PresentationPtr, PresentationPtr> borel_presentations(const CartanData& C) {
  auto full = build_U0(C);
  auto carve = [&](bool plus_side) {
    std::string name = plus_side ? "borel+" : "borel-";
    auto P = std::make_shared<Presentation>(name + "(" + std::to_string(C.n) + ")", C, 1);
    add_gl_letters(*P, /*with_d2=*/true);
    for (int i = 0; i <= C.n; ++i)
      P->add_letter(plus_side ? xplus(i, 0) : xminus(i, 0));
    P->add_letter(plus_side ? xminus(0, 1) : xplus(0, -1));
    for (const auto& rel : full->residual_relations()) {
      bool inside = true;
      for (const auto& [w, c] : rel.element.terms())
        for (const auto& g : WordStore::instance().letters(w))
          if (!P->has_letter(g)) inside = false;
      if (inside) P->add_residual(rel);
    }
    return P;
  };
  return {carve(true), carve(false)};
}

// ---------------------------------------------------------------------------

GenMap automorphism(AutoKind kind, const CartanData& C) {
  int m = C.n + 1;
  switch (kind) {
    case AutoKind::Tau:
      return [m](const Gen& g) -> std::optional<NCPoly> {
        Gen h = g;
        if (g.fam == Fam::XPlus || g.fam == Fam::XMinus || g.fam == Fam::A ||
            g.fam == Fam::K || g.fam == Fam::KInv || g.fam == Fam::E || g.fam == Fam::F)
          h.node = static_cast<int16_t>((g.node + 1) % m);
        return NCPoly::letter(h);
      };
    case AutoKind::Sigma:
      return [m](const Gen& g) -> std::optional<NCPoly> {
        Gen h = g;
        if (g.fam == Fam::XPlus || g.fam == Fam::XMinus || g.fam == Fam::A ||
            g.fam == Fam::K || g.fam == Fam::KInv || g.fam == Fam::E || g.fam == Fam::F) {
          int node = ((g.node % m) + m) % m;
          h.node = static_cast<int16_t>(node == 0 ? 0 : m - node);
        }
        return NCPoly::letter(h);
      };
    case AutoKind::Iota:
      return [](const Gen& g) -> std::optional<NCPoly> {
        Gen h = g;
        switch (g.fam) {
          case Fam::XPlus:
            h.fam = Fam::XMinus;
            h.deg = -g.deg;
            break;
          case Fam::XMinus:
            h.fam = Fam::XPlus;
            h.deg = -g.deg;
            break;
          case Fam::A:
            h.deg = -g.deg;
            break;
          case Fam::E:
            h.fam = Fam::F;
            break;
          case Fam::F:
            h.fam = Fam::E;
            break;
          case Fam::K:
          case Fam::KInv:
          case Fam::GammaHalf:
          case Fam::GammaHalfInv:
          case Fam::D1:
          case Fam::D1Inv:
            h = g.inverse();
            break;
          case Fam::D2:
          case Fam::D2Inv:
            break;  // fixed
          case Fam::Generic:
            break;
        }
        return NCPoly::letter(h);
      };
  }
  throw AlgebraError("unknown automorphism kind");
}

}  // namespace qtv
