#ifndef QTV_ALGEBRAS_HPP
#define QTV_ALGEBRAS_HPP

#include "qtv/presentation.hpp"
#include "qtv/rewrite.hpp"

namespace qtv {

/// Chevalley-style presentation: e_i, f_i, K_i^{±1}, gamma^{±1/2}, D^{±1},
/// with the expanded q-Serre relations.
PresentationPtr build_dj_affine(const CartanData& C);

/// Loop-style presentation with modes x_i^{±}(k), a_i(l) for i in 1..n,
/// |k|, |l| <= N.
PresentationPtr build_drinfeld_affine(const CartanData& C, int N);

/// The toroidal presentation over all nodes of the affine diagram, with the
/// p-twists.
PresentationPtr build_toroidal(const CartanData& C, int N);

/// The finite presentation on x_i^{±}(0), x_0^{+}(-1), x_0^{-}(1) and the
/// Cartan part.
PresentationPtr build_U0(const CartanData& C);

/// Variant with the degree letters moved to node 1: x_1^{+}(1), x_1^{-}(-1)
/// alongside x_0^{+}(-1), x_0^{-}(1); node-0 degree-zero letters dropped.
PresentationPtr build_U1(const CartanData& C);

/// Borel-type subpresentations (B, B'): B keeps x_j^{+}(0) and x_0^{-}(1),
/// B' keeps x_j^{-}(0) and x_0^{+}(-1), both with the full Cartan part.
std::pair<PresentationPtr, PresentationPtr> borel_presentations(const CartanData& C);

enum class AutoKind { Tau, Sigma, Iota };

/// Letter map for tau (rotation), sigma (reflection) or iota (Chevalley
/// anti-involution).  iota must be applied through apply_antihom with the
/// conjugation flag.
GenMap automorphism(AutoKind kind, const CartanData& C);
inline bool automorphism_is_anti(AutoKind k) { return k == AutoKind::Iota; }

/// phi_i(m) (m >= 0) / psi_i(-m) as polynomials in K_i^{±1} and the a-modes,
/// via the partition expansion.  sign=+1 selects phi, -1 selects psi (then m
/// is the absolute mode).
NCPoly phi_partition(const CartanData& C, int node, int m, int sign);

/// Group-like monomial word: K exponents per node plus gamma-half, d1, d2
/// exponents.
NCPoly gl_monomial(const CartanData& C, const std::vector<long long>& kexp,
                   long long ghalf_exp = 0, long long d1_exp = 0, long long d2_exp = 0);
NCPoly gamma_pow_half(long long e);  // gamma^{e/2}

}  // namespace qtv

#endif
