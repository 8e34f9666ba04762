#ifndef QTV_CARTAN_HPP
#define QTV_CARTAN_HPP

#include <vector>

#include "qtv/ncpoly.hpp"

namespace qtv {

/// Cartan data of affine type A_n^(1): the Cartan matrix over Z_{n+1}, the
/// antisymmetric twist matrix b_{ij} = delta_{i,j-1} - delta_{i,j+1}, trivial
/// symmetrizers, and the bilinear form (alpha_i, alpha_j) = a_{ij}.
struct CartanData {
  int n = 1;

  explicit CartanData(int rank);

  int nodes() const { return n + 1; }
  int reduce(int i) const {
    int m = n + 1;
    return ((i % m) + m) % m;
  }
  long long a(int i, int j) const;
  long long b(int i, int j) const;
  long long d(int) const { return 1; }
  /// (alpha_i, alpha_j)
  long long form(int i, int j) const { return a(i, j); }
  /// (root, alpha_j) for a root vector over the nodes
  long long form(const std::vector<long long>& root, int j) const;
};

}  // namespace qtv

#endif
