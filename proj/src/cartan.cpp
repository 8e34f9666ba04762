#include "qtv/cartan.hpp"

namespace qtv {

CartanData::CartanData(int rank) : n(rank) {
  if (rank < 1) throw AlgebraError("CartanData: rank must be >= 1");
}

long long CartanData::a(int i, int j) const {
  i = reduce(i);
  j = reduce(j);
  if (i == j) return 2;
  if (n == 1) return -2;  // A_1^(1): the two nodes are joined by a double bond
  int m = n + 1;
  if ((i + 1) % m == j || (j + 1) % m == i) return -1;
  return 0;
}

long long CartanData::b(int i, int j) const {
  i = reduce(i);
  j = reduce(j);
  int m = n + 1;
  long long v = 0;
  if (i == reduce(j - 1)) v += 1;
  if (i == reduce(j + 1)) v -= 1;
  (void)m;
  return v;
}

long long CartanData::form(const std::vector<long long>& root, int j) const {
  long long s = 0;
  for (size_t i = 0; i < root.size(); ++i) s += root[i] * a(static_cast<int>(i), j);
  return s;
}

}  // namespace qtv
