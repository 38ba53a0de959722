#include "wdeg/exactlin.hpp"

#include <algorithm>

namespace wdeg {

int rank_over_q(IntMatrix a) {
  const int m = static_cast<int>(a.size());
  if (m == 0) return 0;
  const int n = static_cast<int>(a[0].size());
  int rank = 0;
  mpz_class prev = 1;
  for (int col = 0; col < n && rank < m; ++col) {
    int piv = -1;
    for (int r = rank; r < m; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    // Bareiss step: exact division by the previous pivot
    for (int r = rank + 1; r < m; ++r) {
      for (int c = col + 1; c < n; ++c) {
        mpz_class t = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[r][c] = std::move(t);
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

int rank_mod_p(const IntMatrix& a, int64_t p) {
  const int m = static_cast<int>(a.size());
  if (m == 0) return 0;
  const int n = static_cast<int>(a[0].size());
  std::vector<std::vector<int64_t>> b(m, std::vector<int64_t>(n));
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) {
      mpz_class v = a[r][c] % p;
      int64_t x = v.get_si();
      b[r][c] = (x % p + p) % p;
    }
  int rank = 0;
  auto inv_mod = [&](int64_t x) {
    int64_t r = 1, e = p - 2, base = x % p;
    while (e > 0) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  for (int col = 0; col < n && rank < m; ++col) {
    int piv = -1;
    for (int r = rank; r < m; ++r)
      if (b[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(b[rank], b[piv]);
    int64_t inv = inv_mod(b[rank][col]);
    for (int c = col; c < n; ++c) b[rank][c] = b[rank][c] * inv % p;
    for (int r = 0; r < m; ++r) {
      if (r == rank || b[r][col] == 0) continue;
      int64_t f = b[r][col];
      for (int c = col; c < n; ++c) b[r][c] = ((b[r][c] - f * b[rank][c]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace wdeg
