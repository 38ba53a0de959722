#ifndef WDEG_EXACTLIN_HPP
#define WDEG_EXACTLIN_HPP

#include <gmpxx.h>

#include <vector>

namespace wdeg {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Rank over the rationals by fraction-free (Bareiss) elimination.
int rank_over_q(IntMatrix a);

// Rank of the reduction mod p (p prime, fits in int64).
int rank_mod_p(const IntMatrix& a, int64_t p);

}  // namespace wdeg

#endif
