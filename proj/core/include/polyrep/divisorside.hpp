#ifndef POLYREP_DIVISORSIDE_HPP
#define POLYREP_DIVISORSIDE_HPP

#include <cstdint>

#include "polyrep/exactnum.hpp"

namespace polyrep {

/// Residue weight on m for the (1 + q^{vj+1})(1 + q^{vj+v-1}) factors:
/// 2 if v = 2 and m is odd, 1 if v >= 3 and m mod v is 1 or v-1, else 0.
int delta1(std::int64_t m, std::int64_t v);

/// 1 iff v divides m (the (1 - q^{v(j+1)}) factors).
int delta2(std::int64_t m, std::int64_t v);

/// sum_{d | n} (1/d) ((-1)^d delta1(n/d, s-2) + delta2(n/d, s-2)); requires s >= 4.
ExactRational divisor_lhs(std::int64_t n, int s);

/// sum over odd d | n of 2 (-1)^n / d.
ExactRational jha_square_lhs(std::int64_t n);

/// sum_{d | n} (1 + 2 (-1)^d) / d.
ExactRational jha_triangular_lhs(std::int64_t n);

/// The s = 5 case written with mod-3 conditions:
/// sum over d | n, n/d = 1 or 2 (mod 3) of (-1)^d / d  +  sum over d | n, 3 | n/d of 1/d.
ExactRational pentagonal_corollary_lhs(std::int64_t n);

/// sum over d | n, d != p of 1/d.
ExactRational reciprocal_divisor_sum_excluding(std::int64_t n, std::int64_t p);

/// sigma(n)/n - 2/p when n/p = 1 or p-1 (mod p), otherwise sigma(n)/n - 1/p.
/// Requires p an odd prime with p | n and p^2 not dividing n.
ExactRational prime_corollary_rhs_value(std::int64_t n, std::int64_t p);

/// Whether (n, p) satisfies the hypotheses of prime_corollary_rhs_value.
bool prime_corollary_applies(std::int64_t n, std::int64_t p);

} // namespace polyrep

#endif // POLYREP_DIVISORSIDE_HPP
