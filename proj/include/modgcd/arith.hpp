#ifndef MODGCD_ARITH_HPP
#define MODGCD_ARITH_HPP

#include <cstddef>

#include <gmpxx.h>

namespace modgcd {

/// Arbitrary-precision signed integer used for every coefficient, bound and prime.
using Int = mpz_class;

/// Positive gcd of a and b. Throws std::domain_error when both are zero.
Int int_gcd(const Int& a, const Int& b);

/// Deterministic Miller-Rabin. Exact below 3.3e24; beyond that a fixed,
/// larger witness set is used.
bool is_prime(const Int& n);

/// Smallest prime strictly greater than n.
Int next_prime(const Int& n);

/// Smallest prime strictly greater than n that does not divide w (w >= 1).
Int next_prime_coprime(const Int& n, const Int& w);

/// Product of the first k primes (p_0# = 1).
Int primorial(std::size_t k);

/// Largest k with p_1 * ... * p_k <= a; 0 when a < 2.
std::size_t primorial_k(const Int& a);

/// Smallest s >= 0 with s*s >= n. Requires n >= 0.
Int ceil_sqrt(const Int& n);

/// ceil(num / den) for den > 0.
Int ceil_div(const Int& num, const Int& den);

/// Number of bits in |n|; 0 for n = 0.
std::size_t bit_length(const Int& n);

}  // namespace modgcd

#endif  // MODGCD_ARITH_HPP
