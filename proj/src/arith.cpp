#include "modgcd/arith.hpp"

#include <array>
#include <stdexcept>

namespace modgcd {

Int int_gcd(const Int& a, const Int& b) {
    if (sgn(a) == 0 && sgn(b) == 0)
        throw std::domain_error("int_gcd: both arguments are zero");
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

namespace {

// First 13 primes: a complete witness set for n < 3.317e24.
constexpr std::array<unsigned long, 13> kSmallWitnesses = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
constexpr std::array<unsigned long, 12> kExtraWitnesses = {
    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

bool passes_witness(const Int& n, const Int& n_minus_1, const Int& odd,
                    unsigned long twos, unsigned long base) {
    Int a = base;
    a %= n;
    if (sgn(a) == 0)
        return true;
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), odd.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1)
        return true;
    for (unsigned long r = 1; r < twos; ++r) {
        x = x * x % n;
        if (x == n_minus_1)
            return true;
        if (x == 1)
            return false;
    }
    return false;
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2)
        return false;
    for (unsigned long p : kSmallWitnesses) {
        if (n == p)
            return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return false;
    }
    Int n_minus_1 = n - 1;
    Int odd = n_minus_1;
    unsigned long twos = mpz_scan1(odd.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(odd.get_mpz_t(), odd.get_mpz_t(), twos);

    for (unsigned long base : kSmallWitnesses)
        if (!passes_witness(n, n_minus_1, odd, twos, base))
            return false;

    static const Int kDeterministicLimit("3317044064679887385961981");
    if (n < kDeterministicLimit)
        return true;
    for (unsigned long base : kExtraWitnesses)
        if (!passes_witness(n, n_minus_1, odd, twos, base))
            return false;
    return true;
}

Int next_prime(const Int& n) {
    if (n < 2)
        return Int(2);
    Int c = n + 1;
    if (c == 3)
        return c;
    if (mpz_even_p(c.get_mpz_t()))
        ++c;
    while (!is_prime(c))
        c += 2;
    return c;
}

Int next_prime_coprime(const Int& n, const Int& w) {
    if (w < 1)
        throw std::domain_error("next_prime_coprime: w must be positive");
    Int p = next_prime(n);
    while (mpz_divisible_p(w.get_mpz_t(), p.get_mpz_t()))
        p = next_prime(p);
    return p;
}

Int primorial(std::size_t k) {
    Int product = 1;
    Int p = 1;
    for (std::size_t i = 0; i < k; ++i) {
        p = next_prime(p);
        product *= p;
    }
    return product;
}

std::size_t primorial_k(const Int& a) {
    std::size_t k = 0;
    Int product = 1;
    Int p = 1;
    for (;;) {
        p = next_prime(p);
        product *= p;
        if (product > a)
            return k;
        ++k;
    }
}

Int ceil_sqrt(const Int& n) {
    if (sgn(n) < 0)
        throw std::domain_error("ceil_sqrt: negative argument");
    Int s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    if (s * s < n)
        ++s;
    return s;
}

Int ceil_div(const Int& num, const Int& den) {
    if (sgn(den) <= 0)
        throw std::domain_error("ceil_div: denominator must be positive");
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

std::size_t bit_length(const Int& n) {
    if (sgn(n) == 0)
        return 0;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

}  // namespace modgcd
