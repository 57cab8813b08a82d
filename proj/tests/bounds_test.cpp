#include <gtest/gtest.h>

#include "modgcd/bounds.hpp"
#include "modgcd/gcdalgs.hpp"
#include "modgcd/sylvester.hpp"
#include "support/testing.hpp"

using namespace modgcd;
using namespace modgcd::testing;

namespace {

// Floating oracle at 512 bits, evaluating the real-valued formulas directly.
mpf_class fsqrt(const Int& n) {
    mpf_class x(n, 512);
    return sqrt(x);
}

mpf_class real_single(const IntPoly& f) {
    const std::size_t n = *f.degree();
    mpf_class v = fsqrt(norm_sq(f));
    if (n == 0)
        return v / 2;
    mpf_class two(2, 512);
    for (std::size_t i = 1; i < n; ++i)
        v *= two;
    return v;
}

mpf_class real_aux(const IntPoly& f, const IntPoly& g, std::size_t s) {
    const Int a0 = abs(leading_coeff(f)), b0 = abs(leading_coeff(g));
    mpf_class rf = fsqrt(norm_sq(f)) / mpf_class(a0, 512);
    mpf_class rg = fsqrt(norm_sq(g)) / mpf_class(b0, 512);
    mpf_class v = (rf < rg ? rf : rg) * mpf_class(int_gcd(a0, b0), 512);
    for (std::size_t i = 0; i < s; ++i)
        v *= 2;
    return v;
}

mpf_class real_resultant(const IntPoly& f, const IntPoly& g) {
    const std::size_t n = *f.degree(), m = *g.degree();
    Int lead;
    Int np1 = n + 1, mp1 = m + 1;
    Int a, b;
    mpz_pow_ui(a.get_mpz_t(), np1.get_mpz_t(), m);
    mpz_pow_ui(b.get_mpz_t(), mp1.get_mpz_t(), n);
    mpf_class v = fsqrt(a * b);
    const mpf_class nf = real_single(f), ng = real_single(g);
    for (std::size_t i = 0; i < m; ++i)
        v *= nf;
    for (std::size_t i = 0; i < n; ++i)
        v *= ng;
    return v;
}

// The stored integer must be the ceiling of the real value: not below it and
// less than one above it.
void expect_ceiling(const Int& stored, const mpf_class& real) {
    EXPECT_GE(mpf_class(stored, 512), real);
    EXPECT_LT(mpf_class(stored - 1, 512), real);
}

Int max_abs(const IntPoly& f) { return f.max_abs_coeff(); }

}  // namespace

TEST(BoundSingle, Examples) {
    EXPECT_EQ(bound_single(knuth_f()), 1361);
    EXPECT_EQ(bound_single(IntPoly{1, 2, 1}), 5);
    EXPECT_EQ(bound_single(IntPoly{7}), 4);
    EXPECT_THROW(bound_single(IntPoly{}), std::domain_error);
}

TEST(BoundPair, Examples) {
    EXPECT_EQ(bound_pair(knuth_f(), knuth_g()), 511);
    EXPECT_EQ(bound_pair(IntPoly{1, 2, 1}, IntPoly{1, 1}), 3);
    EXPECT_EQ(bound_pair(IntPoly{1, 1}, IntPoly{1, 1}), 3);
    EXPECT_THROW(bound_pair(IntPoly{}, IntPoly{1}), std::domain_error);
}

TEST(BoundResultant, Examples) {
    EXPECT_EQ(bound_resultant(IntPoly{1, 2, 1}, IntPoly{1, 1}), 34);
    const Int a = bound_resultant(knuth_f(), knuth_g());
    EXPECT_EQ(a.get_str().size(), 49u);
    // Exact: sqrt(9^6 7^8 (4^7 113)^6 (4^5 572)^8) ceiling.
    EXPECT_EQ(a, Int("1307370792867681133116921072752813060944677568512"));
    // The degenerate n = m = 1 case evaluates to 2.
    EXPECT_EQ(bound_resultant(IntPoly{0, 1}, IntPoly{0, 1}), 2);
    EXPECT_THROW(bound_resultant(IntPoly{3}, IntPoly{0, 1}), std::domain_error);
}

TEST(BoundAux, Examples) {
    EXPECT_EQ(bound_aux(knuth_f(), knuth_g(), 2), 32);
    EXPECT_EQ(bound_aux(knuth_f(), knuth_g(), 0), 8);
    EXPECT_EQ(bound_aux(knuth_f(), knuth_g(), 6), bound_pair(knuth_f(), knuth_g()));
}

TEST(FullReport, Examples) {
    const BoundReport k = full_report(knuth_f(), knuth_g());
    EXPECT_EQ(k.nf, 1361);
    EXPECT_EQ(k.ng, 766);
    EXPECT_EQ(k.nfg, 511);
    EXPECT_EQ(k.k, 30u);
    EXPECT_FALSE(k.s_deg.has_value());
    const BoundReport s = full_report(IntPoly{1, 2, 1}, IntPoly{1, 1});
    EXPECT_EQ(s.afg, 34);
    EXPECT_EQ(s.k, 3u);
    const BoundReport x = full_report(IntPoly{0, 1}, IntPoly{1, 1});
    EXPECT_GE(x.afg, 2);
    EXPECT_EQ(x.k, primorial_k(x.afg));
}

TEST(BoundsOracle, CeilingsMatchHighPrecisionEvaluation) {
    Rng rng(31);
    for (int i = 0; i < 300; ++i) {
        const IntPoly f = rng.poly_upto(1, 8, 60);
        const IntPoly g = rng.poly_upto(1, 8, 60);
        expect_ceiling(bound_single(f), real_single(f));
        const std::size_t mn = std::min(*f.degree(), *g.degree());
        expect_ceiling(bound_pair(f, g), real_aux(f, g, mn));
        const std::size_t s = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(mn)));
        expect_ceiling(bound_aux(f, g, s), real_aux(f, g, s));
        expect_ceiling(bound_resultant(f, g), real_resultant(f, g));
    }
    expect_ceiling(bound_single(IntPoly{7}), real_single(IntPoly{7}));
}

TEST(BoundsProperties, DivisorCoefficientSoundness) {
    Rng rng(37);
    for (int i = 0; i < 1000; ++i) {
        const IntPoly h = rng.poly_upto(1, 4, 20);
        const IntPoly q = rng.poly_upto(0, 4, 20);
        const IntPoly f = h * q;
        ASSERT_LE(max_abs(h), bound_single(f));
        ASSERT_LE(max_abs(q), bound_single(f));
    }
}

TEST(BoundsProperties, CommonDivisorSoundness) {
    Rng rng(41);
    for (int i = 0; i < 1000; ++i) {
        const IntPoly d = rng.poly_upto(1, 3, 20);
        const IntPoly f = d * rng.poly_upto(0, 4, 20);
        const IntPoly g = d * rng.poly_upto(0, 4, 20);
        ASSERT_LE(max_abs(d), bound_pair(f, g));
        const IntPoly h = gcd_oracle(f, g);
        ASSERT_LE(max_abs(h), bound_pair(f, g));
    }
}

TEST(BoundsProperties, ResultantOfCofactorsSoundness) {
    Rng rng(43);
    for (int i = 0; i < 300; ++i) {
        const IntPoly d = rng.poly_upto(0, 2, 6);
        const IntPoly f1 = rng.poly_upto(1, 4, 6);
        const IntPoly g1 = rng.poly_upto(1, 4, 6);
        const IntPoly f = d * f1, g = d * g1;
        const IntPoly h = gcd_oracle(f, g);
        const IntPoly fc = *divide_exact(f, h), gc = *divide_exact(g, h);
        if (*fc.degree() == 0 || *gc.degree() == 0)
            continue;
        ASSERT_LE(abs(resultant(fc, gc)), bound_resultant(f, g));
    }
}

TEST(BoundsProperties, PrimeCountSoundness) {
    Rng rng(47);
    for (int i = 0; i < 200; ++i) {
        const IntPoly f = primitive_part(rng.poly_upto(1, 3, 5));
        const IntPoly g = primitive_part(rng.poly_upto(1, 3, 5));
        const IntPoly h = gcd_oracle(f, g);
        const IntPoly fc = primitive_part(*divide_exact(f, h));
        const IntPoly gc = primitive_part(*divide_exact(g, h));
        if (*fc.degree() == 0 || *gc.degree() == 0)
            continue;
        const Int r = resultant(fc, gc);
        ASSERT_NE(r, 0);
        ASSERT_LE(distinct_prime_factors(r), full_report(f, g).k);
    }
}

TEST(BoundsProperties, AuxMonotoneInS) {
    Rng rng(53);
    for (int i = 0; i < 1000; ++i) {
        const IntPoly f = rng.poly_upto(1, 7, 40);
        const IntPoly g = rng.poly_upto(1, 7, 40);
        const std::size_t mn = std::min(*f.degree(), *g.degree());
        Int prev = 0;
        for (std::size_t s = 0; s <= mn; ++s) {
            const Int m = bound_aux(f, g, s);
            ASSERT_GE(m, prev);
            ASSERT_LE(m, bound_pair(f, g));
            prev = m;
        }
    }
}
