#include <gtest/gtest.h>

#include "modgcd/modpoly.hpp"
#include "support/testing.hpp"

using namespace modgcd;
using namespace modgcd::testing;

namespace {

ModPoly mp(long p, std::initializer_list<long> ascending) {
    std::vector<Int> c;
    for (long x : ascending)
        c.emplace_back(x);
    return ModPoly(Int(p), std::move(c));
}

}  // namespace

TEST(ReduceInt, Examples) {
    EXPECT_EQ(reduce_int(-5, 2), 1);
    EXPECT_EQ(reduce_int(8, 2), 0);
    EXPECT_EQ(reduce_int(1031, 1031), 0);
    EXPECT_EQ(reduce_int(-1, 7), 6);
    EXPECT_THROW(reduce_int(3, 1), std::domain_error);
}

TEST(ReducePoly, KnuthImages) {
    EXPECT_EQ(reduce_poly(knuth_g(), 3), mp(3, {0, 0, 2, 0, 2}));
    EXPECT_EQ(reduce_poly(knuth_f(), 3), mp(3, {1, 2, 2, 0, 0, 0, 1, 0, 1}));
    EXPECT_EQ(reduce_poly(knuth_f(), 2), mp(2, {1, 0, 0, 1, 1, 0, 1, 0, 1}));
    EXPECT_EQ(reduce_poly(knuth_g(), 2), mp(2, {1, 1, 0, 0, 1, 0, 1}));
    EXPECT_TRUE(reduce_poly(IntPoly{0, 0, 0, 5}, 5).is_zero());
    EXPECT_THROW(reduce_poly(knuth_f(), 0), std::domain_error);
}

TEST(ModInverse, Examples) {
    EXPECT_EQ(mod_inverse(2, 5), 3);
    EXPECT_EQ(mod_inverse(1, 1031), 1);
    EXPECT_EQ(mod_inverse(2, 1031), 516);
    EXPECT_THROW(mod_inverse(0, 7), std::domain_error);
    EXPECT_THROW(mod_inverse(14, 7), std::domain_error);
}

TEST(DivremMod, Examples) {
    auto [q2, r2] = divrem_mod(mp(2, {1, 0, 1}), mp(2, {1, 1}));
    EXPECT_EQ(q2, mp(2, {1, 1}));
    EXPECT_TRUE(r2.is_zero());

    auto [q5, r5] = divrem_mod(mp(5, {1, 0, 1}), mp(5, {1, 1}));
    EXPECT_EQ(q5, mp(5, {4, 1}));
    EXPECT_EQ(r5, mp(5, {2}));

    const ModPoly f = reduce_poly(knuth_f(), 7);
    auto [q, r] = divrem_mod(f, f);
    EXPECT_EQ(q, mp(7, {1}));
    EXPECT_TRUE(r.is_zero());
}

TEST(DivremMod, Errors) {
    EXPECT_THROW(divrem_mod(mp(5, {1, 1}), ModPoly(Int(5))), std::domain_error);
    EXPECT_THROW(divrem_mod(mp(5, {1, 1}), mp(7, {1, 1})), std::domain_error);
    EXPECT_THROW(mp(5, {1}) + mp(7, {1}), std::domain_error);
}

TEST(DivremMod, DivisionIdentity) {
    Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        const Int p = std::vector<long>{2, 3, 5, 7, 11, 13, 1031}[rng.uniform(0, 6)];
        const ModPoly f = reduce_poly(rng.poly_upto(0, 8, 50), p);
        ModPoly g = reduce_poly(rng.poly_upto(0, 5, 50), p);
        if (g.is_zero())
            continue;
        auto [q, r] = divrem_mod(f, g);
        ASSERT_EQ(q * g + r, f);
        ASSERT_TRUE(r.is_zero() || *r.degree() < *g.degree());
    }
}

TEST(EuclidGcdMod, Examples) {
    const ModPoly e2 = euclid_gcd_mod(reduce_poly(knuth_f(), 2), reduce_poly(knuth_g(), 2));
    EXPECT_EQ(e2, mp(2, {1, 1, 1}));
    const ModPoly e3 = euclid_gcd_mod(reduce_poly(knuth_f(), 3), reduce_poly(knuth_g(), 3));
    EXPECT_EQ(e3, mp(3, {1}));
    EXPECT_EQ(euclid_gcd_mod(mp(7, {3, 4, 1}), mp(7, {1, 2, 1})), mp(7, {1, 1}));
    // For every prime p > 4 the gcd of x^2+4x+3 and x^2+2x+1 is x+1 once normalized.
    for (long p : {5, 7, 11, 101, 1031})
        EXPECT_EQ(euclid_gcd_mod(mp(p, {3, 4, 1}), mp(p, {1, 2, 1})), mp(p, {1, 1}));
    EXPECT_EQ(euclid_gcd_mod(mp(5, {2, 4}), ModPoly(Int(5))), mp(5, {3, 1}));
    EXPECT_THROW(euclid_gcd_mod(ModPoly(Int(5)), ModPoly(Int(5))), std::domain_error);
}

TEST(ScaleMod, Examples) {
    EXPECT_EQ(scale_mod(mp(5, {1, 1}), 2), mp(5, {2, 2}));
    EXPECT_TRUE(scale_mod(mp(5, {1, 1}), 0).is_zero());
    EXPECT_EQ(scale_mod(mp(5, {3, 1, 4}), 1), mp(5, {3, 1, 4}));
}

TEST(ModpolyProperties, ReductionIsARingHomomorphism) {
    Rng rng(5);
    const auto primes = primes_up_to(71);
    ASSERT_EQ(primes.size(), 20u);
    for (int i = 0; i < 1000; ++i) {
        const Int p = primes[rng.uniform(0, 19)];
        const IntPoly f = rng.poly_upto(0, 7, 100);
        const IntPoly g = rng.poly_upto(0, 7, 100);
        ASSERT_EQ(reduce_poly(f + g, p), reduce_poly(f, p) + reduce_poly(g, p));
        ASSERT_EQ(reduce_poly(f * g, p), reduce_poly(f, p) * reduce_poly(g, p));
    }
}

namespace {

// All monic polynomials of degree `deg` over Z_p, ascending coefficients.
std::vector<std::vector<Int>> monic_polys(std::size_t deg, long p) {
    std::vector<std::vector<Int>> out;
    std::vector<long> digits(deg, 0);
    for (;;) {
        std::vector<Int> c(digits.begin(), digits.end());
        c.push_back(1);
        out.push_back(std::move(c));
        std::size_t i = 0;
        while (i < deg && ++digits[i] == p)
            digits[i++] = 0;
        if (i == deg)
            return out;
    }
}

}  // namespace

TEST(ModpolyProperties, GcdIsCommonDivisorOfMaximalDegree) {
    Rng rng(17);
    for (long p : {2L, 3L, 5L}) {
        std::vector<std::vector<std::vector<Int>>> by_degree;
        for (std::size_t d = 0; d <= 3; ++d)
            by_degree.push_back(monic_polys(d, p));
        for (int i = 0; i < 60; ++i) {
            // Plant a common factor so gcds of positive degree show up.
            const IntPoly common = rng.poly_upto(0, 2, 4);
            const IntPoly f = common * rng.poly_upto(0, 3, 4);
            const IntPoly g = common * rng.poly_upto(0, 3, 4);
            const ModPoly fp = reduce_poly(f, p);
            const ModPoly gp = reduce_poly(g, p);
            if (fp.is_zero() || gp.is_zero())
                continue;
            const ModPoly e = euclid_gcd_mod(fp, gp);
            ASSERT_EQ(e.leading_coeff(), 1);
            ASSERT_TRUE(monic_divides_mod(e.coeffs(), fp.coeffs(), Int(p)));
            ASSERT_TRUE(monic_divides_mod(e.coeffs(), gp.coeffs(), Int(p)));
            std::size_t best = 0;
            for (std::size_t d = 0; d <= 3; ++d)
                for (const auto& h : by_degree[d])
                    if (monic_divides_mod(h, fp.coeffs(), Int(p)) && monic_divides_mod(h, gp.coeffs(), Int(p)))
                        best = std::max(best, d);
            ASSERT_LE(best, *e.degree());
            if (*e.degree() <= 3)
                ASSERT_EQ(best, *e.degree());
        }
    }
}
