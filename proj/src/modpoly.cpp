#include "modgcd/modpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace modgcd {

namespace {

void check_modulus(const Int& p) {
    if (p < 2)
        throw std::domain_error("modulus must be at least 2");
}

void check_same_modulus(const ModPoly& f, const ModPoly& g) {
    if (f.modulus() != g.modulus())
        throw std::domain_error("modulus mismatch");
}

}  // namespace

ModPoly::ModPoly(Int modulus, std::vector<Int> coeffs)
    : modulus_(std::move(modulus)), coeffs_(std::move(coeffs)) {
    check_modulus(modulus_);
    for (auto& c : coeffs_)
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), modulus_.get_mpz_t());
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
        coeffs_.pop_back();
}

Degree ModPoly::degree() const noexcept {
    if (coeffs_.empty())
        return std::nullopt;
    return coeffs_.size() - 1;
}

Int ModPoly::leading_coeff() const {
    if (coeffs_.empty())
        throw std::domain_error("leading_coeff: zero polynomial");
    return coeffs_.back();
}

Int reduce_int(const Int& a, const Int& p) {
    check_modulus(p);
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
}

ModPoly reduce_poly(const IntPoly& f, const Int& p) { return ModPoly(p, f.coeffs()); }

Int mod_inverse(const Int& a, const Int& p) {
    check_modulus(p);
    Int inv;
    if (sgn(reduce_int(a, p)) == 0 || mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::domain_error("mod_inverse: element is not invertible");
    return inv;
}

ModPoly operator+(const ModPoly& f, const ModPoly& g) {
    check_same_modulus(f, g);
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    std::vector<Int> out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size())
            out[i] += a[i];
        if (i < b.size())
            out[i] += b[i];
    }
    return ModPoly(f.modulus(), std::move(out));
}

ModPoly operator-(const ModPoly& f, const ModPoly& g) {
    check_same_modulus(f, g);
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    std::vector<Int> out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size())
            out[i] += a[i];
        if (i < b.size())
            out[i] -= b[i];
    }
    return ModPoly(f.modulus(), std::move(out));
}

ModPoly operator*(const ModPoly& f, const ModPoly& g) {
    check_same_modulus(f, g);
    if (f.is_zero() || g.is_zero())
        return ModPoly(f.modulus());
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    std::vector<Int> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return ModPoly(f.modulus(), std::move(out));
}

std::pair<ModPoly, ModPoly> divrem_mod(const ModPoly& f, const ModPoly& g) {
    check_same_modulus(f, g);
    if (g.is_zero())
        throw std::domain_error("divrem_mod: division by the zero polynomial");
    const Int& p = f.modulus();
    if (f.is_zero() || *f.degree() < *g.degree())
        return {ModPoly(p), f};

    const std::size_t m = *g.degree();
    const auto& gc = g.coeffs();
    const Int lead_inv = mod_inverse(g.leading_coeff(), p);
    std::vector<Int> rem(f.coeffs());
    std::vector<Int> quot(rem.size() - m);
    for (std::size_t k = quot.size(); k-- > 0;) {
        Int q = rem[k + m] * lead_inv % p;
        if (sgn(q) != 0) {
            for (std::size_t j = 0; j <= m; ++j) {
                rem[k + j] -= q * gc[j];
                mpz_fdiv_r(rem[k + j].get_mpz_t(), rem[k + j].get_mpz_t(), p.get_mpz_t());
            }
        }
        quot[k] = std::move(q);
    }
    rem.resize(m);
    return {ModPoly(p, std::move(quot)), ModPoly(p, std::move(rem))};
}

ModPoly make_monic(const ModPoly& e) {
    if (e.is_zero())
        return e;
    return scale_mod(e, mod_inverse(e.leading_coeff(), e.modulus()));
}

ModPoly euclid_gcd_mod(const ModPoly& f, const ModPoly& g) {
    check_same_modulus(f, g);
    if (f.is_zero() && g.is_zero())
        throw std::domain_error("euclid_gcd_mod: both polynomials are zero");
    ModPoly a = f;
    ModPoly b = g;
    while (!b.is_zero()) {
        ModPoly r = divrem_mod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

ModPoly scale_mod(const ModPoly& e, const Int& t) {
    std::vector<Int> out(e.coeffs());
    for (auto& c : out)
        c *= t;
    return ModPoly(e.modulus(), std::move(out));
}

}  // namespace modgcd
