#ifndef MODGCD_MODPOLY_HPP
#define MODGCD_MODPOLY_HPP

#include <utility>
#include <vector>

#include "modgcd/polyz.hpp"

namespace modgcd {

/// Polynomial over Z_p. Residues are kept in [0, p); the top stored
/// coefficient is nonzero and the zero polynomial is empty. Binary operations
/// on polynomials with different moduli throw std::domain_error.
class ModPoly {
public:
    /// Reduces every coefficient into [0, p).
    ModPoly(Int modulus, std::vector<Int> coeffs);
    explicit ModPoly(Int modulus) : modulus_(std::move(modulus)) {}

    const Int& modulus() const noexcept { return modulus_; }
    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Degree degree() const noexcept;
    Int leading_coeff() const;

    friend bool operator==(const ModPoly&, const ModPoly&) = default;

private:
    Int modulus_;
    std::vector<Int> coeffs_;
};

/// Representative of a mod p in [0, p). Throws when p < 2.
Int reduce_int(const Int& a, const Int& p);

/// Coefficient-wise reduction; the degree may drop.
ModPoly reduce_poly(const IntPoly& f, const Int& p);

/// b with a*b = 1 mod p. Throws when a = 0 mod p.
Int mod_inverse(const Int& a, const Int& p);

ModPoly operator+(const ModPoly& f, const ModPoly& g);
ModPoly operator-(const ModPoly& f, const ModPoly& g);
ModPoly operator*(const ModPoly& f, const ModPoly& g);

/// Long division in Z_p[x]: f = q*g + r with r = 0 or deg r < deg g.
std::pair<ModPoly, ModPoly> divrem_mod(const ModPoly& f, const ModPoly& g);

/// Monic gcd by the Euclidean remainder sequence.
ModPoly euclid_gcd_mod(const ModPoly& f, const ModPoly& g);

/// t * e, coefficient-wise mod p.
ModPoly scale_mod(const ModPoly& e, const Int& t);

/// e scaled so its leading coefficient is 1.
ModPoly make_monic(const ModPoly& e);

}  // namespace modgcd

#endif  // MODGCD_MODPOLY_HPP
