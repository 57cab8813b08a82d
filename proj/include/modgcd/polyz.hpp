#ifndef MODGCD_POLYZ_HPP
#define MODGCD_POLYZ_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "modgcd/arith.hpp"

namespace modgcd {

/// Degree of a polynomial; std::nullopt for the zero polynomial.
using Degree = std::optional<std::size_t>;

/// Dense univariate polynomial over Z. coeffs()[i] is the coefficient of x^i;
/// the top stored coefficient is never zero and the zero polynomial is empty.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    /// Convenience for tests and literals: coefficients in ascending order.
    IntPoly(std::initializer_list<long> ascending);

    static IntPoly constant(const Int& c);
    /// c * x^e
    static IntPoly monomial(const Int& c, std::size_t e);

    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Degree degree() const noexcept;
    /// Coefficient of x^i, zero beyond the degree.
    Int coeff(std::size_t i) const;
    /// Largest |coefficient|; 0 for the zero polynomial.
    Int max_abs_coeff() const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void trim();
    std::vector<Int> coeffs_;
};

IntPoly operator+(const IntPoly& f, const IntPoly& g);
IntPoly operator-(const IntPoly& f, const IntPoly& g);
IntPoly operator-(const IntPoly& f);
IntPoly operator*(const IntPoly& f, const IntPoly& g);
IntPoly operator*(const Int& c, const IntPoly& f);

/// Degree; std::nullopt for zero.
Degree degree(const IntPoly& f);

/// Throws std::domain_error on zero.
Int leading_coeff(const IntPoly& f);

/// gcd of the coefficients, carrying the sign of the leading coefficient.
Int content(const IntPoly& f);

/// f / content(f); the leading coefficient of the result is positive.
IntPoly primitive_part(const IntPoly& f);

/// Sum of squared coefficients (the squared Euclidean norm).
Int norm_sq(const IntPoly& f);

/// Quotient q with f = d*q in Z[x], or std::nullopt when d does not divide f.
/// Throws std::domain_error when d is zero.
std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& d);

bool divides(const IntPoly& d, const IntPoly& f);

/// Pseudo-remainder of f by g: lc(g)^(deg f - deg g + 1) * f mod g.
IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g);

}  // namespace modgcd

#endif  // MODGCD_POLYZ_HPP
