#ifndef MODGCD_BOUNDS_HPP
#define MODGCD_BOUNDS_HPP

#include <cstddef>
#include <optional>

#include "modgcd/polyz.hpp"

namespace modgcd {

/// Certified integer ceilings of the coefficient and resultant bounds for a
/// pair of polynomials. The real-valued quantities never exceed the stored
/// integers.
struct BoundReport {
    Int nf;   ///< divisor coefficient bound for f
    Int ng;   ///< divisor coefficient bound for g
    Int nfg;  ///< common divisor coefficient bound
    Int afg;  ///< resultant-of-cofactors bound
    std::size_t k = 0;  ///< primorial_k(afg)
    std::optional<std::size_t> s_deg;  ///< degree estimate behind m_bound
    std::optional<Int> m_bound;        ///< bound_aux(f, g, *s_deg)

    friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// ceil(2^(n-1) * ||f||), n = deg f. For constants the factor is 1/2.
Int bound_single(const IntPoly& f);

/// ceil(2^min(n,m) * gcd(a0,b0) * min(||f||/|a0|, ||g||/|b0|)).
Int bound_pair(const IntPoly& f, const IntPoly& g);

/// ceil(sqrt((n+1)^m (m+1)^n) * Nf^m * Ng^n) using the exact (unrounded) Nf, Ng.
/// Both polynomials must have positive degree.
Int bound_resultant(const IntPoly& f, const IntPoly& g);

/// The common divisor bound with 2^s in place of 2^min(n,m).
Int bound_aux(const IntPoly& f, const IntPoly& g, std::size_t s);

/// nf, ng, nfg, afg and k for two nonconstant polynomials.
BoundReport full_report(const IntPoly& f, const IntPoly& g);

}  // namespace modgcd

#endif  // MODGCD_BOUNDS_HPP
