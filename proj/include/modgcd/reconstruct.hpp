#ifndef MODGCD_RECONSTRUCT_HPP
#define MODGCD_RECONSTRUCT_HPP

#include "modgcd/modpoly.hpp"

namespace modgcd {

/// Symmetric lift of a modular image: residues b < p/2 map to b, the rest to
/// b - p. The caller picks p > 2N where N bounds the true coefficients.
/// Throws std::domain_error for p = 2, which has no symmetric range.
IntPoly reconstruct_poly(const ModPoly& dp);

}  // namespace modgcd

#endif  // MODGCD_RECONSTRUCT_HPP
