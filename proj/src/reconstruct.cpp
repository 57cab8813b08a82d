#include "modgcd/reconstruct.hpp"

#include <stdexcept>

namespace modgcd {

IntPoly reconstruct_poly(const ModPoly& dp) {
    const Int& p = dp.modulus();
    if (mpz_even_p(p.get_mpz_t()))
        throw std::domain_error("reconstruct_poly: modulus must be odd");
    std::vector<Int> out(dp.coeffs());
    for (auto& b : out)
        if (2 * b > p)
            b -= p;
    return IntPoly(std::move(out));
}

}  // namespace modgcd
