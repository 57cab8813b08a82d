#include "modgcd/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace modgcd {

namespace {

Int pow_ui(const Int& base, std::size_t e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int pow4(std::size_t e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 4, e);
    return r;
}

void require_nonzero(const IntPoly& f, const char* what) {
    if (f.is_zero())
        throw std::domain_error(std::string(what) + ": zero polynomial");
}

// Square of 2^(n-1) * ||f|| as an exact integer for n >= 1.
Int single_sq(const IntPoly& f) { return pow4(*f.degree() - 1) * norm_sq(f); }

}  // namespace

Int bound_single(const IntPoly& f) {
    require_nonzero(f, "bound_single");
    if (*f.degree() == 0)
        return ceil_sqrt(ceil_div(norm_sq(f), 4));
    return ceil_sqrt(single_sq(f));
}

Int bound_aux(const IntPoly& f, const IntPoly& g, std::size_t s) {
    require_nonzero(f, "bound_aux");
    require_nonzero(g, "bound_aux");
    const Int a0 = leading_coeff(f);
    const Int b0 = leading_coeff(g);
    const Int w = int_gcd(a0, b0);
    const Int nf = norm_sq(f);
    const Int ng = norm_sq(g);
    // ||f||/|a0| <= ||g||/|b0|  <=>  nf * b0^2 <= ng * a0^2
    const bool use_f = nf * b0 * b0 <= ng * a0 * a0;
    const Int& norm = use_f ? nf : ng;
    const Int lc_sq = use_f ? Int(a0 * a0) : Int(b0 * b0);
    return ceil_sqrt(ceil_div(pow4(s) * w * w * norm, lc_sq));
}

Int bound_pair(const IntPoly& f, const IntPoly& g) {
    require_nonzero(f, "bound_pair");
    require_nonzero(g, "bound_pair");
    return bound_aux(f, g, std::min(*f.degree(), *g.degree()));
}

Int bound_resultant(const IntPoly& f, const IntPoly& g) {
    require_nonzero(f, "bound_resultant");
    require_nonzero(g, "bound_resultant");
    const std::size_t n = *f.degree();
    const std::size_t m = *g.degree();
    if (n == 0 || m == 0)
        throw std::domain_error("bound_resultant: both polynomials need positive degree");
    const Int sq = pow_ui(Int(n + 1), m) * pow_ui(Int(m + 1), n) * pow_ui(single_sq(f), m) *
                   pow_ui(single_sq(g), n);
    return ceil_sqrt(sq);
}

BoundReport full_report(const IntPoly& f, const IntPoly& g) {
    BoundReport r;
    r.afg = bound_resultant(f, g);
    r.nf = bound_single(f);
    r.ng = bound_single(g);
    r.nfg = bound_pair(f, g);
    r.k = primorial_k(r.afg);
    return r;
}

}  // namespace modgcd
