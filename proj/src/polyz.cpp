#include "modgcd/polyz.hpp"

#include <algorithm>
#include <stdexcept>

namespace modgcd {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> ascending) {
    coeffs_.reserve(ascending.size());
    for (long c : ascending)
        coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }

IntPoly IntPoly::monomial(const Int& c, std::size_t e) {
    std::vector<Int> v(e + 1);
    v[e] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
        coeffs_.pop_back();
}

Degree IntPoly::degree() const noexcept {
    if (coeffs_.empty())
        return std::nullopt;
    return coeffs_.size() - 1;
}

Int IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }

Int IntPoly::max_abs_coeff() const {
    Int m = 0;
    for (const auto& c : coeffs_)
        if (abs(c) > m)
            m = abs(c);
    return m;
}

IntPoly operator+(const IntPoly& f, const IntPoly& g) {
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    std::vector<Int> out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = f.coeff(i) + g.coeff(i);
    return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& f) {
    std::vector<Int> out(f.coeffs());
    for (auto& c : out)
        c = -c;
    return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& f, const IntPoly& g) { return f + (-g); }

IntPoly operator*(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero())
        return {};
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    std::vector<Int> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return IntPoly(std::move(out));
}

IntPoly operator*(const Int& c, const IntPoly& f) {
    std::vector<Int> out(f.coeffs());
    for (auto& x : out)
        x *= c;
    return IntPoly(std::move(out));
}

Degree degree(const IntPoly& f) { return f.degree(); }

Int leading_coeff(const IntPoly& f) {
    if (f.is_zero())
        throw std::domain_error("leading_coeff: zero polynomial");
    return f.coeffs().back();
}

Int content(const IntPoly& f) {
    if (f.is_zero())
        throw std::domain_error("content: zero polynomial");
    Int g = 0;
    for (const auto& c : f.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return sgn(f.coeffs().back()) < 0 ? Int(-g) : g;
}

IntPoly primitive_part(const IntPoly& f) {
    const Int c = content(f);
    std::vector<Int> out(f.coeffs());
    for (auto& x : out)
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return IntPoly(std::move(out));
}

Int norm_sq(const IntPoly& f) {
    Int s = 0;
    for (const auto& c : f.coeffs())
        s += c * c;
    return s;
}

std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& d) {
    if (d.is_zero())
        throw std::domain_error("divide_exact: division by the zero polynomial");
    if (f.is_zero())
        return IntPoly{};
    const std::size_t n = *f.degree();
    const std::size_t m = *d.degree();
    if (n < m)
        return std::nullopt;

    std::vector<Int> rem(f.coeffs());
    std::vector<Int> quot(n - m + 1);
    const auto& dc = d.coeffs();
    const Int& lead = dc.back();
    for (std::size_t k = n - m + 1; k-- > 0;) {
        Int& top = rem[k + m];
        if (sgn(top) == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            return std::nullopt;
        Int q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        for (std::size_t j = 0; j <= m; ++j)
            rem[k + j] -= q * dc[j];
        quot[k] = std::move(q);
    }
    for (std::size_t i = 0; i < m; ++i)
        if (sgn(rem[i]) != 0)
            return std::nullopt;
    return IntPoly(std::move(quot));
}

bool divides(const IntPoly& d, const IntPoly& f) { return divide_exact(f, d).has_value(); }

IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero())
        throw std::domain_error("pseudo_remainder: zero divisor");
    if (f.is_zero() || *f.degree() < *g.degree())
        return f;
    const std::size_t m = *g.degree();
    const auto& gc = g.coeffs();
    const Int& lead = gc.back();
    std::vector<Int> rem(f.coeffs());
    // Each step: rem = lead * rem - top * x^k * g, dropping the top term.
    for (std::size_t k = *f.degree() - m + 1; k-- > 0;) {
        Int top = rem[k + m];
        for (auto& c : rem)
            c *= lead;
        if (sgn(top) != 0)
            for (std::size_t j = 0; j <= m; ++j)
                rem[k + j] -= top * gc[j];
        rem.pop_back();
    }
    return IntPoly(std::move(rem));
}

}  // namespace modgcd
