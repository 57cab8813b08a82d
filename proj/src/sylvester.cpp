#include "modgcd/sylvester.hpp"

#include <stdexcept>
#include <utility>

#include "modgcd/modpoly.hpp"

namespace modgcd {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix sylvester_matrix(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::domain_error("sylvester_matrix: zero polynomial");
    const std::size_t n = *f.degree();
    const std::size_t m = *g.degree();
    if (n + m == 0)
        throw std::domain_error("sylvester_matrix: both polynomials are constant");
    const std::size_t size = n + m;
    IntMatrix s(size, size);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i)
            s(r, r + i) = f.coeffs()[n - i];
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i)
            s(m + r, r + i) = g.coeffs()[m - i];
    return s;
}

Int determinant(IntMatrix a) {
    if (a.rows() != a.cols())
        throw std::domain_error("determinant: matrix is not square");
    const std::size_t n = a.rows();
    if (n == 0)
        return Int(1);
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && sgn(a(pivot, k)) == 0)
                ++pivot;
            if (pivot == n)
                return Int(0);
            for (std::size_t j = k; j < n; ++j)
                std::swap(a(k, j), a(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Int resultant(const IntPoly& f, const IntPoly& g) { return determinant(sylvester_matrix(f, g)); }

IntMatrix reduce_matrix(const IntMatrix& a, const Int& p) {
    if (p < 2)
        throw std::domain_error("reduce_matrix: modulus must be at least 2");
    IntMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = reduce_int(a(r, c), p);
    return out;
}

}  // namespace modgcd
