#ifndef MODGCD_SYLVESTER_HPP
#define MODGCD_SYLVESTER_HPP

#include <cstddef>
#include <vector>

#include "modgcd/polyz.hpp"

namespace modgcd {

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Int& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    const std::vector<Int>& entries() const noexcept { return entries_; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Int> entries_;
};

/// (n+m) x (n+m) Sylvester matrix: m shifted rows of f's coefficients
/// (highest degree first) followed by n shifted rows of g's.
IntMatrix sylvester_matrix(const IntPoly& f, const IntPoly& g);

/// Determinant by Bareiss fraction-free elimination. Square matrices only.
Int determinant(IntMatrix a);

/// det(sylvester_matrix(f, g)).
Int resultant(const IntPoly& f, const IntPoly& g);

/// Entry-wise reduction into [0, p).
IntMatrix reduce_matrix(const IntMatrix& a, const Int& p);

}  // namespace modgcd

#endif  // MODGCD_SYLVESTER_HPP
