#ifndef MODGCD_PARSER_HPP
#define MODGCD_PARSER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "modgcd/polyz.hpp"

namespace modgcd {

/// Malformed polynomial text. position() is the 0-based offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Parses sums of terms in x, e.g. "x^8+x^6-3x^4", "21 - 9*x + 3x^6".
///
///   poly := ["+"|"-"] term (("+"|"-") term)*
///   term := integer ["*"] [var] | var
///   var  := "x" ["^" nonneg-integer]
///
/// Whitespace is ignored, terms may come in any order and repeated exponents
/// are summed.
IntPoly parse_poly(std::string_view text);

/// Descending-exponent form such as "x^8+x^6-3x^4-3x^3+8x^2+2x-5"; "0" for zero.
std::string format_poly(const IntPoly& f);

}  // namespace modgcd

#endif  // MODGCD_PARSER_HPP
