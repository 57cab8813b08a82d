#include "modgcd/parser.hpp"

#include <cctype>
#include <map>

namespace modgcd {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

constexpr std::size_t kMaxExponent = 1u << 20;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    IntPoly parse() {
        skip_ws();
        if (at_end())
            throw ParseError("empty input", pos_);
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        term(negative);
        for (skip_ws(); !at_end(); skip_ws()) {
            const char c = peek();
            if (c != '+' && c != '-')
                throw ParseError(std::string("expected '+' or '-', found '") + c + "'", pos_);
            ++pos_;
            term(c == '-');
        }
        std::vector<Int> coeffs;
        if (!terms_.empty())
            coeffs.resize(terms_.rbegin()->first + 1);
        for (auto& [e, c] : terms_)
            coeffs[e] = std::move(c);
        return IntPoly(std::move(coeffs));
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    std::string digits() {
        std::string out;
        skip_ws();
        while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) ||
                             std::isspace(static_cast<unsigned char>(peek())))) {
            if (!std::isspace(static_cast<unsigned char>(peek())))
                out.push_back(peek());
            ++pos_;
        }
        return out;
    }

    void term(bool negative) {
        skip_ws();
        const std::size_t start = pos_;
        Int coeff = 1;
        bool has_coeff = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = Int(digits(), 10);
            has_coeff = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
                if (at_end() || peek() != 'x')
                    throw ParseError("expected 'x' after '*'", pos_);
            }
        }
        std::size_t exponent = 0;
        if (!at_end() && peek() == 'x') {
            ++pos_;
            exponent = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                const std::size_t epos = pos_;
                if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                    throw ParseError("exponent must be a nonnegative integer", epos);
                const Int e(digits(), 10);
                if (e > kMaxExponent)
                    throw ParseError("exponent too large", epos);
                exponent = e.get_ui();
            }
        } else if (!has_coeff) {
            throw ParseError(at_end() ? std::string("expected a term")
                                      : std::string("unexpected character '") + peek() + "'",
                             start);
        }
        if (negative)
            coeff = -coeff;
        terms_[exponent] += coeff;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::map<std::size_t, Int> terms_;
};

}  // namespace

IntPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string format_poly(const IntPoly& f) {
    if (f.is_zero())
        return "0";
    std::string out;
    const auto& c = f.coeffs();
    for (std::size_t e = c.size(); e-- > 0;) {
        if (sgn(c[e]) == 0)
            continue;
        const Int mag = abs(c[e]);
        if (sgn(c[e]) < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        if (mag != 1 || e == 0)
            out += mag.get_str();
        if (e >= 1)
            out += 'x';
        if (e >= 2)
            out += '^' + std::to_string(e);
    }
    return out;
}

}  // namespace modgcd
