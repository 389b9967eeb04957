#include "gfw/rational.hpp"

#include <stdexcept>

namespace gfw {

std::string rat_string(const Rat& r) {
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rat parse_rat(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rat(Int(std::string(text)));
        Int num{std::string(text.substr(0, slash))};
        Int den{std::string(text.substr(slash + 1))};
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational literal '" + std::string(text) + "'");
    }
}

}  // namespace gfw
