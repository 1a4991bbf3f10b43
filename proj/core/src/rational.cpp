#include "bb/rational.hpp"

#include "bb/errors.hpp"

#include <cctype>

namespace bb {

Rational make_rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) {
        throw error("rational with zero denominator");
    }
    Rational value(num, den);
    value.canonicalize();
    return value;
}

Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

Rational parse_rational(std::string_view text) {
    std::size_t slash = text.find('/');
    auto parse_int = [&](std::string_view part, const char* what) {
        if (part.empty()) {
            throw parse_error(std::string("empty ") + what + " in rational literal");
        }
        std::size_t start = (part[0] == '+' || part[0] == '-') ? 1 : 0;
        if (start == part.size()) {
            throw parse_error(std::string("missing digits in ") + what);
        }
        for (std::size_t i = start; i < part.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) {
                throw parse_error(std::string("invalid digit in ") + what, i);
            }
        }
        return Integer(std::string(part), 10);
    };
    if (slash == std::string_view::npos) {
        return make_rational(parse_int(text, "numerator"), Integer(1));
    }
    Integer num = parse_int(text.substr(0, slash), "numerator");
    Integer den = parse_int(text.substr(slash + 1), "denominator");
    return make_rational(num, den);
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

std::string to_string(const Integer& value) {
    return value.get_str();
}

} // namespace bb
