#include "fixtures.hpp"

namespace bb::testing {

Monomial mono(std::vector<unsigned> exponents) { return Monomial(std::move(exponents)); }

Polynomial poly(const std::string& text, unsigned var_count) {
    return parse_polynomial(text, VarTable::numbered(var_count));
}

std::vector<Polynomial> balance5_system(const std::string& exponents) {
    std::vector<Polynomial> f = {poly("x1 + x2 + x3 - x4 - x5", 5)};
    for (unsigned i = 0; i < 5; ++i) {
        std::string var = "x" + std::to_string(i + 1);
        f.push_back(poly(var + "^" + exponents.substr(i, 1) + " - " + var, 5));
    }
    return f;
}

std::vector<Polynomial> balance6_system() {
    std::vector<Polynomial> f = {poly("x1 + x2 + x3 - x4 - x5 + x6", 6)};
    for (unsigned i = 0; i < 6; ++i) {
        std::string var = "x" + std::to_string(i + 1);
        f.push_back(poly(var + "^2 - " + var, 6));
    }
    return f;
}

std::vector<Polynomial> cubic_pair_system() {
    return {poly("x1^3", 2), poly("x1*x2^2 + x2^3", 2)};
}

PointSet seven_points() {
    auto point = [](long a, long b, long c, long d) {
        return std::vector<Rational>{Rational(a), Rational(b), Rational(c), Rational(d)};
    };
    return PointSet{4,
                    {point(0, 0, 0, 1), point(1, 0, 0, 2), point(3, 0, 0, 2), point(5, 0, 0, 3),
                     point(-1, 0, 0, 4), point(4, 4, 4, 5), point(0, 0, 7, 6)}};
}

std::vector<Polynomial> seven_points_system() { return vanishing_ideal(seven_points()); }

std::vector<Polynomial> square_example_system() {
    return {poly("x1^3 + x1*x2", 2), poly("x1^2*x2", 2), poly("x1*x2^2", 2), poly("x2^3", 2)};
}

std::vector<Polynomial> twisted_example_system() {
    return {poly("x2^2 + x1*x2 + x1^2", 2), poly("x1*x2^2", 2), poly("x2^4", 2)};
}

} // namespace bb::testing
