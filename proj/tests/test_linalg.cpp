#include "doctest.h"

#include "bb/errors.hpp"
#include "bb/linalg.hpp"

#include "support/bruteforce.hpp"
#include "support/fixtures.hpp"

#include <memory>
#include <random>
#include <vector>

using namespace bb;
using bb::testing::mono;
using bb::testing::poly;

TEST_SUITE_BEGIN("linalg");

namespace {

// Dense coefficient matrix of rows over the given columns.
std::vector<std::vector<Rational>> dense(const std::vector<Polynomial>& rows,
                                         const std::vector<Monomial>& columns) {
    std::vector<std::vector<Rational>> out;
    out.reserve(rows.size());
    for (const Polynomial& row : rows) {
        std::vector<Rational> line;
        line.reserve(columns.size());
        for (const Monomial& column : columns) {
            line.push_back(row.coefficient(column));
        }
        out.push_back(std::move(line));
    }
    return out;
}

// Equality of two row spaces via ranks of the stacked matrices.
bool same_span(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
               const std::vector<Monomial>& columns) {
    std::vector<Polynomial> stacked = a;
    stacked.insert(stacked.end(), b.begin(), b.end());
    const std::size_t ra = matrix_rank(a, columns);
    const std::size_t rb = matrix_rank(b, columns);
    const std::size_t rs = matrix_rank(stacked, columns);
    return ra == rb && rb == rs;
}

} // namespace

TEST_CASE("column map rejects duplicates and finds columns") {
    ColumnMap map({mono({2, 0}), mono({1, 0}), mono({0, 0})});
    CHECK(map.size() == 3);
    CHECK(map.require(mono({1, 0})) == 1);
    CHECK(!map.find(mono({0, 1})).has_value());
    CHECK_THROWS_AS(ColumnMap({mono({1, 0}), mono({1, 0})}), precondition_error);
    CHECK_THROWS_AS(map.require(mono({0, 1})), precondition_error);
}

TEST_CASE("gauss_extend keeps the forward elimination shape") {
    TermOrdering deglex = TermOrdering::deglex(2);

    // {x^2+y, x^2}: the second row reduces to y; the first row keeps its tail.
    std::vector<Polynomial> w =
        gauss_extend({}, {poly("x1^2 + x2", 2), poly("x1^2", 2)}, deglex);
    REQUIRE(w.size() == 2);
    CHECK(w[0] == poly("x1^2 + x2", 2));
    CHECK(w[1] == poly("x2", 2));

    CHECK(gauss_extend({}, {Polynomial::zero(2)}, deglex).empty());
    CHECK(gauss_extend({poly("x1", 2)}, {poly("x1", 2)}, deglex).empty());

    // Dependent combination is eliminated; leading coefficients normalize.
    std::vector<Polynomial> w2 =
        gauss_extend({poly("x1 + x2", 2)}, {poly("2*x1 + 2*x2", 2), poly("3*x2", 2)}, deglex);
    REQUIRE(w2.size() == 1);
    CHECK(w2[0] == poly("x2", 2));
}

TEST_CASE("gauss_extend preserves the row span on random inputs") {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> coeff(-3, 3);
    TermOrdering ordering = TermOrdering::degrevlex(2);
    Universe u(2, 3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Polynomial> g;
        for (int row = 0; row < 4; ++row) {
            std::vector<Term> terms;
            for (const Monomial& m : u.columns()) {
                int c = coeff(rng);
                if (c != 0 && (rng() & 1)) {
                    terms.push_back({m, Rational(c)});
                }
            }
            g.emplace_back(2, std::move(terms));
        }
        std::vector<Polynomial> w = gauss_extend({}, g, ordering);
        CHECK(same_span(w, g, u.columns()));
        // Pivots are pairwise distinct.
        std::vector<Monomial> leads;
        for (const Polynomial& p : w) {
            leads.push_back(leading_term(p, ordering));
            CHECK(leading_coefficient(p, ordering) == Rational(1));
        }
        for (std::size_t i = 0; i < leads.size(); ++i) {
            for (std::size_t j = i + 1; j < leads.size(); ++j) {
                CHECK(!(leads[i] == leads[j]));
            }
        }
    }
}

TEST_CASE("reduced set supports membership tests and head pivots") {
    auto columns = std::make_shared<const ColumnMap>(
        std::vector<Monomial>{mono({0, 1}), mono({1, 0}), mono({0, 0})});
    ReducedSet set(columns, /*full_reduce=*/false);
    CHECK(set.insert(poly("x1 + x2", 2)).has_value()); // head = x2 (left-most column)
    CHECK(set.pivot_monomial(0) == mono({0, 1}));
    CHECK(!set.insert(poly("2*x1 + 2*x2", 2)).has_value());
    CHECK(set.reduce(poly("x1 + x2 + 1", 2)) == poly("1", 2));
    CHECK(set.has_pivot(mono({0, 1})));
    CHECK_THROWS_AS(set.insert(poly("x1^2", 2)), precondition_error);
}

TEST_CASE("canonical form interreduces blocks to unique pivots") {
    Universe u(1, 2);
    TermOrdering ordering = TermOrdering::degrevlex(1);

    CanonicalForm m = canonical_form({poly("x1^2 - 1", 1), poly("x1^2 + x1", 1)}, u, ordering);
    CHECK(m.row_count() == 2);
    REQUIRE(m.block(2).size() == 1);
    REQUIRE(m.block(1).size() == 1);
    // x^2 block: tail reduced so the other pivot x does not occur.
    CHECK(m.block(2)[0] == poly("x1^2 - 1", 1));
    CHECK(m.block(1)[0] == poly("x1 + 1", 1));
    CHECK(m.pivots() == std::vector<Monomial>{mono({1}), mono({2})});

    // Homogeneous 2x2 invertible block reduces to the monomials.
    CanonicalForm h = canonical_form({poly("x1 + x2", 2), poly("x1 - x2", 2)}, Universe(2, 1),
                                     TermOrdering::degrevlex(2));
    REQUIRE(h.block(1).size() == 2);
    CHECK(h.block(1)[0] == poly("x1", 2));
    CHECK(h.block(1)[1] == poly("x2", 2));

    CHECK_THROWS_AS(canonical_form({poly("x1^3", 1)}, u, ordering), precondition_error);
}

TEST_CASE("canonical form is idempotent and span preserving") {
    Universe u(2, 2);
    TermOrdering ordering = TermOrdering::degrevlex(2);
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Polynomial> rows;
        for (int row = 0; row < 4; ++row) {
            std::vector<Term> terms;
            for (const Monomial& m : u.columns()) {
                int c = coeff(rng);
                if (c != 0 && (rng() & 1)) {
                    terms.push_back({m, Rational(c)});
                }
            }
            rows.emplace_back(2, std::move(terms));
        }
        CanonicalForm m = canonical_form(rows, u, ordering);
        CHECK(same_span(m.all_rows(), rows, u.columns()));
        CanonicalForm again = canonical_form(m.all_rows(), u, ordering);
        CHECK(again.all_rows() == m.all_rows());
        // Each pivot occurs in exactly one row.
        for (const Monomial& pivot : m.pivots()) {
            int occurrences = 0;
            for (const Polynomial& row : m.all_rows()) {
                if (!is_zero(row.coefficient(pivot))) {
                    ++occurrences;
                }
            }
            CHECK(occurrences == 1);
        }
    }
}

TEST_CASE("matrix rank handles induced submatrices") {
    CHECK(matrix_rank({poly("x1 + x2", 2), poly("x1 - x2", 2)},
                      {mono({1, 0}), mono({0, 1})}) == 2);
    CHECK(matrix_rank({poly("x1 + x2", 2)}, {mono({1, 0})}) == 1);
    // Leading forms {x^3, x y^2 + y^3} restricted to columns (x^2 y, y^3):
    // the first row vanishes entirely, the second contributes one unit row.
    CHECK(matrix_rank({poly("x1^3", 2), poly("x1*x2^2 + x2^3", 2)},
                      {mono({2, 1}), mono({0, 3})}) == 1);
    CHECK(matrix_rank({}, {mono({1, 0})}) == 0);
    CHECK_THROWS_AS(matrix_rank({poly("x1", 2)}, {mono({1, 0}), mono({1, 0})}),
                    precondition_error);
}

TEST_CASE("matrix rank agrees with fraction-free elimination") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> coeff(-3, 3);
    Universe u(6, 1); // 7 columns: the six variables and the unit
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Polynomial> rows;
        const int height = 1 + static_cast<int>(rng() % 6);
        for (int row = 0; row < height; ++row) {
            std::vector<Term> terms;
            for (const Monomial& m : u.columns()) {
                int c = coeff(rng);
                if (c != 0) {
                    terms.push_back({m, Rational(c)});
                }
            }
            rows.emplace_back(6, std::move(terms));
        }
        CHECK(matrix_rank(rows, u.columns()) ==
              bb::testing::bareiss_rank(dense(rows, u.columns())));
    }
}

TEST_SUITE_END();
