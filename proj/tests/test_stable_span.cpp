#include "doctest.h"

#include "bb/errors.hpp"
#include "bb/linalg.hpp"
#include "bb/stable_span.hpp"

#include "support/bruteforce.hpp"
#include "support/fixtures.hpp"

#include <algorithm>
#include <vector>

using namespace bb;
using bb::testing::mono;
using bb::testing::poly;

TEST_SUITE_BEGIN("stable_span");

namespace {

std::size_t stacked_rank(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                         const std::vector<Monomial>& columns) {
    std::vector<Polynomial> stacked = a;
    stacked.insert(stacked.end(), b.begin(), b.end());
    return matrix_rank(stacked, columns);
}

} // namespace

TEST_CASE("neighborhood extension lists inputs then variable multiples") {
    std::vector<Polynomial> f = {poly("x1 + 1", 2)};
    std::vector<Polynomial> ext = neighborhood_extension(f);
    REQUIRE(ext.size() == 3);
    CHECK(ext[0] == poly("x1 + 1", 2));
    CHECK(ext[1] == poly("x1^2 + x1", 2));
    CHECK(ext[2] == poly("x1*x2 + x2", 2));

    // Duplicates collapse: x1*x2 arises from both inputs.
    std::vector<Polynomial> g = {poly("x1", 2), poly("x2", 2)};
    std::vector<Polynomial> ext2 = neighborhood_extension(g);
    REQUIRE(ext2.size() == 5);
    CHECK(ext2[0] == poly("x1", 2));
    CHECK(ext2[1] == poly("x2", 2));
    CHECK(ext2[2] == poly("x1^2", 2));
    CHECK(ext2[3] == poly("x1*x2", 2));
    CHECK(ext2[4] == poly("x2^2", 2));
}

TEST_CASE("stable span of a univariate quadratic fills the truncation") {
    // <x^2 - 1> inside degree 3: rows x^2 - 1 and x^3 - x.
    Universe u(1, 3);
    TermOrdering ordering = TermOrdering::degrevlex(1);
    SpanBasis span = stable_span({poly("x1^2 - 1", 1)}, u, ordering);
    REQUIRE(span.rows.size() == 2);
    CHECK(span.rows[0] == poly("x1^2 - 1", 1));
    CHECK(span.rows[1] == poly("x1^3 - x1", 1));
    CHECK(span.stabilized);
    CHECK(is_stabilized(span));
}

TEST_CASE("stable span sees cross cancellations above the bound") {
    // f1 = x^2 + y, f2 = x^2: their difference y is degree 1, and the
    // products x*f1 - x*f2 = x*y, y*f1 - y*f2 = y^2 fall back under bound 2.
    Universe u(2, 2);
    TermOrdering ordering = TermOrdering::degrevlex(2);
    SpanBasis span = stable_span({poly("x1^2 + x2", 2), poly("x1^2", 2)}, u, ordering);
    std::vector<Monomial> leads;
    for (const Polynomial& row : span.rows) {
        leads.push_back(leading_term(row, ordering));
    }
    std::sort(leads.begin(), leads.end(),
              [&](const Monomial& a, const Monomial& b) { return ordering.less(a, b); });
    // Span contains x^2, y, x*y, y^2 (everything of <x^2, y> up to degree 2),
    // listed ascending: y, then degree two from below.
    CHECK(leads == std::vector<Monomial>{mono({0, 1}), mono({0, 2}), mono({1, 1}), mono({2, 0})});
    CHECK(span.stabilized);
}

TEST_CASE("stable span drops zero rows and rejects outside support") {
    Universe u(2, 2);
    TermOrdering ordering = TermOrdering::degrevlex(2);
    SpanBasis span = stable_span({Polynomial::zero(2), poly("x1", 2)}, u, ordering);
    REQUIRE(span.rows.size() == 3);
    CHECK_THROWS_AS(stable_span({poly("x1^3", 2)}, u, ordering), precondition_error);
}

TEST_CASE("stable span result does not depend on the generator presentation") {
    Universe u(2, 3);
    TermOrdering ordering = TermOrdering::degrevlex(2);
    std::vector<Polynomial> f = {poly("x1^2 - x2", 2), poly("x1*x2 - 1", 2)};
    std::vector<Polynomial> g = {poly("x1^2 - x2", 2),
                                 poly("x1*x2 - 1 + 2*x1^2 - 2*x2", 2)}; // g2 = f2 + 2 f1
    SpanBasis a = stable_span(f, u, ordering);
    SpanBasis b = stable_span(g, u, ordering);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i] == b.rows[i]);
    }
}

TEST_CASE("stable span grows monotonically with the bound") {
    TermOrdering ordering = TermOrdering::degrevlex(2);
    std::vector<Polynomial> f = {poly("x1^2 - x2", 2), poly("x2^2 - 1", 2)};
    SpanBasis small = stable_span(f, Universe(2, 2), ordering);
    SpanBasis large = stable_span(f, Universe(2, 4), ordering);
    // Every row of the small span lies in the large span.
    const std::vector<Monomial>& columns = large.universe.columns();
    const std::size_t base = matrix_rank(large.rows, columns);
    CHECK(stacked_rank(large.rows, small.rows, columns) == base);
    CHECK(small.rows.size() <= large.rows.size());
}

TEST_CASE("terminal span equals the ideal truncation from a reference basis") {
    // Balance system on five 0/1 variables: compare against multiples of a
    // reference reduction basis, degree by degree.
    std::vector<Polynomial> f = bb::testing::balance5_system("22222");
    TermOrdering ordering = TermOrdering::degrevlex(5);
    SpanBasis span = terminal_span(f, ordering);
    CHECK(span.stabilized);
    const unsigned bound = span.universe.degree_bound();
    CHECK(bound == 3);

    std::vector<Polynomial> gb = bb::testing::groebner_basis(f, ordering);
    std::vector<Polynomial> trunc = bb::testing::ideal_truncation(gb, 5, bound);
    const std::vector<Monomial>& columns = span.universe.columns();
    const std::size_t span_rank = matrix_rank(span.rows, columns);
    const std::size_t trunc_rank = matrix_rank(trunc, columns);
    CHECK(span_rank == span.rows.size());
    CHECK(span_rank == trunc_rank);
    CHECK(stacked_rank(span.rows, trunc, columns) == span_rank);

    // Codimension inside degree <= 3 equals the quotient dimension 10:
    // C(5+3,3) = 56 columns minus 46 independent rows.
    CHECK(columns.size() - span_rank == 10);
}

TEST_CASE("terminal span stops as soon as the top degree is covered") {
    // Both degree-one monomials are leading terms right away, so the bound
    // never grows past the input degree.
    TermOrdering ordering = TermOrdering::degrevlex(2);
    SpanBasis span = terminal_span({poly("x1", 2), poly("x2 - 1", 2)}, ordering);
    CHECK(span.universe.degree_bound() == 1);
    CanonicalForm m = canonical_form(span.rows, span.universe, ordering, span.stabilized);
    CHECK(m.covers_top_degree());
}

TEST_CASE("terminal span throws past the degree cap on positive dimension") {
    // <x1> in two variables never covers the pure powers of x2.
    CHECK_THROWS_AS(terminal_span({poly("x1", 2)}, TermOrdering::degrevlex(2), 6),
                    degree_cap_error);
}

TEST_SUITE_END();
