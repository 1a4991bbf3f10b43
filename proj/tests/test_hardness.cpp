#include "doctest.h"

#include "bb/errors.hpp"
#include "bb/hardness.hpp"
#include "bb/pipeline.hpp"

#include "support/bruteforce.hpp"
#include "support/fixtures.hpp"

#include <random>
#include <set>
#include <vector>

using namespace bb;
using bb::testing::mono;

TEST_SUITE_BEGIN("hardness");

namespace {

Graph random_graph(std::mt19937_64& rng, unsigned n, double density) {
    Graph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (unsigned u = 0; u < n; ++u) {
        for (unsigned v = u + 1; v < n; ++v) {
            if (coin(rng) < density) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

} // namespace

TEST_CASE("graph basics and error paths") {
    Graph g(4);
    g.add_edge(2, 0);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK(!g.has_edge(1, 2));
    CHECK(g.edge_count() == 1);
    // Stored with the smaller endpoint first.
    CHECK(g.edges().count({0, 2}) == 1);

    CHECK_THROWS_AS(g.add_edge(1, 1), precondition_error);
    CHECK_THROWS_AS(g.add_edge(0, 4), precondition_error);
    CHECK_THROWS_AS(g.add_edge(2, 0), precondition_error);
}

TEST_CASE("clique system shape") {
    // n = 3, k = 2: one power-sum form x1 + 2 x2 + 3 x3, then all ten cubic
    // monomials in three variables.
    std::vector<Polynomial> f = clique_system(3, 2);
    REQUIRE(f.size() == 11);
    std::vector<Term> expected = {{mono({1, 0, 0}), Rational(1)},
                                  {mono({0, 1, 0}), Rational(2)},
                                  {mono({0, 0, 1}), Rational(3)}};
    CHECK(f[0] == Polynomial(3, expected));
    for (std::size_t i = 1; i < f.size(); ++i) {
        CHECK(f[i].terms().size() == 1);
        CHECK(f[i].degree() == 3);
    }

    // n = 4, k = 2: two forms with coefficient rows (1,2,3,4), (1,4,9,16).
    std::vector<Polynomial> g = clique_system(4, 2);
    CHECK(g[0].coefficient(mono({0, 0, 0, 1})) == Rational(4));
    CHECK(g[1].coefficient(mono({0, 1, 0, 0})) == Rational(4));
    CHECK(g[1].coefficient(mono({0, 0, 0, 1})) == Rational(16));

    // k = n: no forms at all, only the cubic monomials.
    std::vector<Polynomial> h = clique_system(3, 3);
    CHECK(h.size() == 10);

    CHECK_THROWS_AS(clique_system(3, 0), precondition_error);
    CHECK_THROWS_AS(clique_system(3, 4), precondition_error);
}

TEST_CASE("clique system quotient dimension") {
    for (unsigned n = 2; n <= 5; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            StableModel m =
                build_stable_model(clique_system(n, k), TermOrdering::degrevlex(n));
            CHECK(m.signature.quotient_dimension() == 1 + k + k * (k + 1) / 2);
            CHECK(m.signature.at(0) == 1);
            CHECK(m.signature.at(1) == k);
            CHECK(m.signature.at(2) == k * (k + 1) / 2);
            CHECK(m.signature.at(3) == 0);
        }
    }
}

TEST_CASE("admissible order ideals of the clique system are the k-subsets") {
    CHECK(admissible_structure_check(3, 2));
    CHECK(admissible_structure_check(4, 2));
    CHECK(admissible_structure_check(4, 3));
    CHECK(admissible_structure_check(5, 3));
}

TEST_CASE("power sum submatrices are invertible") {
    // The forms' coefficient matrix on any |forms|-subset of variables is a
    // (scaled) Vandermonde matrix, hence invertible; this is what pins every
    // k-subset of variables as an admissible degree-one slice.
    for (unsigned n = 2; n <= 6; ++n) {
        for (unsigned k = 1; k < n; ++k) {
            std::vector<Polynomial> f = clique_system(n, k);
            const unsigned forms = n - k;
            std::vector<Polynomial> rows(f.begin(), f.begin() + forms);
            // Every subset of `forms` variables gives full rank.
            std::vector<unsigned> pick(forms);
            auto rec = [&](auto&& self, unsigned from, unsigned depth) -> void {
                if (depth == forms) {
                    std::vector<Monomial> columns;
                    for (unsigned i : pick) {
                        columns.push_back(Monomial::variable(i, n));
                    }
                    CHECK(matrix_rank(rows, columns) == forms);
                    return;
                }
                for (unsigned i = from; i < n; ++i) {
                    pick[depth] = i;
                    self(self, i + 1, depth + 1);
                }
            };
            rec(rec, 0, 0);
        }
    }
}

TEST_CASE("k clique decision on fixed graphs") {
    Graph triangle(3);
    triangle.add_edge(0, 1);
    triangle.add_edge(1, 2);
    triangle.add_edge(0, 2);
    CliqueDecision yes = k_clique_decide(triangle, 3);
    CHECK(yes.has_clique);
    CHECK(yes.threshold == 3);
    CHECK(yes.score == 3);
    // The witness ideal's degree-one slice is the clique.
    CHECK(yes.ideal.slice(1).size() == 3);

    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CliqueDecision no = k_clique_decide(path, 3);
    CHECK(!no.has_clique);
    CHECK(no.threshold == 3);
    CHECK(no.score < 3);
    CliqueDecision pair = k_clique_decide(path, 2);
    CHECK(pair.has_clique);
    CHECK(pair.threshold == 1);
}

TEST_CASE("k clique decision matches brute force on random graphs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 10; ++trial) {
        const unsigned n = 3 + static_cast<unsigned>(rng() % 3); // 3..5
        Graph g = random_graph(rng, n, 0.5);
        for (unsigned k = 2; k <= n; ++k) {
            CliqueDecision d = k_clique_decide(g, k);
            const bool expected = bb::testing::brute_force_has_clique(g, k);
            CHECK(d.has_clique == expected);
            CHECK(d.threshold == static_cast<long long>(k) * (k - 1) / 2);
            // The score equals the threshold exactly when a clique exists;
            // it can never exceed it.
            CHECK(d.score <= d.threshold);
            if (expected) {
                CHECK(d.score == d.threshold);
                // The witness really is a clique.
                const auto& slice = d.ideal.slice(1);
                std::vector<unsigned> vertices;
                for (const Monomial& m : slice) {
                    for (unsigned v = 0; v < n; ++v) {
                        if (m.exponents()[v] == 1) {
                            vertices.push_back(v);
                        }
                    }
                }
                REQUIRE(vertices.size() == k);
                for (std::size_t a = 0; a < vertices.size(); ++a) {
                    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
                        CHECK(g.has_edge(vertices[a], vertices[b]));
                    }
                }
            }
        }
    }
}

TEST_SUITE_END();
