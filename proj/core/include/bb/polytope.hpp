#pragma once

#include "bb/border_basis.hpp"
#include "bb/linalg.hpp"
#include "bb/order_ideal.hpp"
#include "bb/preference.hpp"
#include "bb/universe.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <unordered_map>
#include <vector>

namespace bb {

// The degree-i leading forms of a canonical form, prepared for fast
// complement-rank tests: the rows are in reduced echelon form over the
// canonical degree-i column layout, so each column is either the pivot of
// exactly one row or free, and a row is fully described by its pivot plus its
// coefficients at the free columns (the "star" part).
struct RankBlock {
    unsigned degree = 0;
    std::vector<Monomial> columns;            // the full degree-i slice, canonical order
    std::vector<Polynomial> lf_rows;          // leading forms, reduced echelon
    std::vector<int> pivot_row_of_column;     // per column: owning row or -1 (free)
    std::vector<std::size_t> free_columns;    // positions of the pivot-less columns
    std::vector<std::vector<Rational>> star;  // star[r][k] = lf_rows[r] at free_columns[k]
};

// Exact per-degree feasibility tests for order-ideal slices, derived from a
// stabilized canonical form that covers its top degree.
class RankOracle {
public:
    explicit RankOracle(const CanonicalForm& m);

    unsigned var_count() const { return var_count_; }
    unsigned degree_bound() const { return degree_bound_; }
    const DegreeSignature& signature() const { return signature_; }
    const RankBlock& block(unsigned degree) const;

    // True iff the square submatrix of the leading forms on the columns NOT
    // in the slice is invertible (the slice can serve as the degree-i part of
    // an admissible order ideal). The slice must consist of degree-`degree`
    // monomials.
    bool slice_admissible(unsigned degree, const std::vector<Monomial>& slice) const;

private:
    unsigned var_count_;
    unsigned degree_bound_;
    DegreeSignature signature_;
    std::vector<RankBlock> blocks_;
};

// Full admissibility: slice sizes match the signature degree by degree and
// every slice passes the complement-invertibility test.
bool is_admissible(const OrderIdeal& o, const RankOracle& oracle, const DegreeSignature& sig);
bool is_admissible(const OrderIdeal& o, const RankOracle& oracle);

// One covering divisibility constraint z[lower] >= z[upper], where
// upper = x_j * lower; transitivity makes the full divisibility family
// redundant.
struct DivisibilityRow {
    std::size_t lower;
    std::size_t upper;
};

// One per-degree cardinality equality: sum of the listed variables = rhs.
struct CardinalityRow {
    unsigned degree;
    std::vector<std::size_t> variables;
    unsigned rhs;
};

// One explicit rank cut: sum of the listed variables >= rhs, where the
// variables form a subset U of a degree slice with |U| = #leading-form rows
// and rhs = |U| - rank(leading forms restricted to U).
struct RankRow {
    unsigned degree;
    std::vector<std::size_t> variables;
    std::uint64_t rhs;
};

// The 0/1 model whose integral points, intersected with the exact rank
// oracle, are the characteristic vectors of admissible order ideals. One
// variable per monomial of degree < degree_bound (higher degrees are always
// outside every admissible order ideal), listed degree-ascending and
// canonically within each degree.
class PolytopeModel {
public:
    PolytopeModel(unsigned var_count, unsigned top_degree, std::vector<Monomial> variables,
                  std::vector<DivisibilityRow> divisibility,
                  std::vector<CardinalityRow> cardinality, DegreeSignature signature);

    unsigned var_count() const { return var_count_; }
    // The universe degree bound d; variables cover degrees 0..d-1.
    unsigned top_degree() const { return top_degree_; }
    const std::vector<Monomial>& variables() const { return variables_; }
    std::optional<std::size_t> variable_index(const Monomial& m) const;
    const std::vector<DivisibilityRow>& divisibility() const { return divisibility_; }
    const std::vector<CardinalityRow>& cardinality() const { return cardinality_; }
    const DegreeSignature& signature() const { return signature_; }

private:
    unsigned var_count_;
    unsigned top_degree_;
    std::vector<Monomial> variables_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
    std::vector<DivisibilityRow> divisibility_;
    std::vector<CardinalityRow> cardinality_;
    DegreeSignature signature_;
};

// Builds the covering-pair divisibility rows and the cardinality equalities
// for degrees 1..d-1 from a stabilized canonical form covering its top
// degree. Throws precondition_error otherwise.
PolytopeModel build_model(const CanonicalForm& m);

// The 0/1 vector of an order ideal over the model's variables; throws
// precondition_error when a member is not a model variable.
std::vector<std::uint8_t> characteristic_vector(const OrderIdeal& o, const PolytopeModel& model);

// Inverse: collects the variables set to 1 (validates downward closure).
OrderIdeal order_ideal_from_vector(const std::vector<std::uint8_t>& z, const PolytopeModel& model);

// Explicit rank cuts for export. For each degree the full subset family is
// materialized when it has at most `budget` members; otherwise up to `budget`
// deterministically chosen support-based subsets per degree are used and
// *complete is cleared. Vacuous rows (rhs = 0) are dropped in both cases
// without affecting completeness.
std::vector<RankRow> materialize_rank_rows(const PolytopeModel& model, const RankOracle& oracle,
                                           std::uint64_t budget, bool* complete);

struct LpOptions {
    // Per-degree cap on explicit rank constraints; 0 exports the documented
    // relaxation (divisibility + cardinality only).
    std::uint64_t rank_budget = 0;
};

struct LpStats {
    std::uint64_t divisibility_rows = 0;
    std::uint64_t cardinality_rows = 0;
    std::uint64_t rank_rows = 0;
    bool rank_family_complete = false;
};

// Writes the model in CPLEX LP text format: objective from the preference,
// divisibility and cardinality rows, explicit rank cuts up to the budget,
// and binary declarations. Lines stay within 255 characters; comments are
// prefixed with a backslash; the header declares the export a RELAXATION
// whenever the rank-cut family is incomplete.
LpStats write_lp(std::ostream& out, const PolytopeModel& model, const RankOracle& oracle,
                 const Preference& pref, const LpOptions& options = {});

} // namespace bb
