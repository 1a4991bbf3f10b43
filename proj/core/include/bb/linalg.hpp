#pragma once

#include "bb/polynomial.hpp"
#include "bb/term_order.hpp"
#include "bb/universe.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

namespace bb {

// An explicit left-to-right column layout for coefficient matrices.
class ColumnMap {
public:
    // Columns in the given order; throws precondition_error on duplicates.
    explicit ColumnMap(std::vector<Monomial> columns);
    // All monomials of the universe sorted descending by the ordering
    // (left-most column = largest monomial).
    static ColumnMap sorted_descending(const Universe& universe, const TermOrdering& ordering);
    // The union of the supports of the given polynomials, sorted descending.
    static ColumnMap from_supports(const std::vector<Polynomial>& polys,
                                   const TermOrdering& ordering);

    std::size_t size() const { return columns_.size(); }
    const Monomial& monomial(std::size_t index) const { return columns_[index]; }
    const std::vector<Monomial>& columns() const { return columns_; }
    std::optional<std::size_t> find(const Monomial& m) const;
    // Throws precondition_error when m is not a column.
    std::size_t require(const Monomial& m) const;

private:
    std::vector<Monomial> columns_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

// A set of rows kept in row-echelon form over a fixed column layout:
// every stored row is normalized (pivot coefficient 1) and no two rows share
// a pivot column. The pivot of a row is its left-most nonzero column, so a
// layout sorted descending by a term ordering makes the pivot the
// sigma-leading term, and an arbitrary layout gives head-based elimination.
//
// Reduction of an incoming row always cancels pivot hits exhaustively
// (forward pass). With full_reduce, tails are interreduced as well - each
// newly found pivot is eliminated from all stored rows, which keeps the set
// in reduced row-echelon form and makes the result the unique RREF of the
// row space.
class ReducedSet {
public:
    ReducedSet(std::shared_ptr<const ColumnMap> columns, bool full_reduce);

    const ColumnMap& columns() const { return *columns_; }
    bool full_reduce() const { return full_reduce_; }
    std::size_t row_count() const { return rows_.size(); }

    // Reduces p against the stored rows. If a nonzero remainder survives it
    // is normalized and stored; the returned value is its row index. Returns
    // nullopt when p reduces to zero. Throws precondition_error when p's
    // support is not covered by the column layout.
    std::optional<std::size_t> insert(const Polynomial& p);

    // Forward reduction without storing (exact membership test against the
    // stored echelon set: the remainder is zero iff p lies in the row span).
    Polynomial reduce(const Polynomial& p) const;

    bool has_pivot(const Monomial& m) const;
    // Pivot monomials of all rows, in column order (left to right).
    std::vector<Monomial> pivot_monomials() const;
    Polynomial row_polynomial(std::size_t row) const;
    std::vector<Polynomial> row_polynomials() const;
    const Monomial& pivot_monomial(std::size_t row) const;

private:
    using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;

    SparseRow to_row(const Polynomial& p) const;
    Polynomial to_polynomial(const SparseRow& row) const;
    void reduce_in_place(SparseRow& row) const;
    static void axpy_row(SparseRow& target, const Rational& factor, const SparseRow& source);

    std::shared_ptr<const ColumnMap> columns_;
    bool full_reduce_;
    std::vector<SparseRow> rows_;
    std::vector<std::int32_t> row_of_column_; // column index -> row index or -1
};

// Extends the echelon set v by the polynomials g (forward pass only): each
// element of g is reduced against the current rows and, when a nonzero
// remainder survives, normalized and added. Returns the added rows in
// insertion order. Rows of v must have pairwise distinct leading terms.
std::vector<Polynomial> gauss_extend(const std::vector<Polynomial>& v,
                                     const std::vector<Polynomial>& g,
                                     const TermOrdering& ordering);

// The degree-blocked fully interreduced form of a row space inside a
// truncated universe: blocks[i] holds the rows of total degree exactly i,
// each row's pivot (its ordering-largest monomial) occurs in no other row,
// and rows are listed by pivot in canonical column order. This is the unique
// reduced row-echelon form of span(rows) over the descending column layout.
struct CanonicalForm {
    Universe universe;
    TermOrdering ordering;
    std::map<unsigned, std::vector<Polynomial>> blocks;
    // Set when the rows came from a stabilized span computation.
    bool stabilized = false;

    const std::vector<Polynomial>& block(unsigned degree) const;
    std::size_t row_count() const;
    std::vector<Polynomial> all_rows() const; // degree ascending
    std::vector<Monomial> pivots() const;     // all block pivots
    // True when every monomial of top degree (the universe bound) is a pivot.
    bool covers_top_degree() const;
};

// Throws precondition_error when a row's support leaves the universe.
CanonicalForm canonical_form(const std::vector<Polynomial>& rows, const Universe& universe,
                             const TermOrdering& ordering, bool stabilized = false);

// Rank of the sub-matrix of the given rows induced by the given columns
// (coefficients at monomials outside the column list are dropped).
std::size_t matrix_rank(const std::vector<Polynomial>& rows,
                        const std::vector<Monomial>& columns);

} // namespace bb
