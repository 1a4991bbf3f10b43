#include "bb/linalg.hpp"

#include "bb/errors.hpp"

#include <algorithm>

namespace bb {

ColumnMap::ColumnMap(std::vector<Monomial> columns) : columns_(std::move(columns)) {
    index_.reserve(columns_.size());
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (!index_.emplace(columns_[i], i).second) {
            throw precondition_error("duplicate column monomial: " + columns_[i].str());
        }
    }
}

ColumnMap ColumnMap::sorted_descending(const Universe& universe, const TermOrdering& ordering) {
    std::vector<Monomial> columns = universe.columns();
    std::sort(columns.begin(), columns.end(),
              [&](const Monomial& a, const Monomial& b) { return ordering.greater(a, b); });
    return ColumnMap(std::move(columns));
}

ColumnMap ColumnMap::from_supports(const std::vector<Polynomial>& polys,
                                   const TermOrdering& ordering) {
    std::vector<Monomial> columns;
    for (const Polynomial& p : polys) {
        for (const Term& t : p.terms()) {
            columns.push_back(t.monomial);
        }
    }
    std::sort(columns.begin(), columns.end(),
              [&](const Monomial& a, const Monomial& b) { return ordering.greater(a, b); });
    columns.erase(std::unique(columns.begin(), columns.end()), columns.end());
    return ColumnMap(std::move(columns));
}

std::optional<std::size_t> ColumnMap::find(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::size_t ColumnMap::require(const Monomial& m) const {
    auto found = find(m);
    if (!found) {
        throw precondition_error("support monomial outside column layout: " + m.str());
    }
    return *found;
}

ReducedSet::ReducedSet(std::shared_ptr<const ColumnMap> columns, bool full_reduce)
    : columns_(std::move(columns)),
      full_reduce_(full_reduce),
      row_of_column_(columns_->size(), -1) {}

ReducedSet::SparseRow ReducedSet::to_row(const Polynomial& p) const {
    SparseRow row;
    row.reserve(p.term_count());
    for (const Term& t : p.terms()) {
        row.emplace_back(static_cast<std::uint32_t>(columns_->require(t.monomial)),
                         t.coefficient);
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

Polynomial ReducedSet::to_polynomial(const SparseRow& row) const {
    std::vector<Term> terms;
    terms.reserve(row.size());
    for (const auto& [col, coeff] : row) {
        terms.push_back(Term{columns_->monomial(col), coeff});
    }
    unsigned vc = static_cast<unsigned>(columns_->size() ? columns_->monomial(0).var_count() : 0);
    return Polynomial(vc, std::move(terms));
}

void ReducedSet::axpy_row(SparseRow& target, const Rational& factor, const SparseRow& source) {
    SparseRow merged;
    merged.reserve(target.size() + source.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < target.size() || j < source.size()) {
        if (j == source.size() || (i < target.size() && target[i].first < source[j].first)) {
            merged.push_back(std::move(target[i]));
            ++i;
        } else if (i == target.size() || source[j].first < target[i].first) {
            merged.emplace_back(source[j].first, factor * source[j].second);
            ++j;
        } else {
            Rational c = target[i].second + factor * source[j].second;
            if (!is_zero(c)) {
                merged.emplace_back(target[i].first, std::move(c));
            }
            ++i;
            ++j;
        }
    }
    target = std::move(merged);
}

void ReducedSet::reduce_in_place(SparseRow& row) const {
    // Cancel leading entries as long as a stored row owns that pivot column.
    while (!row.empty()) {
        std::int32_t owner = row_of_column_[row.front().first];
        if (owner < 0) {
            break;
        }
        Rational factor = -row.front().second; // stored pivots are normalized to 1
        axpy_row(row, factor, rows_[static_cast<std::size_t>(owner)]);
    }
    if (!full_reduce_) {
        return;
    }
    // Interreduce the tail: cancel any remaining entry sitting on another
    // row's pivot column. Stored rows in full-reduce mode never contain other
    // pivots, so each cancellation only introduces non-pivot entries and the
    // loop terminates.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 1; k < row.size(); ++k) {
            std::int32_t owner = row_of_column_[row[k].first];
            if (owner >= 0) {
                Rational factor = -row[k].second;
                axpy_row(row, factor, rows_[static_cast<std::size_t>(owner)]);
                changed = true;
                break;
            }
        }
    }
}

std::optional<std::size_t> ReducedSet::insert(const Polynomial& p) {
    SparseRow row = to_row(p);
    reduce_in_place(row);
    if (row.empty()) {
        return std::nullopt;
    }
    // Normalize the pivot coefficient to 1.
    Rational pivot_value = row.front().second;
    if (pivot_value != 1) {
        for (auto& [col, coeff] : row) {
            coeff /= pivot_value;
        }
    }
    std::uint32_t pivot_col = row.front().first;
    std::size_t new_index = rows_.size();
    if (full_reduce_) {
        // Back-substitute: remove the new pivot from every stored row.
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            for (const auto& [col, coeff] : rows_[r]) {
                if (col == pivot_col) {
                    Rational factor = -coeff;
                    axpy_row(rows_[r], factor, row);
                    break;
                }
                if (col > pivot_col) {
                    break;
                }
            }
        }
    }
    rows_.push_back(std::move(row));
    row_of_column_[pivot_col] = static_cast<std::int32_t>(new_index);
    return new_index;
}

Polynomial ReducedSet::reduce(const Polynomial& p) const {
    SparseRow row = to_row(p);
    // Forward pass only; membership in the row span is exact for echelon sets.
    SparseRow work = std::move(row);
    while (!work.empty()) {
        std::int32_t owner = row_of_column_[work.front().first];
        if (owner < 0) {
            break;
        }
        Rational factor = -work.front().second;
        axpy_row(work, factor, rows_[static_cast<std::size_t>(owner)]);
    }
    return to_polynomial(work);
}

bool ReducedSet::has_pivot(const Monomial& m) const {
    auto col = columns_->find(m);
    if (!col) {
        return false;
    }
    return row_of_column_[*col] >= 0;
}

std::vector<Monomial> ReducedSet::pivot_monomials() const {
    std::vector<Monomial> result;
    result.reserve(rows_.size());
    for (std::size_t col = 0; col < row_of_column_.size(); ++col) {
        if (row_of_column_[col] >= 0) {
            result.push_back(columns_->monomial(col));
        }
    }
    return result;
}

Polynomial ReducedSet::row_polynomial(std::size_t row) const {
    return to_polynomial(rows_.at(row));
}

std::vector<Polynomial> ReducedSet::row_polynomials() const {
    std::vector<Polynomial> result;
    result.reserve(rows_.size());
    for (const SparseRow& row : rows_) {
        result.push_back(to_polynomial(row));
    }
    return result;
}

const Monomial& ReducedSet::pivot_monomial(std::size_t row) const {
    return columns_->monomial(rows_.at(row).front().first);
}

std::vector<Polynomial> gauss_extend(const std::vector<Polynomial>& v,
                                     const std::vector<Polynomial>& g,
                                     const TermOrdering& ordering) {
    std::vector<Polynomial> all(v);
    all.insert(all.end(), g.begin(), g.end());
    auto columns = std::make_shared<const ColumnMap>(ColumnMap::from_supports(all, ordering));
    ReducedSet set(columns, /*full_reduce=*/false);
    for (const Polynomial& p : v) {
        if (p.is_zero()) {
            throw precondition_error("echelon input contains the zero polynomial");
        }
        if (set.has_pivot(leading_term(p, ordering))) {
            throw precondition_error("echelon input has a repeated leading term");
        }
        set.insert(p);
    }
    std::vector<Polynomial> added;
    for (const Polynomial& p : g) {
        if (auto row = set.insert(p)) {
            added.push_back(set.row_polynomial(*row));
        }
    }
    return added;
}

const std::vector<Polynomial>& CanonicalForm::block(unsigned degree) const {
    static const std::vector<Polynomial> kEmpty;
    auto it = blocks.find(degree);
    return it == blocks.end() ? kEmpty : it->second;
}

std::size_t CanonicalForm::row_count() const {
    std::size_t n = 0;
    for (const auto& [degree, rows] : blocks) {
        n += rows.size();
    }
    return n;
}

std::vector<Polynomial> CanonicalForm::all_rows() const {
    std::vector<Polynomial> rows;
    rows.reserve(row_count());
    for (const auto& [degree, block_rows] : blocks) {
        rows.insert(rows.end(), block_rows.begin(), block_rows.end());
    }
    return rows;
}

std::vector<Monomial> CanonicalForm::pivots() const {
    std::vector<Monomial> result;
    result.reserve(row_count());
    for (const auto& [degree, block_rows] : blocks) {
        for (const Polynomial& row : block_rows) {
            result.push_back(leading_term(row, ordering));
        }
    }
    return result;
}

bool CanonicalForm::covers_top_degree() const {
    unsigned d = universe.degree_bound();
    return block(d).size() == monomial_count(universe.var_count(), d);
}

CanonicalForm canonical_form(const std::vector<Polynomial>& rows, const Universe& universe,
                             const TermOrdering& ordering, bool stabilized) {
    for (const Polynomial& p : rows) {
        for (const Term& t : p.terms()) {
            if (!universe.contains(t.monomial)) {
                throw precondition_error("row support outside the universe: " + t.monomial.str());
            }
        }
    }
    auto columns =
        std::make_shared<const ColumnMap>(ColumnMap::sorted_descending(universe, ordering));
    ReducedSet set(columns, /*full_reduce=*/true);
    for (const Polynomial& p : rows) {
        set.insert(p);
    }
    CanonicalForm form{universe, ordering, {}, stabilized};
    std::vector<Polynomial> reduced = set.row_polynomials();
    for (Polynomial& row : reduced) {
        unsigned degree = row.degree();
        form.blocks[degree].push_back(std::move(row));
    }
    for (auto& [degree, block_rows] : form.blocks) {
        std::sort(block_rows.begin(), block_rows.end(),
                  [&](const Polynomial& a, const Polynomial& b) {
                      return column_before(leading_term(a, ordering), leading_term(b, ordering));
                  });
    }
    return form;
}

std::size_t matrix_rank(const std::vector<Polynomial>& rows,
                        const std::vector<Monomial>& columns) {
    auto map = std::make_shared<const ColumnMap>(ColumnMap(columns));
    ReducedSet set(map, /*full_reduce=*/false);
    std::size_t rank = 0;
    for (const Polynomial& p : rows) {
        // Induced sub-matrix: drop coefficients outside the column list.
        std::vector<Term> kept;
        for (const Term& t : p.terms()) {
            if (map->find(t.monomial)) {
                kept.push_back(t);
            }
        }
        if (kept.empty()) {
            continue;
        }
        Polynomial restricted(p.var_count(), std::move(kept));
        if (set.insert(restricted)) {
            ++rank;
        }
    }
    return rank;
}

} // namespace bb
