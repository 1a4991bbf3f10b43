#include "bb/polytope.hpp"

#include "bb/errors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace bb {

RankOracle::RankOracle(const CanonicalForm& m)
    : var_count_(m.universe.var_count()),
      degree_bound_(m.universe.degree_bound()),
      signature_(degree_signature(m)) {
    blocks_.resize(degree_bound_ + 1);
    for (unsigned i = 0; i <= degree_bound_; ++i) {
        RankBlock& block = blocks_[i];
        block.degree = i;
        block.columns = m.universe.block(i);
        std::unordered_map<Monomial, std::size_t, MonomialHash> position;
        position.reserve(block.columns.size());
        for (std::size_t p = 0; p < block.columns.size(); ++p) {
            position.emplace(block.columns[p], p);
        }
        block.pivot_row_of_column.assign(block.columns.size(), -1);
        for (const Polynomial& row : m.block(i)) {
            Polynomial lf = leading_form(row);
            const Monomial& pivot = leading_term(row, m.ordering);
            block.pivot_row_of_column[position.at(pivot)] =
                static_cast<int>(block.lf_rows.size());
            block.lf_rows.push_back(std::move(lf));
        }
        for (std::size_t p = 0; p < block.columns.size(); ++p) {
            if (block.pivot_row_of_column[p] < 0) {
                block.free_columns.push_back(p);
            }
        }
        block.star.resize(block.lf_rows.size());
        for (std::size_t r = 0; r < block.lf_rows.size(); ++r) {
            block.star[r].reserve(block.free_columns.size());
            for (std::size_t p : block.free_columns) {
                block.star[r].push_back(block.lf_rows[r].coefficient(block.columns[p]));
            }
        }
    }
}

const RankBlock& RankOracle::block(unsigned degree) const {
    if (degree >= blocks_.size()) {
        throw precondition_error("rank oracle has no block of degree " + std::to_string(degree));
    }
    return blocks_[degree];
}

bool RankOracle::slice_admissible(unsigned degree, const std::vector<Monomial>& slice) const {
    if (degree >= blocks_.size()) {
        return slice.empty();
    }
    const RankBlock& b = blocks_[degree];
    std::unordered_set<Monomial, MonomialHash> chosen(slice.begin(), slice.end());
    if (chosen.size() != slice.size()) {
        return false; // duplicate entries
    }
    std::vector<Monomial> complement;
    complement.reserve(b.columns.size());
    std::size_t hits = 0;
    for (const Monomial& m : b.columns) {
        if (chosen.count(m)) {
            ++hits;
        } else {
            complement.push_back(m);
        }
    }
    if (hits != chosen.size()) {
        return false; // slice member outside the degree block
    }
    if (complement.size() != b.lf_rows.size()) {
        return false;
    }
    return matrix_rank(b.lf_rows, complement) == b.lf_rows.size();
}

bool is_admissible(const OrderIdeal& o, const RankOracle& oracle, const DegreeSignature& sig) {
    if (o.var_count() != oracle.var_count()) {
        return false;
    }
    unsigned top = o.max_degree();
    if (!sig.sizes.empty()) {
        top = std::max<unsigned>(top, static_cast<unsigned>(sig.sizes.size()) - 1);
    }
    for (unsigned i = 0; i <= top; ++i) {
        if (o.slice(i).size() != sig.at(i)) {
            return false;
        }
    }
    for (unsigned i = 1; i < sig.sizes.size(); ++i) {
        if (!oracle.slice_admissible(i, o.slice(i))) {
            return false;
        }
    }
    return true;
}

bool is_admissible(const OrderIdeal& o, const RankOracle& oracle) {
    return is_admissible(o, oracle, oracle.signature());
}

PolytopeModel::PolytopeModel(unsigned var_count, unsigned top_degree,
                             std::vector<Monomial> variables,
                             std::vector<DivisibilityRow> divisibility,
                             std::vector<CardinalityRow> cardinality, DegreeSignature signature)
    : var_count_(var_count),
      top_degree_(top_degree),
      variables_(std::move(variables)),
      divisibility_(std::move(divisibility)),
      cardinality_(std::move(cardinality)),
      signature_(std::move(signature)) {
    index_.reserve(variables_.size());
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (!index_.emplace(variables_[i], i).second) {
            throw precondition_error("duplicate model variable " + variables_[i].str());
        }
    }
}

std::optional<std::size_t> PolytopeModel::variable_index(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

PolytopeModel build_model(const CanonicalForm& m) {
    DegreeSignature sig = degree_signature(m); // validates stabilization + top coverage
    const unsigned n = m.universe.var_count();
    const unsigned d = m.universe.degree_bound();

    std::vector<Monomial> variables;
    for (unsigned i = 0; i < d; ++i) {
        const auto& block = m.universe.block(i);
        variables.insert(variables.end(), block.begin(), block.end());
    }
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    index.reserve(variables.size());
    for (std::size_t i = 0; i < variables.size(); ++i) {
        index.emplace(variables[i], i);
    }

    std::vector<DivisibilityRow> divisibility;
    for (std::size_t i = 0; i < variables.size(); ++i) {
        if (variables[i].degree() == 0) {
            continue;
        }
        for (const Monomial& lower : variables[i].lower_neighbors()) {
            divisibility.push_back(DivisibilityRow{index.at(lower), i});
        }
    }

    std::vector<CardinalityRow> cardinality;
    for (unsigned i = 1; i < d; ++i) {
        CardinalityRow row;
        row.degree = i;
        for (const Monomial& mono : m.universe.block(i)) {
            row.variables.push_back(index.at(mono));
        }
        row.rhs = sig.at(i);
        cardinality.push_back(std::move(row));
    }

    return PolytopeModel(n, d, std::move(variables), std::move(divisibility),
                         std::move(cardinality), std::move(sig));
}

std::vector<std::uint8_t> characteristic_vector(const OrderIdeal& o, const PolytopeModel& model) {
    std::vector<std::uint8_t> z(model.variables().size(), 0);
    for (const Monomial& m : o.monomials()) {
        auto idx = model.variable_index(m);
        if (!idx) {
            throw precondition_error("order ideal member is not a model variable: " + m.str());
        }
        z[*idx] = 1;
    }
    return z;
}

OrderIdeal order_ideal_from_vector(const std::vector<std::uint8_t>& z,
                                   const PolytopeModel& model) {
    if (z.size() != model.variables().size()) {
        throw precondition_error("characteristic vector length mismatch");
    }
    std::vector<Monomial> members;
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i]) {
            members.push_back(model.variables()[i]);
        }
    }
    return OrderIdeal(model.var_count(), std::move(members));
}

namespace {

// C(n, k), capped: returns cap + 1 as soon as the value exceeds cap.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (result > cap) {
            return cap + 1;
        }
        result = result * (n - k + i) / i; // exact: product of i consecutive terms
        if (result > cap) {
            return cap + 1;
        }
    }
    return result;
}

void emit_rank_row(std::vector<RankRow>& rows, const PolytopeModel& model, const RankBlock& block,
                   const std::vector<std::size_t>& picked) {
    std::vector<Monomial> columns;
    columns.reserve(picked.size());
    for (std::size_t p : picked) {
        columns.push_back(block.columns[p]);
    }
    const std::size_t rank = matrix_rank(block.lf_rows, columns);
    if (rank >= picked.size()) {
        return; // vacuous
    }
    RankRow row;
    row.degree = block.degree;
    row.rhs = picked.size() - rank;
    for (const Monomial& m : columns) {
        row.variables.push_back(*model.variable_index(m));
    }
    rows.push_back(std::move(row));
}

} // namespace

std::vector<RankRow> materialize_rank_rows(const PolytopeModel& model, const RankOracle& oracle,
                                           std::uint64_t budget, bool* complete) {
    bool all_complete = true;
    std::vector<RankRow> rows;
    for (unsigned degree = 0; degree < model.top_degree(); ++degree) {
        const RankBlock& block = oracle.block(degree);
        const std::size_t k = block.lf_rows.size();
        const std::size_t cols = block.columns.size();
        if (k == 0) {
            continue; // no leading forms, no constraint
        }
        if (binomial_capped(cols, k, budget) <= budget) {
            // Full family: every k-subset of the degree slice.
            std::vector<std::size_t> picked(k);
            for (std::size_t i = 0; i < k; ++i) {
                picked[i] = i;
            }
            while (true) {
                emit_rank_row(rows, model, block, picked);
                // next combination in lexicographic order
                std::size_t i = k;
                while (i > 0 && picked[i - 1] == cols - k + i - 1) {
                    --i;
                }
                if (i == 0) {
                    break;
                }
                ++picked[i - 1];
                for (std::size_t j = i; j < k; ++j) {
                    picked[j] = picked[j - 1] + 1;
                }
            }
        } else {
            all_complete = false;
            // Heuristic: for each leading-form row, a subset built from the
            // pivots of the other rows plus this row's free support, padded
            // canonically to size k.
            const std::uint64_t limit = std::min<std::uint64_t>(budget, k);
            for (std::uint64_t r = 0; r < limit; ++r) {
                std::vector<std::uint8_t> in(cols, 0);
                std::vector<std::size_t> picked;
                picked.reserve(k);
                auto take = [&](std::size_t p) {
                    if (picked.size() < k && !in[p]) {
                        in[p] = 1;
                        picked.push_back(p);
                    }
                };
                for (std::size_t p = 0; p < cols; ++p) {
                    int owner = block.pivot_row_of_column[p];
                    if (owner >= 0 && static_cast<std::uint64_t>(owner) != r) {
                        take(p);
                    }
                }
                for (std::size_t p : block.free_columns) {
                    if (!is_zero(block.lf_rows[r].coefficient(block.columns[p]))) {
                        take(p);
                    }
                }
                for (std::size_t p = 0; p < cols && picked.size() < k; ++p) {
                    take(p);
                }
                std::sort(picked.begin(), picked.end());
                emit_rank_row(rows, model, block, picked);
            }
        }
    }
    if (complete) {
        *complete = all_complete;
    }
    return rows;
}

namespace {

// Token-stream writer keeping every physical line at 255 characters or less;
// continuation lines are indented by one space.
class LineWriter {
public:
    explicit LineWriter(std::ostream& out) : out_(out) {}

    void token(const std::string& t) {
        if (line_.empty()) {
            line_ = " " + t;
            return;
        }
        if (line_.size() + 1 + t.size() > kWidth) {
            out_ << line_ << '\n';
            line_ = " " + t;
            return;
        }
        line_ += " " + t;
    }

    void end_line() {
        if (!line_.empty()) {
            out_ << line_ << '\n';
            line_.clear();
        }
    }

    void raw(const std::string& line) {
        end_line();
        out_ << line << '\n';
    }

private:
    static constexpr std::size_t kWidth = 255;
    std::ostream& out_;
    std::string line_;
};

// LP-format-safe monomial name: '^' is the power operator in LP files and
// cannot appear in identifiers, so exponents are marked with 'e' instead
// (x1^2.x2 -> z_x1e2.x2). The map is bijective: 'e' occurs nowhere else.
std::string variable_name(const Monomial& m) {
    std::string body = m.str();
    for (char& c : body) {
        if (c == '^') {
            c = 'e';
        }
    }
    return "z_" + body;
}

// Emits "<label:> [terms] <relation> <rhs>" where terms are +/-1-coefficient
// pairs unless weights are supplied.
void emit_sum_row(LineWriter& w, const std::string& label,
                  const std::vector<std::string>& names, const std::string& relation,
                  const std::string& rhs) {
    w.token(label);
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i > 0) {
            w.token("+");
        }
        w.token(names[i]);
    }
    w.token(relation);
    w.token(rhs);
    w.end_line();
}

} // namespace

LpStats write_lp(std::ostream& out, const PolytopeModel& model, const RankOracle& oracle,
                 const Preference& pref, const LpOptions& options) {
    LpStats stats;
    bool complete = false;
    std::vector<RankRow> rank_rows =
        materialize_rank_rows(model, oracle, options.rank_budget, &complete);
    stats.rank_family_complete = complete;
    stats.divisibility_rows = model.divisibility().size();
    stats.cardinality_rows = model.cardinality().size();
    stats.rank_rows = rank_rows.size();

    LineWriter w(out);
    w.raw("\\ order ideal polytope, 0/1 model over monomials of degree < " +
          std::to_string(model.top_degree()));
    w.raw("\\ degree signature " + model.signature().str());
    if (complete) {
        w.raw("\\ rank cuts: complete family; integral points coincide with admissible order "
              "ideals");
    } else {
        w.raw("\\ RELAXATION: rank-cut family truncated (budget " +
              std::to_string(options.rank_budget) +
              "); integral points may strictly contain the admissible set");
        w.raw("\\ truncated cuts are chosen from leading-form row supports (a heuristic of this "
              "toolkit, not a separation routine)");
    }

    w.raw("Maximize");
    {
        w.token("obj:");
        bool any = false;
        for (std::size_t i = 0; i < model.variables().size(); ++i) {
            long long c = pref.weight(model.variables()[i]);
            if (c == 0) {
                continue;
            }
            std::string name = variable_name(model.variables()[i]);
            if (!any) {
                if (c < 0) {
                    w.token("-");
                }
            } else {
                w.token(c < 0 ? "-" : "+");
            }
            unsigned long long mag = c < 0 ? -static_cast<unsigned long long>(c)
                                           : static_cast<unsigned long long>(c);
            if (mag != 1) {
                w.token(std::to_string(mag));
            }
            w.token(name);
            any = true;
        }
        if (!any) {
            w.token("0");
            w.token(variable_name(model.variables().front()));
        }
        w.end_line();
    }

    w.raw("Subject To");
    for (std::size_t i = 0; i < model.divisibility().size(); ++i) {
        const DivisibilityRow& row = model.divisibility()[i];
        w.token("div_" + std::to_string(i + 1) + ":");
        w.token(variable_name(model.variables()[row.lower]));
        w.token("-");
        w.token(variable_name(model.variables()[row.upper]));
        w.token(">=");
        w.token("0");
        w.end_line();
    }
    for (const CardinalityRow& row : model.cardinality()) {
        std::vector<std::string> names;
        names.reserve(row.variables.size());
        for (std::size_t v : row.variables) {
            names.push_back(variable_name(model.variables()[v]));
        }
        emit_sum_row(w, "card_" + std::to_string(row.degree) + ":", names, "=",
                     std::to_string(row.rhs));
    }
    {
        std::uint64_t counter = 0;
        unsigned last_degree = 0;
        for (const RankRow& row : rank_rows) {
            counter = (row.degree == last_degree) ? counter + 1 : 1;
            last_degree = row.degree;
            std::vector<std::string> names;
            names.reserve(row.variables.size());
            for (std::size_t v : row.variables) {
                names.push_back(variable_name(model.variables()[v]));
            }
            emit_sum_row(w,
                         "rank_" + std::to_string(row.degree) + "_" + std::to_string(counter) +
                             ":",
                         names, ">=", std::to_string(row.rhs));
        }
    }

    w.raw("Binary");
    for (const Monomial& m : model.variables()) {
        w.token(variable_name(m));
    }
    w.end_line();
    w.raw("End");
    return stats;
}

} // namespace bb
