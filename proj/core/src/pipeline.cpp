#include "bb/pipeline.hpp"

#include "bb/errors.hpp"

#include <unordered_set>
#include <utility>

namespace bb {

StableModel build_stable_model(const std::vector<Polynomial>& f, const TermOrdering& ordering,
                               unsigned degree_cap) {
    SpanBasis span = terminal_span(f, ordering, degree_cap);
    CanonicalForm canonical =
        canonical_form(span.rows, span.universe, span.ordering, /*stabilized=*/true);
    DegreeSignature signature = degree_signature(canonical);
    RankOracle oracle(canonical);
    PolytopeModel model = build_model(canonical);
    return StableModel{std::move(span), std::move(canonical), std::move(signature),
                       std::move(oracle), std::move(model)};
}

OrderIdealSelector term_order_selector() {
    return [](const StableModel& model) {
        std::unordered_set<Monomial, MonomialHash> leading;
        for (const Monomial& m : model.canonical.pivots()) {
            leading.insert(m);
        }
        std::vector<Monomial> complement;
        for (const Monomial& m : model.span.universe.columns()) {
            if (leading.find(m) == leading.end()) {
                complement.push_back(m);
            }
        }
        return OrderIdeal(model.span.universe.var_count(), complement);
    };
}

OrderIdealSelector preference_selector(Preference c, EnumerationOptions options) {
    return [c = std::move(c), options](const StableModel& model) {
        return optimize_preference(model.oracle, c, options).ideal;
    };
}

OrderIdealSelector explicit_selector(OrderIdeal o) {
    return [o = std::move(o)](const StableModel&) { return o; };
}

BorderBasis border_basis_general(const StableModel& model, const OrderIdealSelector& selector) {
    OrderIdeal chosen = selector(model);
    if (!is_admissible(chosen, model.oracle, model.signature)) {
        throw inadmissible_error("selected order ideal is not admissible for this ideal");
    }
    return transform_basis(model.span, chosen);
}

BorderBasis border_basis_general(const std::vector<Polynomial>& f, const TermOrdering& ordering,
                                 const OrderIdealSelector& selector, unsigned degree_cap) {
    StableModel model = build_stable_model(f, ordering, degree_cap);
    return border_basis_general(model, selector);
}

} // namespace bb
