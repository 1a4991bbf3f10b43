// bb: command-line workbench for the border-basis library.
//
// Subcommands: bbasis, span, signature, enumerate, count, optimize,
// lp-export, closure, gen-clique, clique-decide, vanish.
//
// Computational subcommands print a JSON document ("schema": 1) to stdout or
// --out; identical inputs produce byte-identical output apart from the
// "timings" field. The generator subcommands (gen-clique, vanish) and
// lp-export print the generated system / LP file itself so their output can
// be fed straight back into the other subcommands.
//
// Exit status: 0 success, 1 malformed input, 2 precondition violation (e.g.
// the degree cap was hit), 3 requested order ideal not admissible,
// 4 unexpected failure. Diagnostics go to stderr.

#include "bb/border_basis.hpp"
#include "bb/errors.hpp"
#include "bb/flow.hpp"
#include "bb/hardness.hpp"
#include "bb/io.hpp"
#include "bb/optimize.hpp"
#include "bb/pipeline.hpp"
#include "bb/polytope.hpp"
#include "bb/rational.hpp"
#include "bb/term_order.hpp"
#include "bb/universe.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using bb::Monomial;
using bb::OrderIdeal;
using bb::Polynomial;
using bb::Preference;
using bb::Rational;
using bb::TermOrdering;
using json = nlohmann::ordered_json;

using Clock = std::chrono::steady_clock;

struct Options {
    std::string system_path;
    std::string points_path;
    std::string graph_path;
    std::string pref_path;
    std::string order_ideal_path;
    std::string out_path;
    std::string ordering_name = "degrevlex";
    unsigned degree_cap = 20;
    unsigned threads = 1;
    unsigned n = 0;
    unsigned k = 0;
    unsigned universe_vars = 0;
    unsigned universe_degree = 0;
    std::uint64_t rank_budget = 0;
    bool relaxed = false;
    std::optional<std::uint64_t> limit;
    std::optional<double> time_cap_seconds;
    std::optional<std::uint64_t> random_pref_seed;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw bb::parse_error("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw bb::precondition_error("cannot write " + out_path);
    }
    out << text;
}

TermOrdering make_ordering(const Options& opt, unsigned var_count) {
    if (opt.ordering_name == "degrevlex") {
        return TermOrdering::degrevlex(var_count);
    }
    if (opt.ordering_name == "deglex") {
        return TermOrdering::deglex(var_count);
    }
    throw bb::parse_error("unknown ordering '" + opt.ordering_name +
                          "' (expected degrevlex or deglex)");
}

bb::PolynomialSystem load_system(const Options& opt) {
    if (opt.system_path.empty()) {
        throw bb::parse_error("--system is required");
    }
    return bb::parse_system(read_file(opt.system_path));
}

bb::EnumerationOptions enumeration_options(const Options& opt) {
    bb::EnumerationOptions eo;
    eo.limit = opt.limit;
    eo.time_cap_seconds = opt.time_cap_seconds;
    eo.threads = opt.threads;
    return eo;
}

// The preference for optimize/lp-export/closure: an explicit JSON file or a
// seeded random one with uniform integer weights in [-10, 10] on the given
// monomials.
Preference make_preference(const Options& opt, const std::vector<Monomial>& support,
                           unsigned var_count) {
    if (!opt.pref_path.empty() && opt.random_pref_seed) {
        throw bb::parse_error("--pref and --random-pref are mutually exclusive");
    }
    if (!opt.pref_path.empty()) {
        return bb::parse_preference(read_file(opt.pref_path), var_count);
    }
    if (opt.random_pref_seed) {
        std::mt19937_64 rng(*opt.random_pref_seed);
        std::uniform_int_distribution<long long> weight(-10, 10);
        Preference pref;
        for (const Monomial& m : support) {
            pref.set(m, weight(rng));
        }
        return pref;
    }
    throw bb::parse_error("a preference is required (--pref FILE or --random-pref SEED)");
}

OrderIdeal load_order_ideal(const std::string& path, unsigned var_count) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw bb::parse_error(std::string("order-ideal file: ") + e.what());
    }
    if (!doc.is_array()) {
        throw bb::parse_error("order-ideal file must be a JSON array of monomial keys");
    }
    std::vector<Monomial> monomials;
    for (const json& entry : doc) {
        if (!entry.is_string()) {
            throw bb::parse_error("order-ideal file must be a JSON array of monomial keys");
        }
        monomials.push_back(bb::parse_monomial_key(entry.get<std::string>(), var_count));
    }
    return OrderIdeal(var_count, std::move(monomials));
}

json ideal_to_json(const OrderIdeal& o) {
    json keys = json::array();
    for (const Monomial& m : o.monomials()) {
        keys.push_back(m.str());
    }
    return keys;
}

json basis_to_json(const bb::BorderBasis& basis) {
    json elements = json::array();
    const auto& terms = basis.order_ideal().monomials();
    for (std::size_t j = 0; j < basis.size(); ++j) {
        json coefficients = json::object();
        for (std::size_t i = 0; i < terms.size(); ++i) {
            const Rational alpha = basis.alpha(i, j);
            if (!bb::is_zero(alpha)) {
                coefficients[terms[i].str()] = bb::to_string(alpha);
            }
        }
        elements.push_back({{"border_term", basis.border_terms()[j].str()},
                            {"coefficients", std::move(coefficients)},
                            {"text", basis.elements()[j].str()}});
    }
    json border = json::array();
    for (const Monomial& m : basis.border_terms()) {
        border.push_back(m.str());
    }
    return {{"order_ideal", ideal_to_json(basis.order_ideal())},
            {"border", std::move(border)},
            {"elements", std::move(elements)}};
}

json signature_to_json(const bb::DegreeSignature& sig) {
    json sizes = json::array();
    for (unsigned s : sig.sizes) {
        sizes.push_back(s);
    }
    return sizes;
}

// Arbitrary-precision counts: a JSON number while exactly representable,
// a decimal string beyond that.
json integer_to_json(const bb::Integer& value) {
    if (value.fits_ulong_p() && value.get_ui() <= (1ull << 53)) {
        return static_cast<std::uint64_t>(value.get_ui());
    }
    return bb::to_string(value);
}

void finish(json& doc, Clock::time_point start, const Options& opt) {
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    doc["timings"] = {{"total_seconds", seconds}};
    emit(doc.dump(2) + "\n", opt.out_path);
}

// ---------------------------------------------------------------------------
// Subcommand bodies.
// ---------------------------------------------------------------------------

int run_bbasis(const Options& opt, Clock::time_point start) {
    const bb::PolynomialSystem system = load_system(opt);
    const unsigned n = system.vars.size();
    const TermOrdering ordering = make_ordering(opt, n);
    const bb::StableModel model =
        bb::build_stable_model(system.polynomials, ordering, opt.degree_cap);

    bb::OrderIdealSelector selector = bb::term_order_selector();
    if (!opt.order_ideal_path.empty()) {
        selector = bb::explicit_selector(load_order_ideal(opt.order_ideal_path, n));
    } else if (!opt.pref_path.empty() || opt.random_pref_seed) {
        selector = bb::preference_selector(
            make_preference(opt, model.model.variables(), n), enumeration_options(opt));
    }
    const bb::BorderBasis basis = bb::border_basis_general(model, selector);
    std::string diagnostic;
    const bool verified =
        bb::verify_border_basis(basis, system.polynomials, model.span.universe, &diagnostic);

    json doc = {{"schema", 1}, {"command", "bbasis"}, {"var_count", n}};
    doc.update(basis_to_json(basis));
    doc["signature"] = signature_to_json(model.signature);
    doc["verified"] = verified;
    if (!verified) {
        doc["diagnostic"] = diagnostic;
    }
    finish(doc, start, opt);
    return 0;
}

int run_span(const Options& opt, Clock::time_point start) {
    const bb::PolynomialSystem system = load_system(opt);
    const unsigned n = system.vars.size();
    const TermOrdering ordering = make_ordering(opt, n);
    const bb::SpanBasis span =
        bb::terminal_span(system.polynomials, ordering, opt.degree_cap);

    json rows = json::array();
    json leads = json::array();
    for (const Polynomial& row : span.rows) {
        rows.push_back(row.str());
        leads.push_back(bb::leading_term(row, ordering).str());
    }
    json doc = {{"schema", 1},
                {"command", "span"},
                {"var_count", n},
                {"degree_bound", span.universe.degree_bound()},
                {"stabilized", span.stabilized},
                {"row_count", span.rows.size()},
                {"leading_terms", std::move(leads)},
                {"rows", std::move(rows)}};
    finish(doc, start, opt);
    return 0;
}

int run_signature(const Options& opt, Clock::time_point start) {
    const bb::PolynomialSystem system = load_system(opt);
    const unsigned n = system.vars.size();
    const bb::StableModel model = bb::build_stable_model(
        system.polynomials, make_ordering(opt, n), opt.degree_cap);
    json doc = {{"schema", 1},
                {"command", "signature"},
                {"var_count", n},
                {"signature", signature_to_json(model.signature)},
                {"quotient_dimension", model.signature.quotient_dimension()}};
    finish(doc, start, opt);
    return 0;
}

int run_enumerate(const Options& opt, Clock::time_point start) {
    const bb::PolynomialSystem system = load_system(opt);
    const unsigned n = system.vars.size();
    const bb::StableModel model = bb::build_stable_model(
        system.polynomials, make_ordering(opt, n), opt.degree_cap);
    bb::EnumerationOptions eo = enumeration_options(opt);
    eo.collect = true;
    const bb::EnumerationResult result = bb::enumerate_order_ideals(model.oracle, eo);

    json ideals = json::array();
    for (const OrderIdeal& o : result.ideals) {
        ideals.push_back(ideal_to_json(o));
    }
    json doc = {{"schema", 1},
                {"command", "enumerate"},
                {"count", result.count},
                {"truncated", result.truncated},
                {"order_ideals", std::move(ideals)}};
    finish(doc, start, opt);
    return 0;
}

int run_count(const Options& opt, Clock::time_point start) {
    const bb::PolynomialSystem system = load_system(opt);
    const unsigned n = system.vars.size();
    const bb::StableModel model = bb::build_stable_model(
        system.polynomials, make_ordering(opt, n), opt.degree_cap);

    json doc = {{"schema", 1}, {"command", "count"}};
    if (opt.relaxed) {
        doc["count"] = integer_to_json(bb::count_relaxation(model.oracle));
        doc["relaxed"] = true;
        doc["truncated"] = false;
    } else {
        const bb::EnumerationResult result =
            bb::enumerate_order_ideals(model.oracle, enumeration_options(opt));
        doc["count"] = result.count;
        doc["relaxed"] = false;
        doc["truncated"] = result.truncated;
    }
    doc["signature"] = signature_to_json(model.signature);
    finish(doc, start, opt);
    return 0;
}

int run_optimize(const Options& opt, Clock::time_point start) {
    const bb::PolynomialSystem system = load_system(opt);
    const unsigned n = system.vars.size();
    const bb::StableModel model = bb::build_stable_model(
        system.polynomials, make_ordering(opt, n), opt.degree_cap);
    const Preference pref = make_preference(opt, model.model.variables(), n);
    const bb::OptimizeResult result =
        bb::optimize_preference(model.oracle, pref, enumeration_options(opt));

    json doc = {{"schema", 1},
                {"command", "optimize"},
                {"score", result.score},
                {"order_ideal", ideal_to_json(result.ideal)},
                {"admissible_visited", result.admissible_visited},
                {"truncated", result.truncated}};
    if (opt.random_pref_seed) {
        doc["seed"] = *opt.random_pref_seed;
    }
    finish(doc, start, opt);
    return 0;
}

int run_lp_export(const Options& opt, Clock::time_point) {
    const bb::PolynomialSystem system = load_system(opt);
    const unsigned n = system.vars.size();
    const bb::StableModel model = bb::build_stable_model(
        system.polynomials, make_ordering(opt, n), opt.degree_cap);
    Preference pref; // zero objective unless one is requested
    if (!opt.pref_path.empty() || opt.random_pref_seed) {
        pref = make_preference(opt, model.model.variables(), n);
    }
    bb::LpOptions lp;
    lp.rank_budget = opt.rank_budget;

    std::ostringstream text;
    const bb::LpStats stats = bb::write_lp(text, model.model, model.oracle, pref, lp);
    emit(text.str(), opt.out_path);
    std::cerr << "lp-export: " << stats.divisibility_rows << " divisibility rows, "
              << stats.cardinality_rows << " cardinality rows, " << stats.rank_rows
              << " rank cuts (" << (stats.rank_family_complete ? "complete" : "partial")
              << " family)\n";
    return 0;
}

int run_closure(const Options& opt, Clock::time_point start) {
    if (opt.universe_vars == 0) {
        throw bb::parse_error("--vars is required (universe variable count)");
    }
    const bb::Universe universe(opt.universe_vars, opt.universe_degree);
    const Preference pref = make_preference(opt, universe.columns(), opt.universe_vars);
    const auto [ideal, score] = bb::min_cut_closure(universe, pref);

    json doc = {{"schema", 1},
                {"command", "closure"},
                {"vars", opt.universe_vars},
                {"degree", opt.universe_degree},
                {"score", score},
                {"order_ideal", ideal_to_json(ideal)}};
    if (opt.random_pref_seed) {
        doc["seed"] = *opt.random_pref_seed;
    }
    finish(doc, start, opt);
    return 0;
}

int run_gen_clique(const Options& opt, Clock::time_point) {
    const std::vector<Polynomial> gens = bb::clique_system(opt.n, opt.k);
    std::ostringstream text;
    bb::write_system(text, {bb::VarTable::numbered(opt.n), gens});
    emit(text.str(), opt.out_path);
    return 0;
}

int run_clique_decide(const Options& opt, Clock::time_point start) {
    if (opt.graph_path.empty()) {
        throw bb::parse_error("--graph is required");
    }
    const bb::Graph graph = bb::parse_graph(read_file(opt.graph_path));
    const bb::CliqueDecision decision =
        bb::k_clique_decide(graph, opt.k, enumeration_options(opt));

    json doc = {{"schema", 1},
                {"command", "clique-decide"},
                {"clique", decision.has_clique},
                {"score", decision.score},
                {"threshold", decision.threshold},
                {"k", opt.k}};
    if (decision.has_clique) {
        json witness = json::array();
        for (const Monomial& m : decision.ideal.slice(1)) {
            for (unsigned i = 0; i < m.var_count(); ++i) {
                if (m.exponent(i) > 0) {
                    witness.push_back(i + 1); // 1-based, matching the file format
                }
            }
        }
        doc["witness"] = std::move(witness);
    }
    finish(doc, start, opt);
    return 0;
}

int run_vanish(const Options& opt, Clock::time_point) {
    if (opt.points_path.empty()) {
        throw bb::parse_error("--points is required");
    }
    const bb::PointSet points = bb::parse_points(read_file(opt.points_path));
    const std::vector<Polynomial> gens = bb::vanishing_ideal(points, opt.degree_cap);
    std::ostringstream text;
    bb::write_system(text, {bb::VarTable::numbered(points.dimension), gens});
    emit(text.str(), opt.out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    const Clock::time_point start = Clock::now();
    Options opt;
    std::uint64_t limit_value = 0;
    double time_cap_value = 0.0;
    std::uint64_t seed_value = 0;

    CLI::App app{"border-basis workbench: spans, signatures, order-ideal enumeration,\n"
                 "preference optimization, LP export, and clique decisions"};
    app.require_subcommand(1);

    auto add_system = [&](CLI::App* cmd) {
        cmd->add_option("--system", opt.system_path, "generator system file")->required();
        cmd->add_option("--ordering", opt.ordering_name, "degrevlex (default) or deglex");
        cmd->add_option("--degree-cap", opt.degree_cap, "universe growth cap (default 20)");
    };
    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", opt.out_path, "write the output here instead of stdout");
    };
    auto add_search = [&](CLI::App* cmd) {
        cmd->add_option("--limit", limit_value, "stop after this many order ideals")
            ->each([&](const std::string& s) { opt.limit = std::stoull(s); });
        cmd->add_option("--time-cap-seconds", time_cap_value, "wall-clock enumeration budget")
            ->each([&](const std::string& s) { opt.time_cap_seconds = std::stod(s); });
        cmd->add_option("--threads", opt.threads, "search worker count (default 1)");
    };
    auto add_pref = [&](CLI::App* cmd) {
        cmd->add_option("--pref", opt.pref_path, "preference JSON file (monomial key -> weight)");
        cmd->add_option("--random-pref", seed_value,
                        "seeded random preference, weights uniform in [-10, 10]")
            ->each([&](const std::string& s) { opt.random_pref_seed = std::stoull(s); });
    };

    CLI::App* bbasis = app.add_subcommand("bbasis", "compute a border basis");
    add_system(bbasis);
    add_out(bbasis);
    add_pref(bbasis);
    add_search(bbasis);
    bbasis->add_option("--order-ideal", opt.order_ideal_path,
                       "JSON array of monomial keys selecting the order ideal");

    CLI::App* span = app.add_subcommand("span", "stable span of the generator system");
    add_system(span);
    add_out(span);

    CLI::App* signature = app.add_subcommand("signature", "degree signature of the quotient");
    add_system(signature);
    add_out(signature);

    CLI::App* enumerate = app.add_subcommand("enumerate", "list admissible order ideals");
    add_system(enumerate);
    add_out(enumerate);
    add_search(enumerate);

    CLI::App* count = app.add_subcommand("count", "count admissible order ideals");
    add_system(count);
    add_out(count);
    add_search(count);
    count->add_flag("--relaxed", opt.relaxed,
                    "count integral points of the divisibility+cardinality relaxation instead");

    CLI::App* optimize = app.add_subcommand("optimize", "maximize a preference");
    add_system(optimize);
    add_out(optimize);
    add_pref(optimize);
    add_search(optimize);

    CLI::App* lp_export = app.add_subcommand("lp-export", "write the 0/1 model as an LP file");
    add_system(lp_export);
    add_out(lp_export);
    add_pref(lp_export);
    lp_export->add_option("--rank-budget", opt.rank_budget,
                          "per-degree cap on explicit rank cuts (0 = relaxation only)");

    CLI::App* closure = app.add_subcommand(
        "closure", "maximum-weight downward-closed subset of a monomial universe");
    add_out(closure);
    add_pref(closure);
    closure->add_option("--vars", opt.universe_vars, "universe variable count")->required();
    closure->add_option("--degree", opt.universe_degree, "universe degree bound")->required();

    CLI::App* gen_clique = app.add_subcommand("gen-clique", "emit the clique generator system");
    add_out(gen_clique);
    gen_clique->add_option("--n", opt.n, "variable count")->required();
    gen_clique->add_option("--k", opt.k, "clique size")->required();

    CLI::App* clique_decide = app.add_subcommand("clique-decide", "decide k-clique existence");
    add_out(clique_decide);
    add_search(clique_decide);
    clique_decide->add_option("--graph", opt.graph_path, "edge-list graph file")->required();
    clique_decide->add_option("--k", opt.k, "clique size")->required();

    CLI::App* vanish = app.add_subcommand("vanish", "vanishing ideal of a point set");
    add_out(vanish);
    vanish->add_option("--points", opt.points_path, "point set file")->required();
    vanish->add_option("--degree-cap", opt.degree_cap, "universe growth cap (default 20)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(bbasis)) {
            return run_bbasis(opt, start);
        }
        if (app.got_subcommand(span)) {
            return run_span(opt, start);
        }
        if (app.got_subcommand(signature)) {
            return run_signature(opt, start);
        }
        if (app.got_subcommand(enumerate)) {
            return run_enumerate(opt, start);
        }
        if (app.got_subcommand(count)) {
            return run_count(opt, start);
        }
        if (app.got_subcommand(optimize)) {
            return run_optimize(opt, start);
        }
        if (app.got_subcommand(lp_export)) {
            return run_lp_export(opt, start);
        }
        if (app.got_subcommand(closure)) {
            return run_closure(opt, start);
        }
        if (app.got_subcommand(gen_clique)) {
            return run_gen_clique(opt, start);
        }
        if (app.got_subcommand(clique_decide)) {
            return run_clique_decide(opt, start);
        }
        if (app.got_subcommand(vanish)) {
            return run_vanish(opt, start);
        }
        std::cerr << "no subcommand\n";
        return 1;
    } catch (const bb::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const bb::inadmissible_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const bb::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 4;
    }
}
