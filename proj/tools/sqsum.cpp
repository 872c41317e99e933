// sqsum: command-line front end for the square-sumset library.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqsum/acceptance.hpp"
#include "sqsum/constructions.hpp"
#include "sqsum/format.hpp"
#include "sqsum/sumset.hpp"
#include "sqsum/zp.hpp"

namespace {

using nlohmann::json;
using namespace sqsum;

enum class Format { text, csv, json };

struct RunConfig {
    Format format = Format::text;
    unsigned workers = 1;
    std::optional<std::uint64_t> budget;
    std::uint64_t seed = acceptance::Config{}.seed;
    std::string filter;

    std::string input;
    std::optional<std::uint64_t> n;
    std::optional<std::uint64_t> p;
    std::optional<std::uint64_t> pmin, pmax;
    bool full = false;
    bool no_symmetry = false;
    std::size_t extra = 0;
    bool clear = false;

    std::vector<std::size_t> sizes;
    std::int64_t bound = 0;
    std::optional<std::int64_t> base_bound;
    std::size_t min_squares = 0;
    std::vector<std::string> edges;
};

std::vector<std::string> to_strings(const RationalSet& s) {
    std::vector<std::string> out;
    for (const auto& q : s) out.push_back(q.to_string());
    return out;
}

int cmd_sumset(const RunConfig& cfg) {
    std::ifstream in(cfg.input);
    if (!in) throw std::runtime_error("cannot open " + cfg.input);
    const RationalSet a = read_set_file(in);
    if (a.empty()) throw std::runtime_error(cfg.input + ": no elements");

    if (cfg.p) {
        const PrimeModulus p(*cfg.p);
        ResidueSet r(p);
        for (const auto& q : a) {
            if (!q.is_integer() || q.sign() < 0) throw std::runtime_error("mod-p sumsets need non-negative integers");
            const Integer red = q.num() % Integer(static_cast<unsigned long>(p.value()));
            r.insert(red.get_ui());
        }
        const auto s = sumset_mod_p(r);
        if (cfg.format == Format::json) {
            std::cout << json{{"n", r.size()}, {"p", p.value()}, {"sumset_size", s.size()}, {"sumset", s.members()}}
                      << '\n';
        } else {
            std::cout << "n=" << r.size() << " |A+A|=" << s.size() << " (mod " << p.value() << ")\n";
            if (cfg.full) std::cout << "sumset: " << join_residues(s.members()) << '\n';
        }
        return 0;
    }

    const SumsetReport rep = report(a);
    std::size_t non_squares = 0;
    for (const auto& q : a)
        if (!as_square_root(q)) ++non_squares;

    if (cfg.format == Format::json) {
        json j{{"n", rep.source_size},         {"sumset_size", rep.sumset_size}, {"lower_bound", rep.lower_bound},
               {"upper_bound", rep.upper_bound}, {"non_squares", non_squares}};
        if (cfg.full) j["sumset"] = to_strings(rep.sumset);
        std::cout << j << '\n';
    } else {
        std::cout << "n=" << rep.source_size << " |A+A|=" << rep.sumset_size << " bounds [" << rep.lower_bound
                  << ", " << rep.upper_bound << "]\n";
        if (non_squares) std::cout << "note: " << non_squares << " element(s) are not rational squares\n";
        if (cfg.full) {
            std::cout << "sumset:";
            for (const auto& s : to_strings(rep.sumset)) std::cout << ' ' << s;
            std::cout << '\n';
        }
    }
    return 0;
}

int cmd_construct(const RunConfig& cfg) {
    const std::uint64_t blocks = *cfg.n;
    if (blocks < 1) throw std::invalid_argument("--n must be >= 1");
    if (cfg.extra > 2) throw std::invalid_argument("--extra must be 0, 1 or 2");
    const std::size_t m = 3 * blocks + cfg.extra;

    SquareSet a = cfg.extra ? build_ec_family_rem(m) : build_ec_family(blocks);
    if (cfg.clear) a = clear_denominators(a);
    const SumsetReport rep = report(a);
    const std::size_t ub = theorem_ub_bound(blocks);
    const std::size_t formula = ub2_formula(m);

    if (cfg.format == Format::json) {
        std::vector<std::string> roots;
        for (const auto& [e, r] : a.entries()) roots.push_back(r.to_string());
        std::cout << json{{"blocks", blocks},
                          {"extra", cfg.extra},
                          {"size", a.size()},
                          {"sumset_size", rep.sumset_size},
                          {"block_bound", ub},
                          {"remainder_formula", formula},
                          {"elements", to_strings(a.elements())},
                          {"roots", roots}}
                  << '\n';
        return 0;
    }
    // text output is itself a valid set file
    std::cout << "# curve family: " << blocks << " block(s) + " << cfg.extra << " extra, |A|=" << a.size() << '\n'
              << "# |A+A|=" << rep.sumset_size << ", 5n(n+1)/2 bound=" << ub << ", published formula for |A|="
              << m << ": " << formula << '\n';
    for (const auto& [e, r] : a.entries()) std::cout << e.to_string() << "  # (" << r.to_string() << ")^2\n";
    return 0;
}

std::vector<TableRow> run_search(const RunConfig& cfg) {
    const SearchOptions opt{!cfg.no_symmetry, cfg.budget};
    if (cfg.p) return table_scan(*cfg.n, *cfg.p, *cfg.p, opt, 1);
    if (!cfg.pmin || !cfg.pmax) throw std::invalid_argument("give --p or both --pmin and --pmax");
    return table_scan(*cfg.n, *cfg.pmin, *cfg.pmax, opt, cfg.workers);
}

int emit_rows(const RunConfig& cfg, const std::vector<TableRow>& rows) {
    bool all_exact = !rows.empty();
    for (const auto& r : rows) all_exact = all_exact && r.result && r.result->exact;

    switch (cfg.format) {
        case Format::csv:
            std::cout << kSearchCsvHeader << '\n';
            for (const auto& r : rows) std::cout << csv_row(*cfg.n, r) << '\n';
            break;
        case Format::json: {
            json arr = json::array();
            for (const auto& r : rows) arr.push_back(to_json(*cfg.n, r));
            std::cout << arr.dump(2) << '\n';
            break;
        }
        case Format::text:
            for (const auto& r : rows) {
                if (!r.result) {
                    std::cout << "n=" << *cfg.n << " p=" << r.p << " error: " << r.error << '\n';
                    continue;
                }
                const auto& s = *r.result;
                std::cout << "n=" << s.n << " p=" << s.p << " N=" << s.minimum << " witness={"
                          << join_residues(s.witness) << "} nodes=" << s.nodes_explored
                          << (s.exact ? "" : " (budget exhausted, not exact)") << '\n';
            }
            break;
    }
    if (rows.empty()) std::cerr << "no primes in range\n";
    return all_exact ? 0 : 1;
}

int cmd_gap(const RunConfig& cfg) {
    const auto found = search_gap_of_squares(
        cfg.sizes, GapSearchBounds{cfg.bound, cfg.base_bound.value_or(cfg.bound)}, cfg.min_squares);
    for (const auto& m : found) std::cout << to_json(m).dump() << '\n';
    if (cfg.format == Format::text) std::cerr << found.size() << " match(es)\n";
    return 0;
}

int cmd_cuboid(const RunConfig& cfg) {
    if (cfg.edges.size() != 3) throw std::invalid_argument("cuboid needs three edge lengths");
    const Integer a(cfg.edges[0]), b(cfg.edges[1]), c(cfg.edges[2]);
    const CuboidReport r = check_perfect_cuboid(a, b, c);
    auto show = [](const std::optional<Integer>& v) { return v ? v->get_str() : std::string("-"); };

    if (cfg.format == Format::json) {
        auto opt = [](const std::optional<Integer>& v) { return v ? json(v->get_str()) : json(nullptr); };
        std::cout << json{{"edges", cfg.edges},       {"ab", opt(r.d)},
                          {"ac", opt(r.e)},           {"bc", opt(r.f)},
                          {"space", opt(r.g)},        {"euler_brick", r.is_euler_brick()},
                          {"perfect", r.is_perfect()}}
                  << '\n';
    } else {
        std::cout << "edges " << a << ' ' << b << ' ' << c << '\n'
                  << "faces " << show(r.d) << '/' << show(r.e) << '/' << show(r.f) << '\n'
                  << "space diagonal " << show(r.g) << '\n'
                  << (r.is_perfect() ? "perfect cuboid" : r.is_euler_brick() ? "Euler brick" : "neither") << '\n';
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    acceptance::Config ac;
    ac.filter = cfg.filter;
    ac.seed = cfg.seed;
    ac.workers = cfg.workers;
    std::size_t failed = 0, total = 0;
    acceptance::run(ac, [&](const acceptance::Outcome& o) {
        ++total;
        if (!o.passed) ++failed;
        std::cout << acceptance::format_line(o) << std::endl;
    });
    std::cout << (total - failed) << "/" << total << " criteria passed\n";
    return failed == 0 && total > 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sumsets of squares: curve constructions and exact minima over Z/pZ"};
    app.require_subcommand(1);
    RunConfig cfg;

    const std::map<std::string, Format> formats{{"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };

    auto* sumset_cmd = app.add_subcommand("sumset", "Sumset size of a set file");
    sumset_cmd->add_option("file", cfg.input, "Set file (one rational per line)")->required();
    sumset_cmd->add_option("--p", cfg.p, "Reduce modulo this prime");
    sumset_cmd->add_flag("--full", cfg.full, "Print the whole sumset");
    add_format(sumset_cmd);

    auto* construct_cmd = app.add_subcommand("construct", "Curve-generated square set");
    construct_cmd->add_option("--n", cfg.n, "Number of 3-term blocks")->required();
    construct_cmd->add_option("--extra", cfg.extra, "Extra elements from the next block (0-2)");
    construct_cmd->add_flag("--clear", cfg.clear, "Scale to integers");

    auto* search_cmd = app.add_subcommand("search", "Exact N_n(Z_p)");
    auto* table_cmd = app.add_subcommand("table", "N_n(Z_p) over a prime range (CSV by default)");
    for (auto* sub : {search_cmd, table_cmd}) {
        sub->add_option("--n", cfg.n, "Subset size")->required();
        sub->add_option("--pmin", cfg.pmin, "Smallest modulus");
        sub->add_option("--pmax", cfg.pmax, "Largest modulus");
        sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--budget", cfg.budget, "Node limit per prime");
        sub->add_flag("--no-symmetry", cfg.no_symmetry, "Disable multiplicative symmetry reduction");
    }
    search_cmd->add_option("--p", cfg.p, "Prime modulus");
    table_cmd->get_option("--pmin")->required();
    table_cmd->get_option("--pmax")->required();

    auto* gap_cmd = app.add_subcommand("gap", "Bounded search for GAPs with many square terms (JSON lines)");
    gap_cmd->add_option("--sizes", cfg.sizes, "Terms per dimension, e.g. 3,3")->delimiter(',')->required();
    gap_cmd->add_option("--bound", cfg.bound, "Largest step (and base, unless --base-bound)")->required();
    gap_cmd->add_option("--base-bound", cfg.base_bound, "Largest base");
    gap_cmd->add_option("--min-squares", cfg.min_squares, "Required number of square terms")->required();

    auto* cuboid_cmd = app.add_subcommand("cuboid", "Check face and space diagonals of an a x b x c box");
    cuboid_cmd->add_option("edges", cfg.edges, "a b c")->expected(3)->required();

    auto* verify_cmd = app.add_subcommand("verify", "Run the reproduction checks");
    verify_cmd->add_option("--filter", cfg.filter, "Criterion ids, groups (sumset, constructions, curve, zp, scaling)");
    verify_cmd->add_option("--seed", cfg.seed, "Seed for randomized checks");
    verify_cmd->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);

    add_format(construct_cmd);
    add_format(search_cmd);
    add_format(gap_cmd);
    add_format(cuboid_cmd);
    add_format(table_cmd);

    CLI11_PARSE(app, argc, argv);
    if (table_cmd->parsed() && table_cmd->count("--format") == 0) cfg.format = Format::csv;

    try {
        if (sumset_cmd->parsed()) return cmd_sumset(cfg);
        if (construct_cmd->parsed()) return cmd_construct(cfg);
        if (search_cmd->parsed() || table_cmd->parsed()) return emit_rows(cfg, run_search(cfg));
        if (gap_cmd->parsed()) return cmd_gap(cfg);
        if (cuboid_cmd->parsed()) return cmd_cuboid(cfg);
        if (verify_cmd->parsed()) return cmd_verify(cfg);
    } catch (const SetFileError& e) {
        std::cerr << "error: " << cfg.input << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
