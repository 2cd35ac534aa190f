#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gstir/asymptotics.hpp"
#include "gstir/bell_cache.hpp"
#include "gstir/combinatorics.hpp"
#include "gstir/graph_stirling.hpp"
#include "gstir/oracle.hpp"
#include "gstir/output.hpp"
#include "gstir/realroots.hpp"

namespace gstir::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphFlags {
    std::vector<long> forest;
    long cycle = 0;
    long empty = 0;
    long path = 0;
    CLI::Option* forest_opt = nullptr;
    CLI::Option* cycle_opt = nullptr;
    CLI::Option* empty_opt = nullptr;
    CLI::Option* path_opt = nullptr;

    std::size_t given() const {
        return (forest_opt->count() > 0 ? 1 : 0) + cycle_opt->count() + empty_opt->count() + path_opt->count();
    }
    bool any() const { return given() > 0; }

    GraphFamily resolve() const {
        if (given() != 1) {
            throw UsageError("exactly one of --forest N C, --cycle N, --empty N, --path N is required");
        }
        if (forest_opt->count() > 0) {
            return GraphFamily::forest(forest[0], forest[1]);
        }
        if (cycle_opt->count() > 0) {
            return GraphFamily::cycle(cycle);
        }
        if (empty_opt->count() > 0) {
            return GraphFamily::empty(empty);
        }
        return GraphFamily::path(path);
    }
};

void add_graph_flags(CLI::App* sub, GraphFlags& flags) {
    flags.forest_opt = sub->add_option("--forest", flags.forest, "forest with N vertices and C components")
                           ->expected(2)
                           ->type_name("N C");
    flags.cycle_opt = sub->add_option("--cycle", flags.cycle, "cycle on N vertices")->type_name("N");
    flags.empty_opt = sub->add_option("--empty", flags.empty, "edgeless graph on N vertices")->type_name("N");
    flags.path_opt = sub->add_option("--path", flags.path, "path on N vertices")->type_name("N");
}

struct Result {
    OutputRecord record;
    bool verified = true;
};

std::string rational_str(const mpq_class& q) { return q.get_str(); }

OutputRecord record_for(const std::string& command, const GraphFamily& g) {
    OutputRecord rec;
    rec.command = command;
    rec.parameters.emplace_back("graph", g.str());
    rec.parameters.emplace_back("n", g.vertices());
    if (g.is_forest()) {
        rec.parameters.emplace_back("c", g.components());
    }
    return rec;
}

Result cmd_table(const GraphFamily& g) {
    Result r{record_for("table", g)};
    const auto v = stirling_vector(g);
    r.record.summary = {{"chi", chi(g)}, {"graph_bell", graph_bell(g)}};
    r.record.columns = {"k", "S"};
    for (std::size_t k = 0; k < v.counts.size(); ++k) {
        if (v.counts[k] != 0) {
            r.record.rows.push_back({static_cast<long>(k), v.counts[k]});
        }
    }
    return r;
}

Result cmd_poly(const GraphFamily& g) {
    Result r{record_for("poly", g)};
    const auto sigma = stirling_poly(g);
    const auto chrom = chromatic_poly(g);
    r.record.summary = {{"sigma", sigma.str()},
                        {"chromatic", chrom.str()},
                        {"degree", sigma.degree()},
                        {"zero_multiplicity", static_cast<long>(sigma.lowest_degree())}};
    r.record.columns = {"power", "sigma", "chromatic"};
    for (long i = 0; i <= sigma.degree(); ++i) {
        r.record.rows.push_back({i, sigma.coeff(static_cast<std::size_t>(i)), chrom.coeff(static_cast<std::size_t>(i))});
    }
    return r;
}

Result cmd_roots(const GraphFamily& g) {
    Result r{record_for("roots", g)};
    const auto sigma = stirling_poly(g);
    const auto iso = isolate_negative_roots(sigma);
    const long real = count_real_roots(sigma);
    const bool real_rooted = real == sigma.degree() && iso.positive_root_count == 0 && iso.nonzero_roots_simple;
    r.record.summary = {{"degree", sigma.degree()},
                        {"real_root_count", real},
                        {"zero_multiplicity", iso.zero_multiplicity},
                        {"negative_root_count", static_cast<long>(iso.intervals.size())},
                        {"positive_root_count", iso.positive_root_count},
                        {"real_rooted", real_rooted}};
    r.record.columns = {"index", "lo", "hi", "lo_float", "hi_float"};
    for (std::size_t i = 0; i < iso.intervals.size(); ++i) {
        const auto& iv = iso.intervals[i];
        r.record.rows.push_back(
            {static_cast<long>(i + 1), iv.lo.str(), iv.hi.str(), iv.lo.to_double(), iv.hi.to_double()});
    }
    r.verified = real_rooted;
    return r;
}

Result cmd_interlace(long c, long n) {
    Result r;
    r.record.command = "interlace";
    r.record.parameters = {{"c", c}, {"n", n}};
    const auto checks = verify_interlacing_relations(c, n);
    long applicable = 0;
    long held = 0;
    r.record.columns = {"relation", "applicable", "holds", "failure_reason"};
    for (const auto& check : checks) {
        std::string reason;
        if (check.verdict.failure_reason) {
            reason = std::string(to_string(*check.verdict.failure_reason));
        }
        r.record.rows.push_back({static_cast<long>(check.relation), check.applicable,
                                 check.applicable && check.verdict.holds, reason});
        if (check.applicable) {
            ++applicable;
            held += check.verdict.holds ? 1 : 0;
        }
    }
    r.record.summary = {{"applicable", applicable}, {"certified", held}, {"all_hold", applicable == held}};
    r.verified = applicable == held;
    return r;
}

Result cmd_ulc(const GraphFamily& g, std::optional<long> strict_from) {
    Result r{record_for("ulc", g)};
    const auto v = stirling_vector(g);
    const long strict = strict_from.value_or(chi(g));
    if (strict < 0) {
        throw std::invalid_argument("--strict-from must be non-negative");
    }
    const auto report = ultra_log_concave(v.counts, static_cast<std::size_t>(strict));
    r.record.parameters.emplace_back("strict_from", strict);
    r.record.summary = {{"sequence_length", static_cast<long>(report.sequence_length)},
                        {"holds", report.holds},
                        {"strict_from", static_cast<long>(report.strict_from)}};
    if (report.first_violation) {
        r.record.summary.emplace_back("first_violation", static_cast<long>(*report.first_violation));
    }
    r.verified = report.holds;
    return r;
}

Result cmd_moments(const GraphFamily& g) {
    Result r{record_for("moments", g)};
    const auto m = moments(g);
    const bool identities = m.mean_exact == m.mean_formula && m.variance_exact == m.variance_formula;
    r.record.summary = {{"mean_exact", rational_str(m.mean_exact)},
                        {"variance_exact", rational_str(m.variance_exact)},
                        {"mean_formula", rational_str(m.mean_formula)},
                        {"variance_formula", rational_str(m.variance_formula)},
                        {"identities_hold", identities},
                        {"mean_float", m.mean_float},
                        {"variance_float", m.variance_float},
                        {"mean_estimate", m.mean_estimate},
                        {"variance_estimate", m.variance_estimate}};
    r.verified = identities;
    return r;
}

Result cmd_normality(const GraphFamily& g) {
    Result r{record_for("normality", g)};
    const auto rep = normality_report(g);
    r.record.summary = {{"mean", rep.mean},
                        {"std_dev", rep.std_dev},
                        {"kolmogorov_distance", rep.kolmogorov_distance},
                        {"local_limit_sup", rep.local_limit_sup},
                        {"berry_esseen_product", rep.berry_esseen_product}};
    return r;
}

Result cmd_estimates(const GraphFamily& g) {
    Result r{record_for("estimates", g)};
    const auto rep = estimate_report(g);
    r.record.summary = {{"w", rep.w},
                        {"mean_estimate", rep.mean_estimate},
                        {"var_estimate", rep.var_estimate},
                        {"mean_exact_float", rep.mean_exact_float},
                        {"var_exact_float", rep.var_exact_float},
                        {"mean_abs_error_times_logn", rep.mean_abs_error_times_logn},
                        {"var_abs_error_times_logn_over_c2", rep.var_abs_error_times_logn_over_c2},
                        {"bell_ratio_deviation", bell_ratio_deviation(rep.n)},
                        {"harper_variance_deviation", harper_variance_deviation(rep.n)}};
    return r;
}

Result cmd_oracle_check(long max_n, long max_cycle) {
    if (max_n < 1 || max_n > static_cast<long>(oracle::kMaxOracleVertices)) {
        throw std::invalid_argument("--max-n must be between 1 and " + std::to_string(oracle::kMaxOracleVertices));
    }
    if (max_cycle > static_cast<long>(oracle::kMaxOracleVertices)) {
        throw std::invalid_argument("--max-cycle must be at most " + std::to_string(oracle::kMaxOracleVertices));
    }
    Result r;
    r.record.command = "oracle-check";
    r.record.parameters = {{"max_n", max_n}, {"max_cycle", max_cycle}};
    r.record.columns = {"graph", "shape", "match"};
    long comparisons = 0;
    long mismatches = 0;
    const auto compare = [&](const GraphFamily& g, const std::string& shape, const oracle::ExplicitGraph& eg) {
        const bool match = oracle::enumerate_partition_counts(eg) == stirling_vector(g).counts;
        r.record.rows.push_back({g.str(), shape, match});
        ++comparisons;
        mismatches += match ? 0 : 1;
    };
    constexpr std::uint64_t kSeeds[] = {1, 2, 3};
    for (long n = 1; n <= max_n; ++n) {
        for (long c = 1; c <= n; ++c) {
            const auto g = GraphFamily::forest(n, c);
            const auto un = static_cast<std::size_t>(n);
            const auto uc = static_cast<std::size_t>(c);
            compare(g, "star", oracle::build_star_forest(un, uc));
            for (auto seed : kSeeds) {
                compare(g, "random seed " + std::to_string(seed), oracle::build_random_forest(un, uc, seed));
            }
        }
    }
    for (long n = 3; n <= max_cycle; ++n) {
        compare(GraphFamily::cycle(n), "cycle", oracle::build_cycle(static_cast<std::size_t>(n)));
    }
    for (long n = 2; n <= std::min<long>(max_cycle, 12); ++n) {
        const auto g = GraphFamily::cycle(n);
        const bool match = graph_bell(g) == oracle::singleton_free_count(static_cast<std::size_t>(n));
        r.record.rows.push_back({g.str(), std::string("bell vs singleton-free"), match});
        ++comparisons;
        mismatches += match ? 0 : 1;
    }
    r.record.summary = {{"comparisons", comparisons}, {"mismatches", mismatches}};
    r.verified = mismatches == 0;
    return r;
}

Result cmd_bell(std::optional<long> upto, const std::optional<GraphFamily>& g) {
    Result r;
    r.record.command = "bell";
    if (upto) {
        if (*upto < 0) {
            throw std::invalid_argument("--n must be non-negative");
        }
        r.record.parameters.emplace_back("n", *upto);
        r.record.columns = {"n", "B"};
        const auto values = bell_prefix(static_cast<std::size_t>(*upto));
        for (std::size_t i = 0; i < values.size(); ++i) {
            r.record.rows.push_back({static_cast<long>(i), values[i]});
        }
        r.record.summary.emplace_back("bell", values.back());
    }
    if (g) {
        r.record.parameters.emplace_back("graph", g->str());
        r.record.summary.emplace_back("graph_bell", graph_bell(*g));
    }
    return r;
}

void print_human_summary(std::ostream& err, const OutputRecord& rec) {
    err << rec.command;
    for (const auto& [k, v] : rec.parameters) {
        err << ' ' << k << '=' << to_text(v);
    }
    err << '\n';
    for (const auto& [k, v] : rec.summary) {
        std::string text = to_text(v);
        if (text.size() > 60) {
            text = text.substr(0, 28) + "..." + text.substr(text.size() - 28) + " (" +
                   std::to_string(text.size()) + " chars)";
        }
        err << "  " << k << ": " << text << '\n';
    }
    if (!rec.columns.empty()) {
        err << "  rows: " << rec.rows.size() << '\n';
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graphical Stirling numbers of forests and cycles", "gstir"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    std::string cache_path;
    bool quiet = false;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_option("--bell-cache", cache_path, "Bell number cache file, loaded if present and saved after the run");
    app.add_flag("--quiet", quiet, "suppress the human-readable summary");

    GraphFlags table_g, poly_g, roots_g, ulc_g, moments_g, normality_g, estimates_g, bell_g;
    auto* table = app.add_subcommand("table", "S(G,k) for every k with a nonzero count");
    add_graph_flags(table, table_g);
    auto* poly = app.add_subcommand("poly", "Stirling and chromatic polynomials");
    add_graph_flags(poly, poly_g);
    auto* roots = app.add_subcommand("roots", "real-root count and isolating intervals of the Stirling polynomial");
    add_graph_flags(roots, roots_g);

    long inter_c = 0;
    long inter_n = 0;
    auto* interlace = app.add_subcommand("interlace", "certify the five forest interlacing relations");
    interlace->add_option("--c", inter_c, "component count")->required();
    interlace->add_option("--n", inter_n, "vertex count")->required();

    std::optional<long> strict_from;
    auto* ulc = app.add_subcommand("ulc", "ultra log-concavity of S(G,.)");
    add_graph_flags(ulc, ulc_g);
    ulc->add_option("--strict-from", strict_from, "first k with strict inequality (default: chromatic number)");

    auto* moments_cmd = app.add_subcommand("moments", "exact mean and variance against the Bell-number forms");
    add_graph_flags(moments_cmd, moments_g);
    auto* normality = app.add_subcommand("normality", "normal approximation diagnostics");
    add_graph_flags(normality, normality_g);
    auto* estimates = app.add_subcommand("estimates", "Lambert W estimates and Bell ratio deviations");
    add_graph_flags(estimates, estimates_g);

    long max_n = 9;
    long max_cycle = 10;
    auto* oracle_check = app.add_subcommand("oracle-check", "compare against exhaustive enumeration");
    oracle_check->add_option("--max-n", max_n, "largest forest size")->capture_default_str();
    oracle_check->add_option("--max-cycle", max_cycle, "largest cycle size")->capture_default_str();

    std::optional<long> bell_n;
    auto* bell_cmd = app.add_subcommand("bell", "Bell numbers B_0..B_N and/or a graph Bell number");
    bell_cmd->add_option("--n", bell_n, "table B_0..B_N");
    add_graph_flags(bell_cmd, bell_g);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        std::size_t loaded = 0;
        if (!cache_path.empty() && std::filesystem::exists(cache_path)) {
            const auto seq = load_bell_cache(cache_path);
            loaded = seq.values().size();
            install_bell_values(seq);
        }

        Result result;
        if (table->parsed()) {
            result = cmd_table(table_g.resolve());
        } else if (poly->parsed()) {
            result = cmd_poly(poly_g.resolve());
        } else if (roots->parsed()) {
            result = cmd_roots(roots_g.resolve());
        } else if (interlace->parsed()) {
            result = cmd_interlace(inter_c, inter_n);
        } else if (ulc->parsed()) {
            result = cmd_ulc(ulc_g.resolve(), strict_from);
        } else if (moments_cmd->parsed()) {
            result = cmd_moments(moments_g.resolve());
        } else if (normality->parsed()) {
            result = cmd_normality(normality_g.resolve());
        } else if (estimates->parsed()) {
            result = cmd_estimates(estimates_g.resolve());
        } else if (oracle_check->parsed()) {
            result = cmd_oracle_check(max_n, max_cycle);
        } else {
            if (!bell_n && !bell_g.any()) {
                throw UsageError("bell needs --n N and/or a graph flag");
            }
            std::optional<GraphFamily> g;
            if (bell_g.any()) {
                g = bell_g.resolve();
            }
            result = cmd_bell(bell_n, g);
        }

        if (format == "csv") {
            out << result.record.to_csv();
        } else {
            out << result.record.to_json().dump(2) << '\n';
        }
        if (!quiet) {
            print_human_summary(err, result.record);
        }

        if (!cache_path.empty()) {
            const auto snapshot = bell_cache_snapshot();
            if (snapshot.values().size() > loaded) {
                save_bell_cache(cache_path, snapshot);
            }
        }

        if (!result.verified) {
            err << "verification failed\n";
            return kVerificationFailed;
        }
        return kOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const CacheFormatError& e) {
        err << "error: " << e.what() << '\n';
        return kCacheFormat;
    } catch (const std::invalid_argument& e) {
        err << "invalid parameters: " << e.what() << '\n';
        return kInvalidParameters;
    } catch (const std::domain_error& e) {
        err << "invalid parameters: " << e.what() << '\n';
        return kInvalidParameters;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

}  // namespace gstir::cli
