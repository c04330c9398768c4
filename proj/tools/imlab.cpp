// imlab: command-line front end for the exact independence/matching engine.
//
// Subcommands: invariants, verify, scan, family, hall-demo, witnesses.
// Exit codes: 0 clean, 1 conjecture finding, 2 defect, 3 I/O or budget
// failure, 64 usage error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "imlab/bounds.hpp"
#include "imlab/generators.hpp"
#include "imlab/graph_io.hpp"
#include "imlab/harness.hpp"
#include "imlab/invariants.hpp"
#include "imlab/lemmas.hpp"
#include "imlab/text.hpp"

namespace {

using namespace imlab;

constexpr int kExitClean = 0;
constexpr int kExitFinding = 1;
constexpr int kExitDefect = 2;
constexpr int kExitIoOrBudget = 3;
constexpr int kExitUsage = 64;

struct IoOptions {
    std::string graph6_inline;
    std::string input = "-";
    std::string input_format = "graph6";
    std::string output = "-";
    std::string format = "text";
};

void add_input_flags(CLI::App* cmd, IoOptions& io) {
    cmd->add_option("--graph6", io.graph6_inline, "Inline graph6 string")
        ->envname("IMLAB_GRAPH6");
    cmd->add_option("--input", io.input, "Input path, '-' for stdin")
        ->envname("IMLAB_INPUT");
    cmd->add_option("--input-format", io.input_format, "graph6 | edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}))
        ->envname("IMLAB_INPUT_FORMAT");
}

void add_output_flags(CLI::App* cmd, IoOptions& io) {
    cmd->add_option("--output", io.output, "Output path, '-' for stdout")
        ->envname("IMLAB_OUTPUT");
    cmd->add_option("--format", io.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->envname("IMLAB_FORMAT");
}

void add_budget_flags(CLI::App* cmd, Budget& budget) {
    cmd->add_option("--budget-nodes", budget.max_nodes, "Solver node budget")
        ->envname("IMLAB_BUDGET_NODES");
    cmd->add_option("--budget-sets", budget.max_sets, "Enumeration count budget")
        ->envname("IMLAB_BUDGET_SETS");
}

// Owns either a file stream or refers to a standard stream.
struct StreamHolder {
    std::unique_ptr<std::ifstream> in_file;
    std::unique_ptr<std::ofstream> out_file;

    std::istream& open_in(const std::string& path) {
        if (path == "-") return std::cin;
        in_file = std::make_unique<std::ifstream>(path);
        if (!*in_file) throw Error("cannot open input: " + path);
        return *in_file;
    }

    std::ostream& open_out(const std::string& path) {
        if (path == "-") return std::cout;
        out_file = std::make_unique<std::ofstream>(path);
        if (!*out_file) throw Error("cannot open output: " + path);
        return *out_file;
    }
};

std::unique_ptr<GraphSource> make_input_source(const IoOptions& io, StreamHolder& streams) {
    if (!io.graph6_inline.empty()) {
        Graph g = parse_graph6(io.graph6_inline);
        std::vector<GraphEntry> one{{encode_graph6(g), std::move(g)}};
        return std::make_unique<VectorSource>(std::move(one));
    }
    if (io.input_format == "edgelist") {
        Graph g = parse_edge_list(streams.open_in(io.input));
        std::vector<GraphEntry> one{{encode_graph6(g), std::move(g)}};
        return std::make_unique<VectorSource>(std::move(one));
    }
    return std::make_unique<Graph6StreamSource>(streams.open_in(io.input));
}

int run_invariants(const IoOptions& io, const Budget& budget) {
    StreamHolder streams;
    auto source = make_input_source(io, streams);
    std::ostream& out = streams.open_out(io.output);
    bool skipped = false;
    if (io.format == "csv") out << "id," << InvariantRecord::csv_header() << '\n';
    while (auto entry = source->next()) {
        try {
            InvariantRecord rec = compute_record(entry->graph, budget);
            if (io.format == "json") {
                out << "{\"id\":\"" << json_escape(entry->id) << "\",\"record\":" << rec.to_json()
                    << "}\n";
            } else if (io.format == "csv") {
                out << entry->id << ',' << rec.csv_row() << '\n';
            } else {
                out << "graph " << entry->id << ": n=" << rec.n << " m=" << rec.m
                    << " alpha=" << rec.alpha << " mu=" << rec.mu << " mu*=" << rec.mu_star
                    << " i=" << rec.idom << " a=" << rec.annihilation
                    << " delta=" << rec.delta << " Delta=" << rec.big_delta
                    << " core=" << rec.core_size << " " << to_string(rec.edge_class)
                    << (rec.well_covered ? " well-covered" : "")
                    << (rec.konig_egervary ? " konig-egervary" : "")
                    << " max-ind-sets=" << rec.max_ind_set_count << '\n';
            }
        } catch (const BudgetError& e) {
            std::cerr << "skip " << entry->id << ": " << e.what() << '\n';
            skipped = true;
        }
    }
    return skipped ? kExitIoOrBudget : kExitClean;
}

int run_verify(const IoOptions& io, const Budget& budget, const std::string& check_list) {
    StreamHolder streams;
    auto source = make_input_source(io, streams);
    std::ostream& out = streams.open_out(io.output);
    parse_checks(check_list);  // validates names; BoundReport always carries all sections
    bool skipped = false;
    bool defects = false;
    if (io.format == "csv") out << BoundReport::csv_header() << '\n';
    while (auto entry = source->next()) {
        try {
            BoundReport report = evaluate_all(entry->id, entry->graph, budget);
            if (io.format == "json")
                out << report.to_json() << '\n';
            else if (io.format == "csv")
                out << report.csv_row() << '\n';
            else
                out << report.to_text();
            if (!report.defects.empty()) defects = true;
        } catch (const BudgetError& e) {
            std::cerr << "skip " << entry->id << ": " << e.what() << '\n';
            skipped = true;
        }
    }
    if (defects) return kExitDefect;
    return skipped ? kExitIoOrBudget : kExitClean;
}

struct ScanCli {
    IoOptions io;
    Budget budget;
    bool exhaustive = false;
    int n_max = 6;
    std::uint64_t random_count = 0;
    int random_n_min = 4;
    int random_n_max = 12;
    std::uint64_t regular_count = 0;
    int regular_n = 10;
    int regular_r = 3;
    std::uint64_t seed = 1;
    int workers = 1;
    std::string filter_list;
    std::string check_list = "all";
    std::string csv_path;
    std::string witness_prefix;
};

// Concatenates several sources; used when scan mixes corpus kinds.
class ChainSource : public GraphSource {
public:
    explicit ChainSource(std::vector<std::unique_ptr<GraphSource>> sources)
        : sources_(std::move(sources)) {}

    std::optional<GraphEntry> next() override {
        while (index_ < sources_.size()) {
            if (auto entry = sources_[index_]->next()) return entry;
            ++index_;
        }
        return std::nullopt;
    }

private:
    std::vector<std::unique_ptr<GraphSource>> sources_;
    std::size_t index_ = 0;
};

std::unique_ptr<GraphSource> make_scan_source(const ScanCli& cli, StreamHolder& streams,
                                              bool input_flag_given) {
    std::vector<std::unique_ptr<GraphSource>> sources;
    if (!cli.io.graph6_inline.empty() || input_flag_given) {
        IoOptions io = cli.io;
        sources.push_back(make_input_source(io, streams));
    }
    if (cli.exhaustive)
        sources.push_back(std::make_unique<ExhaustiveLabeledSource>(1, cli.n_max));
    if (cli.random_count > 0)
        sources.push_back(std::make_unique<RandomGnpSource>(cli.random_n_min, cli.random_n_max,
                                                            cli.random_count, cli.seed));
    if (cli.regular_count > 0)
        sources.push_back(std::make_unique<RandomRegularSource>(cli.regular_n, cli.regular_r,
                                                                cli.regular_count, cli.seed));
    if (sources.empty()) throw Error("scan: no source given (--input/--graph6/--exhaustive/--random-count/--regular-count)");
    if (sources.size() == 1) return std::move(sources.front());
    return std::make_unique<ChainSource>(std::move(sources));
}

int run_scan(const ScanCli& cli, bool input_flag_given) {
    StreamHolder streams;
    auto source = make_scan_source(cli, streams, input_flag_given);
    ScanOptions options;
    options.budget = cli.budget;
    options.workers = cli.workers;
    options.checks = parse_checks(cli.check_list);
    options.collect_rows = !cli.csv_path.empty();
    if (!cli.filter_list.empty()) {
        std::stringstream ss(cli.filter_list);
        std::string token;
        while (std::getline(ss, token, ','))
            if (!token.empty()) options.filters.push_back(make_filter(token));
    }
    SearchReport report = scan(*source, options);
    std::ostream& out = streams.open_out(cli.io.output);
    if (cli.io.format == "text")
        out << report.summary();
    else
        out << report.to_json() << '\n';
    if (!cli.csv_path.empty()) {
        std::ofstream csv(cli.csv_path);
        if (!csv) throw Error("cannot open csv output: " + cli.csv_path);
        csv << report.to_csv();
    }
    if (!cli.witness_prefix.empty()) {
        auto dump = [&](const std::string& suffix, const std::vector<std::string>& lines) {
            std::ofstream f(cli.witness_prefix + suffix);
            if (!f) throw Error("cannot open witness output: " + cli.witness_prefix + suffix);
            for (const auto& line : lines) f << line << '\n';
        };
        dump(".problem1.g6", report.problem1_witnesses);
        dump(".problem2.g6", report.problem2_witnesses);
        std::vector<std::string> conj;
        for (const auto& v : report.conjecture1_violations) conj.push_back(v.id);
        for (const auto& v : report.question1_violations) conj.push_back(v.id);
        dump(".violations.g6", conj);
    }
    return report.exit_code();
}

struct FamilyCli {
    IoOptions io;
    std::vector<int> gpqr;
    std::vector<int> bipartite;
    int cycle_n = 0;
    int path_n = 0;
    int complete_n = 0;
    int empty_n = 0;
    bool petersen = false;
    bool prism_isolates = false;
    std::vector<int> regular;  // n r
    std::uint64_t count = 1;
    std::uint64_t seed = 1;
};

int run_family(const FamilyCli& cli) {
    StreamHolder streams;
    std::ostream& out = streams.open_out(cli.io.output);
    std::vector<Graph> graphs;
    if (cli.gpqr.size() == 3) graphs.push_back(gen::family_gpqr(cli.gpqr[0], cli.gpqr[1], cli.gpqr[2]));
    if (cli.bipartite.size() == 2) graphs.push_back(gen::complete_bipartite(cli.bipartite[0], cli.bipartite[1]));
    if (cli.cycle_n > 0) graphs.push_back(gen::cycle(cli.cycle_n));
    if (cli.path_n > 0) graphs.push_back(gen::path(cli.path_n));
    if (cli.complete_n > 0) graphs.push_back(gen::complete(cli.complete_n));
    if (cli.empty_n > 0) graphs.push_back(gen::empty_graph(cli.empty_n));
    if (cli.petersen) graphs.push_back(gen::petersen());
    if (cli.prism_isolates) graphs.push_back(gen::prism_with_isolates());
    if (cli.regular.size() == 2) {
        RandomRegularSource src(cli.regular[0], cli.regular[1], cli.count, cli.seed);
        while (auto entry = src.next()) graphs.push_back(entry->graph);
    }
    if (graphs.empty()) throw Error("family: no family selected");
    for (const auto& g : graphs) out << encode_graph6(g) << '\n';
    return kExitClean;
}

int run_hall_demo(const IoOptions& io, const Budget& budget, const std::vector<int>& pair) {
    StreamHolder streams;
    auto source = make_input_source(io, streams);
    std::ostream& out = streams.open_out(io.output);
    auto entry = source->next();
    if (!entry) throw Error("hall-demo: no graph supplied");
    const Graph& g = entry->graph;
    auto maximum_sets = all_maximum_independent_sets(g, budget);
    out << "graph " << entry->id << ": n=" << g.order() << " m=" << g.size() << '\n';
    out << "maximum independent sets (" << maximum_sets.size() << "):\n";
    for (std::size_t i = 0; i < maximum_sets.size(); ++i)
        out << "  [" << i << "] " << maximum_sets[i].to_string() << '\n';

    IntersectionChain chain;
    if (pair.size() == 2) {
        if (pair[0] < 0 || pair[1] < 0 ||
            pair[0] >= static_cast<int>(maximum_sets.size()) ||
            pair[1] >= static_cast<int>(maximum_sets.size()))
            throw Error("hall-demo: --pair index out of range");
        chain.base = maximum_sets[static_cast<std::size_t>(pair[0])];
        chain.sets = {maximum_sets[static_cast<std::size_t>(pair[0])],
                      maximum_sets[static_cast<std::size_t>(pair[1])]};
        out << "chain: sets [" << pair[0] << "], [" << pair[1] << "], base = ["
            << pair[0] << "]\n";
    } else {
        chain.base = maximum_sets.front();
        chain.sets = maximum_sets;
        out << "chain: all maximum independent sets, base = [0]\n";
    }
    TelescopeResult result = telescoping_matching(g, chain, budget);
    out << result.trace();
    int alpha = static_cast<int>(maximum_sets.front().size());
    int mu = matching_number(g);
    int term = static_cast<int>(result.intersection.size()) -
               static_cast<int>(result.residual.size());
    out << "bound ledger: alpha = " << alpha << " <= mu + |X| - mu(G[N[X]]) = " << mu << " + "
        << static_cast<int>(result.intersection.size()) << " - " << result.residual.size()
        << " = " << mu + term << '\n';
    return kExitClean;
}

struct WitnessCli {
    IoOptions io;
    Budget budget;
    std::string which = "problem2";
    bool exhaustive = false;
    int n_max = 6;
    std::uint64_t regular_count = 0;
    int regular_n = 8;
    int regular_r = 3;
    std::uint64_t seed = 1;
};

int run_witnesses(const WitnessCli& cli, bool input_flag_given) {
    StreamHolder streams;
    ScanCli as_scan;
    as_scan.io = cli.io;
    as_scan.exhaustive = cli.exhaustive;
    as_scan.n_max = cli.n_max;
    as_scan.regular_count = cli.regular_count;
    as_scan.regular_n = cli.regular_n;
    as_scan.regular_r = cli.regular_r;
    as_scan.seed = cli.seed;
    as_scan.budget = cli.budget;
    auto source = make_scan_source(as_scan, streams, input_flag_given);
    Problem which = cli.which == "problem1" ? Problem::AlphaEqualsMuOnCubic
                                            : Problem::DegreeProductEquality;
    auto witnesses = collect_equality_witnesses(*source, which, cli.budget);
    std::ostream& out = streams.open_out(cli.io.output);
    for (const auto& w : witnesses) out << w << '\n';
    return kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"imlab: exact independence/matching invariants, bound checks, and corpus scans"};
    app.require_subcommand(1);

    IoOptions inv_io;
    Budget inv_budget;
    auto* inv = app.add_subcommand("invariants", "Compute the invariant record per input graph");
    add_input_flags(inv, inv_io);
    add_output_flags(inv, inv_io);
    add_budget_flags(inv, inv_budget);

    IoOptions ver_io;
    Budget ver_budget;
    std::string ver_checks = "all";
    auto* ver = app.add_subcommand("verify", "Evaluate every bound with exact slack");
    add_input_flags(ver, ver_io);
    add_output_flags(ver, ver_io);
    add_budget_flags(ver, ver_budget);
    ver->add_option("--check", ver_checks, "Comma list of checks or 'all'")
        ->envname("IMLAB_CHECK");

    ScanCli scan_cli;
    auto* scn = app.add_subcommand("scan", "Stream a corpus through the verification harness");
    add_input_flags(scn, scan_cli.io);
    auto* scan_input_opt = scn->get_option("--input");
    add_output_flags(scn, scan_cli.io);
    add_budget_flags(scn, scan_cli.budget);
    scn->add_flag("--exhaustive", scan_cli.exhaustive, "All labeled graphs with n <= n-max");
    scn->add_option("--n-max", scan_cli.n_max, "Exhaustive order ceiling (<= 7)")
        ->envname("IMLAB_NMAX");
    scn->add_option("--random-count", scan_cli.random_count, "Seeded G(n,1/2) sample count");
    scn->add_option("--random-n-min", scan_cli.random_n_min, "Random n lower bound");
    scn->add_option("--random-n-max", scan_cli.random_n_max, "Random n upper bound");
    scn->add_option("--regular-count", scan_cli.regular_count, "Seeded random regular count");
    scn->add_option("--regular-n", scan_cli.regular_n, "Random regular order");
    scn->add_option("--regular-r", scan_cli.regular_r, "Random regular degree");
    scn->add_option("--seed", scan_cli.seed, "Sampling seed")->envname("IMLAB_SEED");
    scn->add_option("--workers", scan_cli.workers, "Parallel per-graph checking")
        ->envname("IMLAB_WORKERS");
    scn->add_option("--filter", scan_cli.filter_list,
                    "Comma list: connected,cubic,regular,isolate-free,nmax:K,nmin:K");
    scn->add_option("--check", scan_cli.check_list, "Comma list of checks or 'all'")
        ->envname("IMLAB_CHECK");
    scn->add_option("--csv", scan_cli.csv_path, "Write per-graph CSV table here");
    scn->add_option("--witness-prefix", scan_cli.witness_prefix,
                    "Write witness graph6 files with this prefix");

    FamilyCli fam_cli;
    auto* fam = app.add_subcommand("family", "Emit named graph families as graph6");
    add_output_flags(fam, fam_cli.io);
    fam->add_option("--gpqr", fam_cli.gpqr, "Sharpness family parameters p q r")
        ->expected(3);
    fam->add_option("--complete-bipartite", fam_cli.bipartite, "K_{a,b}")->expected(2);
    fam->add_option("--cycle", fam_cli.cycle_n, "Cycle C_n");
    fam->add_option("--path", fam_cli.path_n, "Path P_n");
    fam->add_option("--complete", fam_cli.complete_n, "Complete K_n");
    fam->add_option("--empty", fam_cli.empty_n, "Empty graph E_n");
    fam->add_flag("--petersen", fam_cli.petersen, "Petersen graph");
    fam->add_flag("--prism-isolates", fam_cli.prism_isolates,
                  "Triangular prism plus three isolated vertices");
    fam->add_option("--random-regular", fam_cli.regular, "Random r-regular: n r")->expected(2);
    fam->add_option("--count", fam_cli.count, "How many random graphs");
    fam->add_option("--seed", fam_cli.seed, "Sampling seed")->envname("IMLAB_SEED");

    IoOptions hall_io;
    Budget hall_budget;
    std::vector<int> hall_pair;
    auto* hall = app.add_subcommand("hall-demo",
                                    "Print the saturating-matching construction trace");
    add_input_flags(hall, hall_io);
    add_output_flags(hall, hall_io);
    add_budget_flags(hall, hall_budget);
    hall->add_option("--pair", hall_pair, "Use maximum independent sets i j as the chain")
        ->expected(2);

    WitnessCli wit_cli;
    auto* wit = app.add_subcommand("witnesses", "Collect equality witnesses for the open problems");
    add_input_flags(wit, wit_cli.io);
    auto* wit_input_opt = wit->get_option("--input");
    add_output_flags(wit, wit_cli.io);
    add_budget_flags(wit, wit_cli.budget);
    wit->add_option("--which", wit_cli.which, "problem1 | problem2")
        ->check(CLI::IsMember({"problem1", "problem2"}));
    wit->add_flag("--exhaustive", wit_cli.exhaustive, "All labeled graphs with n <= n-max");
    wit->add_option("--n-max", wit_cli.n_max, "Exhaustive order ceiling (<= 7)");
    wit->add_option("--regular-count", wit_cli.regular_count, "Seeded random regular count");
    wit->add_option("--regular-n", wit_cli.regular_n, "Random regular order");
    wit->add_option("--regular-r", wit_cli.regular_r, "Random regular degree");
    wit->add_option("--seed", wit_cli.seed, "Sampling seed")->envname("IMLAB_SEED");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (inv->parsed()) return run_invariants(inv_io, inv_budget);
        if (ver->parsed()) return run_verify(ver_io, ver_budget, ver_checks);
        if (scn->parsed()) return run_scan(scan_cli, scan_input_opt->count() > 0);
        if (fam->parsed()) return run_family(fam_cli);
        if (hall->parsed()) return run_hall_demo(hall_io, hall_budget, hall_pair);
        if (wit->parsed()) return run_witnesses(wit_cli, wit_input_opt->count() > 0);
    } catch (const DefectError& e) {
        std::cerr << "defect: " << e.what() << '\n';
        return kExitDefect;
    } catch (const BudgetError& e) {
        std::cerr << "budget: " << e.what() << '\n';
        return kExitIoOrBudget;
    } catch (const ContractError& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIoOrBudget;
    }
    return kExitUsage;
}
