#include "imlab/harness.hpp"

#include <algorithm>
#include <istream>
#include <mutex>
#include <sstream>
#include <thread>

#include "imlab/generators.hpp"
#include "imlab/text.hpp"
#include "imlab/graph_io.hpp"
#include "imlab/lemmas.hpp"

namespace imlab {

Graph6StreamSource::Graph6StreamSource(std::istream& in) : in_(in) {}

std::optional<GraphEntry> Graph6StreamSource::next() {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_no_;
        if (line.empty() || line == "\r") continue;
        try {
            Graph g = parse_graph6(line);
            return GraphEntry{encode_graph6(g), std::move(g)};
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no_) + ": " + e.what(),
                             e.byte_offset());
        }
    }
    if (in_.bad()) throw Error("graph6 stream: read failure at line " + std::to_string(line_no_));
    return std::nullopt;
}

ExhaustiveLabeledSource::ExhaustiveLabeledSource(int n_min, int n_max)
    : n_(n_min), n_max_(n_max) {
    if (n_min < 1 || n_max < n_min) throw Error("exhaustive source: need 1 <= n_min <= n_max");
    if (n_max > 7) throw Error("exhaustive source: n_max > 7 is not tractable");
    mask_count_ = std::uint64_t{1} << (n_ * (n_ - 1) / 2);
}

std::optional<GraphEntry> ExhaustiveLabeledSource::next() {
    while (mask_ == mask_count_) {
        if (n_ == n_max_) return std::nullopt;
        ++n_;
        mask_ = 0;
        mask_count_ = std::uint64_t{1} << (n_ * (n_ - 1) / 2);
    }
    GraphBuilder b(n_);
    int bit = 0;
    for (int col = 1; col < n_; ++col)
        for (int row = 0; row < col; ++row, ++bit)
            if ((mask_ >> bit) & 1) b.add_edge(row, col);
    ++mask_;
    Graph g = b.build();
    return GraphEntry{encode_graph6(g), std::move(g)};
}

VectorSource::VectorSource(std::vector<GraphEntry> entries) : entries_(std::move(entries)) {}

std::optional<GraphEntry> VectorSource::next() {
    if (index_ >= entries_.size()) return std::nullopt;
    return entries_[index_++];
}

RandomGnpSource::RandomGnpSource(int n_min, int n_max, std::uint64_t count, std::uint64_t seed)
    : n_min_(n_min), n_max_(n_max), remaining_(count), seed_(seed) {
    if (n_min < 1 || n_max < n_min) throw Error("random source: need 1 <= n_min <= n_max");
}

std::optional<GraphEntry> RandomGnpSource::next() {
    if (remaining_ == 0) return std::nullopt;
    --remaining_;
    // one sub-seed per draw keeps the stream independent of pull order
    Rng pick(seed_ ^ (0x9e3779b97f4a7c15ULL * ++drawn_));
    int n = n_min_ + static_cast<int>(pick.below(static_cast<std::uint64_t>(n_max_ - n_min_ + 1)));
    Graph g = gen::random_gnp(n, 1, 2, pick.next());
    return GraphEntry{encode_graph6(g), std::move(g)};
}

RandomRegularSource::RandomRegularSource(int n, int r, std::uint64_t count, std::uint64_t seed)
    : n_(n), r_(r), remaining_(count), seed_(seed) {}

std::optional<GraphEntry> RandomRegularSource::next() {
    if (remaining_ == 0) return std::nullopt;
    --remaining_;
    Rng pick(seed_ ^ (0xbf58476d1ce4e5b9ULL * ++drawn_));
    Graph g = gen::random_regular(n_, r_, pick.next());
    return GraphEntry{encode_graph6(g), std::move(g)};
}

Filter make_filter(const std::string& name) {
    if (name == "connected") return {name, [](const Graph& g) { return is_connected(g); }};
    if (name == "cubic")
        return {name, [](const Graph& g) { return g.is_regular() && g.max_degree() == 3; }};
    if (name == "regular")
        return {name, [](const Graph& g) { return g.is_regular() && g.max_degree() > 0; }};
    if (name == "isolate-free") return {name, [](const Graph& g) { return g.min_degree() >= 1; }};
    if (name.rfind("nmax:", 0) == 0) {
        int k = std::stoi(name.substr(5));
        return {name, [k](const Graph& g) { return g.order() <= k; }};
    }
    if (name.rfind("nmin:", 0) == 0) {
        int k = std::stoi(name.substr(5));
        return {name, [k](const Graph& g) { return g.order() >= k; }};
    }
    throw Error("unknown filter: " + name);
}

namespace {

const std::vector<std::pair<std::string, Check>> kCheckNames = {
    {"record", Check::Record},   {"thm1", Check::Thm1},
    {"thm2", Check::Thm2},       {"chain1", Check::Chain1},
    {"thm3", Check::Thm3},       {"fournier", Check::Fournier},
    {"cor2", Check::Cor2},       {"eq3", Check::Eq3},
    {"conj1", Check::Conjecture1}, {"quest1", Check::Question1},
    {"problem1", Check::Problem1}, {"problem2", Check::Problem2},
};

std::string check_name(Check c) {
    for (const auto& [name, check] : kCheckNames)
        if (check == c) return name;
    return "?";
}

}  // namespace

std::vector<Check> parse_checks(const std::string& list) {
    std::vector<Check> out;
    std::stringstream ss(list);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        if (token == "all") {
            for (const auto& [name, check] : kCheckNames) out.push_back(check);
            continue;
        }
        bool found = false;
        for (const auto& [name, check] : kCheckNames) {
            if (name == token) {
                out.push_back(check);
                found = true;
                break;
            }
        }
        if (!found) throw Error("unknown check: " + token);
    }
    return out;
}

std::optional<Conjecture1Result> check_conjecture1(const Graph& g, const Budget& budget) {
    if (!g.is_regular() || g.max_degree() == 0) return std::nullopt;
    Conjecture1Result r;
    r.idom = independent_domination_number(g, budget);
    r.mu_star = minimum_maximal_matching_number(g, budget);
    r.holds = r.idom <= r.mu_star;
    return r;
}

Question1Result check_question1(const Graph& g, const Budget& budget) {
    Question1Result r;
    r.lhs = static_cast<long long>(g.min_degree()) *
            independent_domination_number(g, budget);
    r.rhs = static_cast<long long>(g.max_degree()) *
            minimum_maximal_matching_number(g, budget);
    r.holds = r.lhs <= r.rhs;
    return r;
}

namespace {

bool has(const std::vector<Check>& checks, Check c) {
    return std::find(checks.begin(), checks.end(), c) != checks.end();
}

// Runs every requested check on one graph, recording into a local report.
void check_graph(const GraphEntry& entry, const ScanOptions& options, SearchReport& report) {
    const Graph& g = entry.graph;
    const Budget& budget = options.budget;
    const auto& checks = options.checks;
    auto defect = [&](const std::string& check, const std::string& detail) {
        report.defects.push_back({entry.id, check, detail});
    };

    if (has(checks, Check::Record) || options.collect_rows) {
        InvariantRecord rec = compute_record(g, budget);  // gates internally
        if (options.collect_rows) report.csv_rows.push_back(entry.id + "," + rec.csv_row());
    }

    if (has(checks, Check::Thm1)) {
        auto maximum_sets = all_maximum_independent_sets(g, budget);
        int alpha = static_cast<int>(maximum_sets.front().size());
        int mu = matching_number(g);
        VertexSet core_set = maximum_sets.front();
        for (const auto& s : maximum_sets) core_set = set_intersection(core_set, s);
        auto term = [&](const VertexSet& x) {
            return static_cast<int>(x.size()) -
                   matching_number(induced_subgraph(g, closed_neighborhood(g, x)).graph);
        };
        int core_slack = mu + term(core_set) - alpha;
        if (core_slack < 0) defect("thm1", "core bound below alpha");
        if (core_slack == 0) ++report.sharpness["thm1_core"];
        bool any_pair_tight = false;
        for (std::size_t i = 0; i < maximum_sets.size(); ++i)
            for (std::size_t j = i + 1; j < maximum_sets.size(); ++j) {
                int slack =
                    mu + term(set_intersection(maximum_sets[i], maximum_sets[j])) - alpha;
                if (slack < 0) defect("thm1", "pairwise intersection bound below alpha");
                if (slack == 0) any_pair_tight = true;
            }
        if (any_pair_tight) ++report.sharpness["thm1_pair"];
    }

    if (has(checks, Check::Thm2)) {
        long long slack = static_cast<long long>(g.max_degree()) * matching_number(g) -
                          static_cast<long long>(g.min_degree()) *
                              independence_number(g, budget);
        if (slack < 0) defect("thm2", "delta*alpha > Delta*mu");
        if (slack == 0) ++report.sharpness["thm2"];
    }

    if (has(checks, Check::Chain1)) {
        Chain1 c = chain1_values(g, budget);
        if (!(c.n_minus_2mu <= c.n_minus_2mu_star && c.n_minus_2mu_star <= c.alpha &&
              c.alpha <= c.n_minus_mu))
            defect("chain1", "chain not monotone");
        if (c.alpha == c.n_minus_mu) ++report.sharpness["chain1_right"];
    }

    if (has(checks, Check::Thm3) && g.is_regular() && g.max_degree() > 0) {
        VertexSet x = maximum_independent_set(g, budget);
        Matching witness = regular_saturating_matching(g, x, budget);
        if (!witness.saturates_all(x)) defect("thm3", "witness fails to saturate X");
        if (static_cast<int>(witness.size()) < static_cast<int>(x.size()) ||
            static_cast<int>(x.size()) > matching_number(g))
            defect("thm3", "alpha <= mu not witnessed");
    }

    if (has(checks, Check::Fournier)) {
        if (edge_chromatic_class(g, budget) == EdgeClass::Class2 &&
            !has_cycle(max_degree_subgraph(g)))
            defect("fournier", "Class2 graph with acyclic max-degree subgraph");
    }

    if (has(checks, Check::Cor2)) {
        if (g.min_degree() >= 1 && is_well_covered(g, budget) &&
            independence_number(g, budget) > matching_number(g))
            defect("cor2", "isolate-free well-covered graph with alpha > mu");
    }

    if (has(checks, Check::Eq3)) {
        Eq3Check c = eq3_check(g, budget);
        if (c.applicable && !c.holds) defect("eq3", "n - 2mu* > mu under its conditions");
        if (c.applicable && c.n_minus_2mu_star == c.mu) ++report.sharpness["eq3"];
    }

    if (has(checks, Check::Conjecture1)) {
        if (auto r = check_conjecture1(g, budget)) {
            ++report.conjecture1_checked;
            if (!r->holds)
                report.conjecture1_violations.push_back(
                    {entry.id, "conj1",
                     "i=" + std::to_string(r->idom) + " mu*=" + std::to_string(r->mu_star)});
        }
    }

    if (has(checks, Check::Question1)) {
        Question1Result r = check_question1(g, budget);
        ++report.question1_checked;
        if (!r.holds)
            report.question1_violations.push_back(
                {entry.id, "quest1",
                 "delta*i=" + std::to_string(r.lhs) + " Delta*mu*=" + std::to_string(r.rhs)});
    }

    if (has(checks, Check::Problem1)) {
        if (g.is_regular() && g.max_degree() == 3 &&
            independence_number(g, budget) == matching_number(g))
            report.problem1_witnesses.push_back(entry.id);
    }

    if (has(checks, Check::Problem2)) {
        if (static_cast<long long>(g.min_degree()) * independence_number(g, budget) ==
            static_cast<long long>(g.max_degree()) * matching_number(g))
            report.problem2_witnesses.push_back(entry.id);
    }
}

}  // namespace

void SearchReport::merge(SearchReport&& other) {
    scanned += other.scanned;
    filtered_out += other.filtered_out;
    auto append = [](auto& dst, auto& src) {
        dst.insert(dst.end(), std::make_move_iterator(src.begin()),
                   std::make_move_iterator(src.end()));
    };
    append(defects, other.defects);
    conjecture1_checked += other.conjecture1_checked;
    append(conjecture1_violations, other.conjecture1_violations);
    question1_checked += other.question1_checked;
    append(question1_violations, other.question1_violations);
    append(problem1_witnesses, other.problem1_witnesses);
    append(problem2_witnesses, other.problem2_witnesses);
    for (const auto& [key, count] : other.sharpness) sharpness[key] += count;
    append(skipped, other.skipped);
    append(csv_rows, other.csv_rows);
}

void SearchReport::canonicalize() {
    auto by_id = [](const Violation& a, const Violation& b) {
        return std::tie(a.id, a.check, a.detail) < std::tie(b.id, b.check, b.detail);
    };
    std::sort(defects.begin(), defects.end(), by_id);
    std::sort(conjecture1_violations.begin(), conjecture1_violations.end(), by_id);
    std::sort(question1_violations.begin(), question1_violations.end(), by_id);
    std::sort(problem1_witnesses.begin(), problem1_witnesses.end());
    problem1_witnesses.erase(std::unique(problem1_witnesses.begin(), problem1_witnesses.end()),
                             problem1_witnesses.end());
    std::sort(problem2_witnesses.begin(), problem2_witnesses.end());
    problem2_witnesses.erase(std::unique(problem2_witnesses.begin(), problem2_witnesses.end()),
                             problem2_witnesses.end());
    std::sort(skipped.begin(), skipped.end(), by_id);
    std::sort(csv_rows.begin(), csv_rows.end());
}

int SearchReport::exit_code() const {
    if (!defects.empty()) return 2;
    if (!skipped.empty()) return 3;
    if (!conjecture1_violations.empty() || !question1_violations.empty()) return 1;
    return 0;
}

namespace {

void json_violations(std::ostringstream& os, const char* key,
                     const std::vector<Violation>& list) {
    os << '"' << key << "\":[";
    for (std::size_t i = 0; i < list.size(); ++i) {
        os << (i ? "," : "") << "{\"id\":\"" << json_escape(list[i].id) << "\",\"check\":\""
           << json_escape(list[i].check) << "\",\"detail\":\"" << json_escape(list[i].detail)
           << "\"}";
    }
    os << ']';
}

void json_strings(std::ostringstream& os, const char* key, const std::vector<std::string>& list) {
    os << '"' << key << "\":[";
    for (std::size_t i = 0; i < list.size(); ++i)
        os << (i ? "," : "") << '"' << json_escape(list[i]) << '"';
    os << ']';
}

}  // namespace

std::string SearchReport::to_json() const {
    std::ostringstream os;
    os << "{\"scanned\":" << scanned << ",\"filtered_out\":" << filtered_out << ',';
    json_strings(os, "filters", filters);
    os << ',';
    json_strings(os, "checks", checks);
    os << ',';
    json_violations(os, "defects", defects);
    os << ",\"conjecture1\":{\"checked\":" << conjecture1_checked << ',';
    json_violations(os, "violations", conjecture1_violations);
    os << "},\"question1\":{\"checked\":" << question1_checked << ',';
    json_violations(os, "violations", question1_violations);
    os << "},";
    json_strings(os, "problem1_witnesses", problem1_witnesses);
    os << ',';
    json_strings(os, "problem2_witnesses", problem2_witnesses);
    os << ",\"sharpness\":{";
    bool first = true;
    for (const auto& [key, count] : sharpness) {
        os << (first ? "" : ",") << '"' << key << "\":" << count;
        first = false;
    }
    os << "},";
    json_violations(os, "skipped", skipped);
    os << ",\"exit_code\":" << exit_code() << '}';
    return os.str();
}

std::string SearchReport::to_csv() const {
    std::ostringstream os;
    os << "id," << InvariantRecord::csv_header() << '\n';
    for (const auto& row : csv_rows) os << row << '\n';
    return os.str();
}

std::string SearchReport::summary() const {
    std::ostringstream os;
    os << "scanned " << scanned << " graphs (" << filtered_out << " filtered out)\n";
    os << "defects: " << defects.size() << '\n';
    os << "conjecture1: " << conjecture1_checked << " checked, "
       << conjecture1_violations.size() << " violations\n";
    os << "question1: " << question1_checked << " checked, " << question1_violations.size()
       << " violations\n";
    os << "problem1 witnesses: " << problem1_witnesses.size() << '\n';
    os << "problem2 witnesses: " << problem2_witnesses.size() << '\n';
    for (const auto& [key, count] : sharpness)
        os << "sharpness " << key << ": " << count << '\n';
    os << "skipped: " << skipped.size() << '\n';
    os << "exit code: " << exit_code() << '\n';
    return os.str();
}

SearchReport scan(GraphSource& source, const ScanOptions& options) {
    SearchReport total;
    for (const auto& f : options.filters) total.filters.push_back(f.name);
    for (Check c : options.checks) total.checks.push_back(check_name(c));

    std::mutex source_mutex;
    std::mutex merge_mutex;
    auto pull = [&]() -> std::optional<GraphEntry> {
        std::lock_guard<std::mutex> lock(source_mutex);
        return source.next();
    };

    int workers = std::max(1, options.workers);
    auto work = [&]() {
        SearchReport local;
        for (;;) {
            std::optional<GraphEntry> entry = pull();
            if (!entry) break;
            bool keep = true;
            for (const auto& f : options.filters)
                if (!f.pred(entry->graph)) {
                    keep = false;
                    break;
                }
            if (!keep) {
                ++local.filtered_out;
                continue;
            }
            ++local.scanned;
            // scratch keeps a budget-skipped graph from contributing partial
            // results: it is either fully checked or only its skip remains
            SearchReport scratch;
            try {
                check_graph(*entry, options, scratch);
                local.merge(std::move(scratch));
            } catch (const BudgetError& e) {
                local.skipped.push_back({entry->id, "budget", e.what()});
            } catch (const DefectError& e) {
                local.merge(std::move(scratch));
                local.defects.push_back({entry->id, "defect", e.what()});
            }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        total.merge(std::move(local));
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    total.canonicalize();
    return total;
}

std::vector<std::string> collect_equality_witnesses(GraphSource& source, Problem which,
                                                    const Budget& budget) {
    ScanOptions options;
    options.budget = budget;
    options.checks = {which == Problem::AlphaEqualsMuOnCubic ? Check::Problem1
                                                             : Check::Problem2};
    SearchReport report = scan(source, options);
    return which == Problem::AlphaEqualsMuOnCubic ? report.problem1_witnesses
                                                  : report.problem2_witnesses;
}

}  // namespace imlab
