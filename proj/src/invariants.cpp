#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

#include "imlab/invariants.hpp"

namespace imlab {

namespace {

struct MmmSearch {
    const Graph& g;
    std::vector<EdgePair> edges;  // lex order fixes the witness
    std::vector<char> used;
    std::vector<EdgePair> current;
    std::vector<EdgePair> best;
    std::uint64_t nodes = 0;
    std::uint64_t limit;

    MmmSearch(const Graph& graph, const Budget& budget)
        : g(graph),
          edges(graph.edge_list()),
          used(static_cast<std::size_t>(graph.order()), 0),
          limit(budget.max_nodes) {
        best.resize(edges.size() + 1);  // sentinel larger than any matching
    }

    // Branch rule: take the first edge (u,v) with both endpoints free; any
    // maximal matching must saturate u or v, so trying every free edge at u
    // and every free edge at v covers all extensions.
    void run() {
        if (++nodes > limit) throw BudgetError("node budget exhausted", "mu_star");
        if (current.size() >= best.size()) return;
        const EdgePair* free_edge = nullptr;
        for (const auto& e : edges) {
            if (!used[e.first] && !used[e.second]) {
                free_edge = &e;
                break;
            }
        }
        if (free_edge == nullptr) {
            best = current;  // maximal by construction, strictly smaller
            return;
        }
        auto [u, v] = *free_edge;
        for (int w : g.neighbors(u))
            if (!used[w]) branch(u, w);
        for (int w : g.neighbors(v))
            if (!used[w] && w != u) branch(v, w);
    }

    void branch(int a, int b) {
        used[a] = used[b] = 1;
        current.emplace_back(std::min(a, b), std::max(a, b));
        run();
        current.pop_back();
        used[a] = used[b] = 0;
    }
};

}  // namespace

Matching minimum_maximal_matching(const Graph& g, const Budget& budget) {
    MmmSearch search(g, budget);
    search.run();
    return Matching(std::move(search.best));
}

int minimum_maximal_matching_number(const Graph& g, const Budget& budget) {
    return static_cast<int>(minimum_maximal_matching(g, budget).size());
}

int annihilation_number(const Graph& g) {
    std::vector<int> d = g.degrees();
    std::sort(d.begin(), d.end());
    long long sum = 0;
    int k = 0;
    while (k < static_cast<int>(d.size()) && sum + d[k] <= g.size()) {
        sum += d[k];
        ++k;
    }
    return k;
}

const char* to_string(EdgeClass c) { return c == EdgeClass::Class1 ? "Class1" : "Class2"; }

namespace {

struct EdgeColoring {
    int delta;
    std::vector<EdgePair> order;
    std::vector<std::uint64_t> used_at;  // per-vertex color bitmask
    std::uint64_t nodes = 0;
    std::uint64_t limit;

    EdgeColoring(const Graph& g, const Budget& budget)
        : delta(g.max_degree()),
          used_at(static_cast<std::size_t>(g.order()), 0),
          limit(budget.max_nodes) {
        // visit vertices by descending degree and group their edges so that
        // consecutive edges share endpoints; keeps the search tight
        std::vector<int> by_degree(static_cast<std::size_t>(g.order()));
        std::iota(by_degree.begin(), by_degree.end(), 0);
        std::stable_sort(by_degree.begin(), by_degree.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        std::vector<char> listed(static_cast<std::size_t>(g.order()), 0);
        for (int v : by_degree) {
            for (int w : g.neighbors(v))
                if (!listed[w]) order.emplace_back(std::min(v, w), std::max(v, w));
            listed[v] = 1;
        }
    }

    bool color(std::size_t i, int max_used) {
        if (++nodes > limit) throw BudgetError("node budget exhausted", "edge_class");
        if (i == order.size()) return true;
        auto [u, v] = order[i];
        // colors above max_used+1 are symmetric to max_used+1; skip them
        int cap = std::min(delta - 1, max_used + 1);
        std::uint64_t avail = ~(used_at[u] | used_at[v]);
        for (int c = 0; c <= cap; ++c) {
            std::uint64_t bit = std::uint64_t{1} << c;
            if (!(avail & bit)) continue;
            used_at[u] |= bit;
            used_at[v] |= bit;
            if (color(i + 1, std::max(max_used, c))) return true;
            used_at[u] &= ~bit;
            used_at[v] &= ~bit;
        }
        return false;
    }
};

}  // namespace

EdgeClass edge_chromatic_class(const Graph& g, const Budget& budget) {
    if (g.size() == 0) return EdgeClass::Class1;
    if (g.max_degree() > 63)
        throw BudgetError("color masks limited to Delta <= 63", "edge_class");
    // every color class is a matching of at most floor(n/2) edges, so an
    // overfull graph cannot be Delta-colorable
    if (static_cast<long long>(g.size()) >
        static_cast<long long>(g.max_degree()) * (g.order() / 2))
        return EdgeClass::Class2;
    EdgeColoring search(g, budget);
    return search.color(0, -1) ? EdgeClass::Class1 : EdgeClass::Class2;
}

bool is_konig_egervary(const Graph& g, const Budget& budget) {
    return independence_number(g, budget) + matching_number(g) == g.order();
}

std::string InvariantRecord::csv_header() {
    return "n,m,alpha,mu,mu_star,idom,annihilation,delta,big_delta,core_size,"
           "edge_class,well_covered,konig_egervary,max_ind_set_count";
}

std::string InvariantRecord::csv_row() const {
    std::ostringstream os;
    os << n << ',' << m << ',' << alpha << ',' << mu << ',' << mu_star << ',' << idom << ','
       << annihilation << ',' << delta << ',' << big_delta << ',' << core_size << ','
       << to_string(edge_class) << ',' << (well_covered ? 1 : 0) << ','
       << (konig_egervary ? 1 : 0) << ',' << max_ind_set_count;
    return os.str();
}

std::string InvariantRecord::to_json() const {
    std::ostringstream os;
    os << "{\"n\":" << n << ",\"m\":" << m << ",\"alpha\":" << alpha << ",\"mu\":" << mu
       << ",\"mu_star\":" << mu_star << ",\"idom\":" << idom
       << ",\"annihilation\":" << annihilation << ",\"delta\":" << delta
       << ",\"big_delta\":" << big_delta << ",\"core_size\":" << core_size
       << ",\"edge_class\":\"" << to_string(edge_class) << '"'
       << ",\"well_covered\":" << (well_covered ? "true" : "false")
       << ",\"konig_egervary\":" << (konig_egervary ? "true" : "false")
       << ",\"max_ind_set_count\":" << max_ind_set_count << '}';
    return os.str();
}

namespace {

template <typename F>
auto with_field(const char* field, F&& f) {
    try {
        return f();
    } catch (const BudgetError& e) {
        if (e.field().empty()) throw BudgetError(e.what(), field);
        throw;
    }
}

}  // namespace

InvariantRecord compute_record(const Graph& g, const Budget& budget) {
    InvariantRecord r;
    r.n = g.order();
    r.m = g.size();
    r.delta = g.min_degree();
    r.big_delta = g.max_degree();
    r.mu = matching_number(g);
    r.alpha = with_field("alpha", [&] { return independence_number(g, budget); });
    r.mu_star = with_field("mu_star", [&] { return minimum_maximal_matching_number(g, budget); });
    r.idom = with_field("idom", [&] { return independent_domination_number(g, budget); });
    r.annihilation = annihilation_number(g);
    auto maximum_sets = with_field("max_ind_set_count",
                                   [&] { return all_maximum_independent_sets(g, budget); });
    r.max_ind_set_count = maximum_sets.size();
    VertexSet core_set = maximum_sets.front();
    for (const auto& s : maximum_sets) core_set = set_intersection(core_set, s);
    r.core_size = static_cast<int>(core_set.size());
    r.well_covered = with_field("well_covered", [&] { return is_well_covered(g, budget); });
    r.edge_class = with_field("edge_class", [&] { return edge_chromatic_class(g, budget); });
    r.konig_egervary = r.alpha + r.mu == r.n;

    // consistency gates: these are proven facts, so a failure is a defect
    auto defect = [&](const char* what) {
        throw DefectError(std::string("compute_record: ") + what + " violated for n=" +
                          std::to_string(r.n) + " m=" + std::to_string(r.m));
    };
    if (r.mu_star > r.mu) defect("mu* <= mu");
    if (r.idom > r.alpha) defect("i <= alpha");
    if (r.alpha > r.annihilation) defect("alpha <= a");
    if (!(r.n - 2 * r.mu <= r.n - 2 * r.mu_star && r.n - 2 * r.mu_star <= r.alpha &&
          r.alpha <= r.n - r.mu))
        defect("n-2mu <= n-2mu* <= alpha <= n-mu");
    if (2 * r.annihilation < r.n - 1) defect("a >= floor(n/2)");
    if (r.big_delta >= 1 &&
        static_cast<long long>(r.annihilation) * r.big_delta >
            static_cast<long long>(r.n) * r.big_delta - r.m)
        defect("a <= n - m/Delta");
    if (!core_set.empty() && !is_independent_set(g, core_set)) defect("core independent");
    for (const auto& s : maximum_sets)
        if (!s.contains_all(core_set)) defect("core inside every maximum independent set");
    return r;
}

}  // namespace imlab
