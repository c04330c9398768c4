#include "imlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace imlab {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(std::popcount(mask)));
    while (mask != 0) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    VertexSet s;
    s.members_ = std::move(out);  // already sorted and unique
    return s;
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::contains_all(const VertexSet& other) const {
    return std::includes(members_.begin(), members_.end(),
                         other.members_.begin(), other.members_.end());
}

std::uint64_t VertexSet::to_mask() const {
    std::uint64_t mask = 0;
    for (Vertex v : members_) {
        if (v < 0 || v >= 64) throw Error("VertexSet::to_mask: member out of 0..63");
        mask |= std::uint64_t{1} << v;
    }
    return mask;
}

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i > 0) os << ", ";
        os << members_[i];
    }
    os << '}';
    return os.str();
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.members().begin(), a.members().end(),
                   b.members().begin(), b.members().end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.members().begin(), a.members().end(),
                          b.members().begin(), b.members().end(),
                          std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_difference(a.members().begin(), a.members().end(),
                        b.members().begin(), b.members().end(),
                        std::back_inserter(out));
    return VertexSet(std::move(out));
}

Matching::Matching(std::vector<EdgePair> edges) : edges_(std::move(edges)) {
    for (auto& [u, v] : edges_) {
        if (u == v) throw Error("Matching: loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    std::vector<Vertex> endpoints;
    endpoints.reserve(edges_.size() * 2);
    for (const auto& [u, v] : edges_) {
        endpoints.push_back(u);
        endpoints.push_back(v);
    }
    std::sort(endpoints.begin(), endpoints.end());
    if (std::adjacent_find(endpoints.begin(), endpoints.end()) != endpoints.end())
        throw Error("Matching: edges share an endpoint");
}

VertexSet Matching::saturated() const {
    std::vector<Vertex> endpoints;
    endpoints.reserve(edges_.size() * 2);
    for (const auto& [u, v] : edges_) {
        endpoints.push_back(u);
        endpoints.push_back(v);
    }
    return VertexSet(std::move(endpoints));
}

bool Matching::saturates(Vertex v) const {
    for (const auto& [a, b] : edges_)
        if (a == v || b == v) return true;
    return false;
}

bool Matching::saturates_all(const VertexSet& s) const {
    return saturated().contains_all(s);
}

std::string Matching::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (i > 0) os << ", ";
        os << '(' << edges_[i].first << ',' << edges_[i].second << ')';
    }
    os << '}';
    return os.str();
}

Matching combine_disjoint(const Matching& a, const Matching& b) {
    std::vector<EdgePair> edges = a.edges();
    edges.insert(edges.end(), b.edges().begin(), b.edges().end());
    try {
        return Matching(std::move(edges));
    } catch (const Error& e) {
        throw DefectError(std::string("combine_disjoint: matchings overlap: ") + e.what());
    }
}

GraphBuilder::GraphBuilder(int n) : n_(n) {
    if (n < 0) throw GraphError("graph order must be non-negative");
    adj_.resize(static_cast<std::size_t>(n));
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
    if (u == v)
        throw GraphError("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ") rejected");
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") has endpoint outside 0.." + std::to_string(n_ - 1));
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
}

Graph GraphBuilder::build() {
    Graph g;
    g.adj_ = std::move(adj_);
    int twice_m = 0;
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        twice_m += static_cast<int>(nbrs.size());
    }
    g.m_ = twice_m / 2;
    adj_.clear();
    n_ = 0;
    return g;
}

Graph Graph::from_edge_list(int n, std::span<const EdgePair> edges) {
    GraphBuilder b(n);
    for (const auto& [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

Graph Graph::from_edge_list(int n, std::initializer_list<EdgePair> edges) {
    return from_edge_list(n, std::span<const EdgePair>(edges.begin(), edges.size()));
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    if (v < 0 || v >= order()) throw Error("vertex " + std::to_string(v) + " out of range");
    return adj_[static_cast<std::size_t>(v)];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

std::vector<int> Graph::degrees() const {
    std::vector<int> d(adj_.size());
    for (std::size_t v = 0; v < adj_.size(); ++v) d[v] = static_cast<int>(adj_[v].size());
    return d;
}

int Graph::min_degree() const {
    int best = 0;
    for (std::size_t v = 0; v < adj_.size(); ++v) {
        int d = static_cast<int>(adj_[v].size());
        if (v == 0 || d < best) best = d;
    }
    return best;
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& nbrs : adj_) best = std::max(best, static_cast<int>(nbrs.size()));
    return best;
}

std::vector<EdgePair> Graph::edge_list() const {
    std::vector<EdgePair> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < order(); ++u)
        for (Vertex v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;  // sorted: u ascending, neighbor lists sorted
}

VertexSet Graph::vertex_set() const {
    std::vector<Vertex> all(static_cast<std::size_t>(order()));
    std::iota(all.begin(), all.end(), 0);
    return VertexSet(std::move(all));
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
    require_valid_for(g, s, "open_neighborhood");
    std::vector<Vertex> out;
    for (Vertex v : s.members())
        out.insert(out.end(), g.neighbors(v).begin(), g.neighbors(v).end());
    return VertexSet(std::move(out));
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    return set_union(s, open_neighborhood(g, s));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    require_valid_for(g, s, "induced_subgraph");
    InducedSubgraph result;
    result.old_to_new.assign(static_cast<std::size_t>(g.order()), -1);
    result.new_to_old = s.members();
    for (std::size_t i = 0; i < result.new_to_old.size(); ++i)
        result.old_to_new[static_cast<std::size_t>(result.new_to_old[i])] = static_cast<int>(i);
    GraphBuilder b(static_cast<int>(s.size()));
    for (Vertex u : s.members())
        for (Vertex v : g.neighbors(u))
            if (u < v && result.old_to_new[static_cast<std::size_t>(v)] >= 0)
                b.add_edge(result.old_to_new[static_cast<std::size_t>(u)],
                           result.old_to_new[static_cast<std::size_t>(v)]);
    result.graph = b.build();
    return result;
}

Graph max_degree_subgraph(const Graph& g) {
    int delta = g.max_degree();
    std::vector<Vertex> keep;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == delta) keep.push_back(v);
    return induced_subgraph(g, VertexSet(std::move(keep))).graph;
}

bool is_connected(const Graph& g) {
    int n = g.order();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

bool has_cycle(const Graph& g) {
    // A forest has m = n - (number of components); anything more has a cycle.
    int n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int components = 0;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        ++components;
        std::vector<Vertex> stack{start};
        seen[static_cast<std::size_t>(start)] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return g.size() > n - components;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
    require_valid_for(g, s, "is_independent_set");
    const auto& mem = s.members();
    for (std::size_t i = 0; i < mem.size(); ++i)
        for (std::size_t j = i + 1; j < mem.size(); ++j)
            if (g.adjacent(mem[i], mem[j])) return false;
    return true;
}

void require_valid_for(const Graph& g, const VertexSet& s, const char* what) {
    for (Vertex v : s.members())
        if (v < 0 || v >= g.order())
            throw ContractError(std::string(what) + ": vertex " + std::to_string(v) +
                                " outside 0.." + std::to_string(g.order() - 1));
}

void require_valid_matching(const Graph& g, const Matching& m, const char* what) {
    for (const auto& [u, v] : m.edges()) {
        if (u < 0 || v >= g.order())
            throw ContractError(std::string(what) + ": edge endpoint out of range");
        if (!g.adjacent(u, v))
            throw ContractError(std::string(what) + ": edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ") not present in graph");
    }
}

}  // namespace imlab
