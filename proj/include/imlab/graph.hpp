#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "imlab/errors.hpp"

namespace imlab {

using Vertex = int;
using EdgePair = std::pair<Vertex, Vertex>;  // stored with first < second

// Set of vertex indices in canonical form: sorted ascending, no duplicates.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<Vertex> members);
    VertexSet(std::initializer_list<Vertex> members);

    static VertexSet from_mask(std::uint64_t mask);

    const std::vector<Vertex>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Vertex v) const;
    bool contains_all(const VertexSet& other) const;
    std::uint64_t to_mask() const;  // requires all members < 64

    std::string to_string() const;  // "{0, 2, 4}"

    bool operator==(const VertexSet&) const = default;
    auto operator<=>(const VertexSet& other) const {
        return members_ <=> other.members_;
    }

private:
    std::vector<Vertex> members_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

// Set of pairwise vertex-disjoint edges, canonical form: each edge (u,v)
// with u < v, edges sorted ascending.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<EdgePair> edges);  // throws on shared endpoints

    const std::vector<EdgePair>& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    VertexSet saturated() const;
    bool saturates(Vertex v) const;
    bool saturates_all(const VertexSet& s) const;

    std::string to_string() const;  // "{(0,1), (2,3)}"

    bool operator==(const Matching&) const = default;

private:
    std::vector<EdgePair> edges_;
};

// Joins two matchings; throws DefectError if they share an endpoint.
Matching combine_disjoint(const Matching& a, const Matching& b);

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    // Duplicate edges collapse; loops and endpoints >= n are rejected.
    static Graph from_edge_list(int n, std::span<const EdgePair> edges);
    static Graph from_edge_list(int n, std::initializer_list<EdgePair> edges);

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return m_; }

    const std::vector<Vertex>& neighbors(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const;
    int degree(Vertex v) const;
    std::vector<int> degrees() const;
    int min_degree() const;  // 0 for the graph with no vertices
    int max_degree() const;
    bool is_regular() const { return order() == 0 || min_degree() == max_degree(); }

    std::vector<EdgePair> edge_list() const;  // sorted ascending
    VertexSet vertex_set() const;

    bool operator==(const Graph&) const = default;

private:
    friend class GraphBuilder;
    std::vector<std::vector<Vertex>> adj_;  // sorted neighbor lists
    int m_ = 0;
};

// Incremental construction helper used by parsers and generators.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    void add_edge(Vertex u, Vertex v);  // validates, collapses duplicates
    Graph build();

private:
    int n_;
    std::vector<std::vector<Vertex>> adj_;
};

VertexSet open_neighborhood(const Graph& g, const VertexSet& s);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new;  // size g.order(), -1 where absent
    std::vector<Vertex> new_to_old;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Subgraph induced by the vertices of maximum degree.
Graph max_degree_subgraph(const Graph& g);

bool is_connected(const Graph& g);
bool has_cycle(const Graph& g);
bool is_independent_set(const Graph& g, const VertexSet& s);

// Validates that s only references vertices of g; throws ContractError.
void require_valid_for(const Graph& g, const VertexSet& s, const char* what);

// Validates that m is a matching inside g; throws ContractError.
void require_valid_matching(const Graph& g, const Matching& m, const char* what);

}  // namespace imlab
