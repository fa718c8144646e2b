#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cliquecol {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built;
// every neighbour list is sorted and duplicate free.
class Graph {
public:
    Graph() = default;

    // Parallel edges collapse; self-loops and out-of-range endpoints throw GraphError.
    Graph(std::size_t vertex_count, std::span<const Edge> edges);

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }
    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
    bool adjacent(Vertex u, Vertex v) const;

    // Edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<VertexSet> adjacency_;
    std::size_t edge_count_ = 0;
};

Graph build_graph(std::size_t vertex_count, std::span<const Edge> edges);

std::size_t max_degree(const Graph& g);

// All vertices at shortest-path distance at most `radius` from v, ascending.
VertexSet within_distance(const Graph& g, Vertex v, std::size_t radius);

// Inclusion-wise maximal cliques with at least two vertices. Each clique is
// sorted and the list is ordered lexicographically.
std::vector<VertexSet> maximal_cliques(const Graph& g);

// Size of a largest clique; 0 for the empty graph, 1 for edgeless graphs.
std::size_t clique_number(const Graph& g);

bool is_clique(const Graph& g, std::span<const Vertex> vertices);

bool is_triangle_free(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    // local index -> vertex of the parent graph
    VertexSet to_parent;
};

// `vertices` must be sorted and duplicate free.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace cliquecol
