#include "cliquecol/graph.hpp"

#include <algorithm>
#include <string>

#include "clique_search.hpp"

namespace cliquecol {

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges) : adjacency_(vertex_count)
{
    for (const auto& [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count) {
            throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") has an endpoint outside [0, " + std::to_string(vertex_count) + ")");
        }
        if (u == v) {
            throw GraphError("self-loop at vertex " + std::to_string(u));
        }
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    std::size_t degree_sum = 0;
    for (auto& row : adjacency_) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        degree_sum += row.size();
    }
    edge_count_ = degree_sum / 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    const auto& row = adjacency_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adjacency_.size(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

Graph build_graph(std::size_t vertex_count, std::span<const Edge> edges)
{
    return Graph(vertex_count, edges);
}

std::size_t max_degree(const Graph& g)
{
    std::size_t best = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        best = std::max(best, g.degree(v));
    }
    return best;
}

VertexSet within_distance(const Graph& g, Vertex v, std::size_t radius)
{
    std::vector<std::size_t> depth(g.vertex_count(), static_cast<std::size_t>(-1));
    VertexSet reached{v};
    depth[v] = 0;
    for (std::size_t head = 0; head < reached.size(); ++head) {
        const Vertex u = reached[head];
        if (depth[u] == radius) {
            continue;
        }
        for (Vertex w : g.neighbours(u)) {
            if (depth[w] == static_cast<std::size_t>(-1)) {
                depth[w] = depth[u] + 1;
                reached.push_back(w);
            }
        }
    }
    std::sort(reached.begin(), reached.end());
    return reached;
}

namespace detail {

namespace {

// Calls mark(i, j) for every edge between vertices[i] and vertices[j].
template <class Mark>
void for_each_local_edge(const Graph& g, std::span<const Vertex> vertices, Mark&& mark)
{
    const std::size_t k = vertices.size();
    for (std::size_t i = 0; i < k; ++i) {
        const auto nbrs = g.neighbours(vertices[i]);
        std::size_t j = 0;
        auto it = nbrs.begin();
        while (j < k && it != nbrs.end()) {
            if (vertices[j] < *it) {
                ++j;
            } else if (*it < vertices[j]) {
                ++it;
            } else {
                mark(i, j);
                ++j;
                ++it;
            }
        }
    }
}

}  // namespace

std::vector<Bits> local_adjacency(const Graph& g, std::span<const Vertex> vertices)
{
    std::vector<Bits> rows(vertices.size(), Bits(vertices.size()));
    for_each_local_edge(g, vertices, [&](std::size_t i, std::size_t j) { rows[i].set(j); });
    return rows;
}

std::vector<Word> local_adjacency_words(const Graph& g, std::span<const Vertex> vertices)
{
    std::vector<Word> rows(vertices.size());
    for_each_local_edge(g, vertices, [&](std::size_t i, std::size_t j) { rows[i].set(j); });
    return rows;
}

}  // namespace detail

std::vector<VertexSet> maximal_cliques(const Graph& g)
{
    VertexSet all(g.vertex_count());
    for (Vertex v = 0; v < all.size(); ++v) {
        all[v] = v;
    }
    std::vector<VertexSet> cliques;
    detail::for_each_maximal_clique_in(g, all, [&](const std::vector<std::size_t>& members) {
        if (members.size() < 2) {
            return;
        }
        VertexSet clique(members.begin(), members.end());
        std::sort(clique.begin(), clique.end());
        cliques.push_back(std::move(clique));
    });
    std::sort(cliques.begin(), cliques.end());
    return cliques;
}

std::size_t clique_number(const Graph& g)
{
    if (g.vertex_count() == 0) {
        return 0;
    }
    std::size_t omega = 1;
    for (const auto& clique : maximal_cliques(g)) {
        omega = std::max(omega, clique.size());
    }
    return omega;
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (!g.adjacent(vertices[i], vertices[j])) {
                return false;
            }
        }
    }
    return true;
}

bool is_triangle_free(const Graph& g)
{
    for (const auto& [u, v] : g.edges()) {
        const auto a = g.neighbours(u);
        const auto b = g.neighbours(v);
        auto i = a.begin();
        auto j = b.begin();
        while (i != a.end() && j != b.end()) {
            if (*i < *j) {
                ++i;
            } else if (*j < *i) {
                ++j;
            } else {
                return false;
            }
        }
    }
    return true;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices)
{
    std::vector<Vertex> local(g.vertex_count(), static_cast<Vertex>(-1));
    for (Vertex i = 0; i < vertices.size(); ++i) {
        local[vertices[i]] = i;
    }
    std::vector<Edge> edges;
    for (Vertex i = 0; i < vertices.size(); ++i) {
        for (Vertex w : g.neighbours(vertices[i])) {
            const Vertex j = local[w];
            if (j != static_cast<Vertex>(-1) && i < j) {
                edges.emplace_back(i, j);
            }
        }
    }
    return {Graph(vertices.size(), edges), VertexSet(vertices.begin(), vertices.end())};
}

}  // namespace cliquecol
