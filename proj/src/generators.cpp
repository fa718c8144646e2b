#include "cliquecol/generators.hpp"

#include <string>
#include <vector>

#include "cliquecol/random.hpp"

namespace cliquecol {

namespace {

void check_probability(double p)
{
    if (!(p >= 0.0 && p <= 1.0)) {
        throw GraphError("edge probability " + std::to_string(p) + " outside [0, 1]");
    }
}

}  // namespace

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed)
{
    check_probability(p);
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (rng.bernoulli(p)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, edges);
}

Graph gen_bipartite_gnp(std::size_t left, std::size_t right, double p, std::uint64_t seed)
{
    check_probability(p);
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < left; ++u) {
        for (std::size_t j = 0; j < right; ++j) {
            if (rng.bernoulli(p)) {
                edges.emplace_back(u, static_cast<Vertex>(left + j));
            }
        }
    }
    return Graph(left + right, edges);
}

NamedKind parse_named_kind(std::string_view name)
{
    if (name == "complete") return NamedKind::complete;
    if (name == "cycle") return NamedKind::cycle;
    if (name == "path") return NamedKind::path;
    if (name == "star") return NamedKind::star;
    if (name == "petersen") return NamedKind::petersen;
    if (name == "complete_bipartite") return NamedKind::complete_bipartite;
    throw GraphError("unknown graph kind '" + std::string(name) + "'");
}

std::string_view to_string(NamedKind kind)
{
    switch (kind) {
    case NamedKind::complete: return "complete";
    case NamedKind::cycle: return "cycle";
    case NamedKind::path: return "path";
    case NamedKind::star: return "star";
    case NamedKind::petersen: return "petersen";
    case NamedKind::complete_bipartite: return "complete_bipartite";
    }
    return "unknown";
}

Graph gen_named(NamedKind kind, std::span<const std::size_t> sizes)
{
    const std::size_t expected = kind == NamedKind::petersen ? 0 : kind == NamedKind::complete_bipartite ? 2 : 1;
    if (sizes.size() != expected) {
        throw GraphError(std::string(to_string(kind)) + " takes " + std::to_string(expected) + " size parameter(s)");
    }
    for (std::size_t s : sizes) {
        if (s == 0) {
            throw GraphError("graph size parameters must be positive");
        }
    }
    switch (kind) {
    case NamedKind::complete: return complete_graph(sizes[0]);
    case NamedKind::cycle: return cycle_graph(sizes[0]);
    case NamedKind::path: return path_graph(sizes[0]);
    case NamedKind::star: return star_graph(sizes[0]);
    case NamedKind::petersen: return petersen_graph();
    case NamedKind::complete_bipartite: return complete_bipartite_graph(sizes[0], sizes[1]);
    }
    throw GraphError("unknown graph kind");
}

Graph complete_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

Graph cycle_graph(std::size_t n)
{
    if (n < 3) {
        throw GraphError("a cycle needs at least 3 vertices");
    }
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    }
    return Graph(n, edges);
}

Graph path_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) {
        edges.emplace_back(v, v + 1);
    }
    return Graph(n, edges);
}

Graph star_graph(std::size_t leaves)
{
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v) {
        edges.emplace_back(0, v);
    }
    return Graph(leaves + 1, edges);
}

Graph petersen_graph()
{
    // outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, 5 + i);
    }
    return Graph(10, edges);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u) {
        for (std::size_t j = 0; j < b; ++j) {
            edges.emplace_back(u, static_cast<Vertex>(a + j));
        }
    }
    return Graph(a + b, edges);
}

}  // namespace cliquecol
