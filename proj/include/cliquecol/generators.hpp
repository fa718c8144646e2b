#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "cliquecol/graph.hpp"

namespace cliquecol {

// Erdos-Renyi G(n, p): every pair independently with probability p.
// Pairs are visited as (0,1), (0,2), ..., (n-2,n-1), one draw each.
Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);

// Random bipartite graph with sides {0..left-1} and {left..left+right-1};
// each cross pair present with probability p. Triangle free by construction.
Graph gen_bipartite_gnp(std::size_t left, std::size_t right, double p, std::uint64_t seed);

enum class NamedKind { complete, cycle, path, star, petersen, complete_bipartite };

NamedKind parse_named_kind(std::string_view name);
std::string_view to_string(NamedKind kind);

// Size parameters per kind:
//   complete n, cycle n (n >= 3), path n, star leaves, petersen (none),
//   complete_bipartite a b.
Graph gen_named(NamedKind kind, std::span<const std::size_t> sizes);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph petersen_graph();
Graph complete_bipartite_graph(std::size_t a, std::size_t b);

}  // namespace cliquecol
