#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "cliquecol/colouring.hpp"
#include "cliquecol/graph.hpp"

namespace cliquecol {

inline constexpr std::size_t default_oracle_limit = 12;

// The graph is larger than the exhaustive search was allowed to handle.
class OracleRefusal : public std::length_error {
public:
    using std::length_error::length_error;
};

struct OracleReport {
    std::int64_t value = 0;             // optimum, or 1/0 for a yes/no question
    std::optional<Colouring> colouring; // optimal or certifying colouring
    VertexSet clique;                   // violating clique, when relevant
    std::uint64_t searched = 0;         // partial assignments visited
};

// Exact clique chromatic number by exhaustive search over canonical
// colourings (the first use of colour c+1 comes after the first use of c).
OracleReport exact_clique_chromatic(const Graph& g, std::size_t size_limit = default_oracle_limit);

// Ordinary chromatic number with the same searcher.
OracleReport exact_chromatic_number(const Graph& g, std::size_t size_limit = default_oracle_limit);

// First-fit proper colouring in vertex order with colours 1, 2, ...
Colouring greedy_clique_colouring(const Graph& g);

// Whether some k-colouring leaves no maximum clique (size omega >= 2)
// monochromatic. Vacuously true when omega <= 1.
OracleReport is_k_divisible(const Graph& g, std::size_t k, std::size_t size_limit = default_oracle_limit);

}  // namespace cliquecol
