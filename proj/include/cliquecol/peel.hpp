#pragma once

#include <cstddef>
#include <vector>

#include "cliquecol/colouring.hpp"
#include "cliquecol/fix.hpp"
#include "cliquecol/graph.hpp"

namespace cliquecol {

// Greedy peeling: while some remaining vertex has at least `threshold`
// remaining neighbours, remove the lowest-index such vertex (a center)
// together with those neighbours (its class).
struct PeelDecomposition {
    VertexSet centers;
    std::vector<VertexSet> classes;  // classes[i] belongs to centers[i]
    Graph residual;
    VertexSet residual_to_original;
    double threshold = 0.0;  // max(sqrt(n ln n), 1), n the original vertex count
};

double peel_threshold(std::size_t n);

PeelDecomposition peel(const Graph& g);

// Centers get colour 0, class i gets colour i (1-based), and the residual is
// coloured by clique_colour with its colours shifted above k.
ColourResult colour_sqrt(const Graph& g, const Params& params, FixObserver* observer = nullptr);

}  // namespace cliquecol
