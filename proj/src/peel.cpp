#include "cliquecol/peel.hpp"

#include <algorithm>
#include <cmath>

namespace cliquecol {

double peel_threshold(std::size_t n)
{
    const double x = static_cast<double>(n);
    const double t = n == 0 ? 0.0 : std::sqrt(x * std::log(x));
    return std::max(t, 1.0);
}

PeelDecomposition peel(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    PeelDecomposition out;
    out.threshold = peel_threshold(n);

    std::vector<bool> alive(n, true);
    std::vector<std::size_t> degree(n);
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
    }
    auto remove = [&](Vertex v) {
        alive[v] = false;
        for (Vertex w : g.neighbours(v)) {
            --degree[w];
        }
    };

    // Degrees only fall, so a vertex skipped once never qualifies again and a
    // single ascending sweep finds the lowest-index eligible vertex each time.
    for (Vertex v = 0; v < n; ++v) {
        if (!alive[v] || static_cast<double>(degree[v]) < out.threshold) {
            continue;
        }
        VertexSet cls;
        for (Vertex w : g.neighbours(v)) {
            if (alive[w]) {
                cls.push_back(w);
            }
        }
        remove(v);
        for (Vertex w : cls) {
            remove(w);
        }
        out.centers.push_back(v);
        out.classes.push_back(std::move(cls));
    }

    VertexSet rest;
    for (Vertex v = 0; v < n; ++v) {
        if (alive[v]) {
            rest.push_back(v);
        }
    }
    auto induced = induced_subgraph(g, rest);
    out.residual = std::move(induced.graph);
    out.residual_to_original = std::move(induced.to_parent);
    return out;
}

ColourResult colour_sqrt(const Graph& g, const Params& params, FixObserver* observer)
{
    const auto decomposition = peel(g);
    const auto k = static_cast<std::int32_t>(decomposition.centers.size());

    const Params residual_params = with_delta(params, max_degree(decomposition.residual));
    ColourResult residual = clique_colour(decomposition.residual, residual_params, observer);

    ColourResult result;
    result.stats = residual.stats;
    result.colouring = all_blank(g.vertex_count());
    for (std::int32_t i = 0; i < k; ++i) {
        result.colouring[decomposition.centers[i]] = Colour::of(0);
        for (Vertex w : decomposition.classes[i]) {
            result.colouring[w] = Colour::of(i + 1);
        }
    }
    for (std::size_t local = 0; local < residual.colouring.size(); ++local) {
        // residual colours start at 1, so the shift lands on k+1 and above
        result.colouring[decomposition.residual_to_original[local]] = Colour::of(residual.colouring[local].index() + k);
    }

    const auto report = verify_full(g, result.colouring);
    if (!report.ok) {
        throw InvariantError("colour_sqrt produced an invalid clique colouring");
    }
    result.stats.colours_used = report.colours_used;
    return result;
}

}  // namespace cliquecol
