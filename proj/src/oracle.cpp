#include "cliquecol/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace cliquecol {

namespace {

void check_limit(const Graph& g, std::size_t size_limit)
{
    if (g.vertex_count() > size_limit) {
        throw OracleRefusal("exhaustive search refused: " + std::to_string(g.vertex_count()) +
                            " vertices exceeds the limit of " + std::to_string(size_limit));
    }
}

// Colours vertices 0..n-1 in order with 1..colours so that no hyperedge is
// monochromatic. A hyperedge is checked once its largest vertex is coloured.
class HyperedgeColouringSearch {
public:
    HyperedgeColouringSearch(std::size_t n, const std::vector<VertexSet>& hyperedges)
        : closing_(n), colouring_(n, Blank)
    {
        for (const auto& edge : hyperedges) {
            closing_[edge.back()].push_back(&edge);
        }
    }

    std::optional<Colouring> solve(std::size_t colours)
    {
        colours_ = static_cast<std::int32_t>(colours);
        if (assign(0, 0)) {
            return colouring_;
        }
        return std::nullopt;
    }

    std::uint64_t searched() const { return searched_; }

private:
    bool assign(Vertex v, std::int32_t highest)
    {
        if (v == colouring_.size()) {
            return true;
        }
        const std::int32_t top = std::min(colours_, highest + 1);
        for (std::int32_t c = 1; c <= top; ++c) {
            ++searched_;
            colouring_[v] = Colour::of(c);
            if (closes_cleanly(v) && assign(v + 1, std::max(highest, c))) {
                return true;
            }
        }
        colouring_[v] = Blank;
        return false;
    }

    bool closes_cleanly(Vertex v) const
    {
        for (const VertexSet* edge : closing_[v]) {
            const Colour c = colouring_[v];
            if (std::all_of(edge->begin(), edge->end(), [&](Vertex x) { return colouring_[x] == c; })) {
                return false;
            }
        }
        return true;
    }

    std::vector<std::vector<const VertexSet*>> closing_;
    Colouring colouring_;
    std::int32_t colours_ = 0;
    std::uint64_t searched_ = 0;
};

OracleReport minimum_colours(const Graph& g, const std::vector<VertexSet>& hyperedges)
{
    OracleReport report;
    const std::size_t n = g.vertex_count();
    if (n == 0) {
        report.colouring = Colouring{};
        return report;
    }
    HyperedgeColouringSearch search(n, hyperedges);
    for (std::size_t t = hyperedges.empty() ? 1 : 2; t <= n; ++t) {
        if (auto found = search.solve(t)) {
            report.value = static_cast<std::int64_t>(t);
            report.colouring = std::move(found);
            break;
        }
    }
    report.searched = search.searched();
    return report;
}

}  // namespace

OracleReport exact_clique_chromatic(const Graph& g, std::size_t size_limit)
{
    check_limit(g, size_limit);
    return minimum_colours(g, maximal_cliques(g));
}

OracleReport exact_chromatic_number(const Graph& g, std::size_t size_limit)
{
    check_limit(g, size_limit);
    std::vector<VertexSet> edges;
    for (const auto& [u, v] : g.edges()) {
        edges.push_back({u, v});
    }
    return minimum_colours(g, edges);
}

Colouring greedy_clique_colouring(const Graph& g)
{
    Colouring colouring = all_blank(g.vertex_count());
    std::vector<bool> taken;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        taken.assign(g.degree(v) + 2, false);
        for (Vertex w : g.neighbours(v)) {
            const Colour c = colouring[w];
            if (!c.is_blank() && static_cast<std::size_t>(c.index()) < taken.size()) {
                taken[c.index()] = true;
            }
        }
        std::int32_t c = 1;
        while (taken[c]) {
            ++c;
        }
        colouring[v] = Colour::of(c);
    }
    return colouring;
}

OracleReport is_k_divisible(const Graph& g, std::size_t k, std::size_t size_limit)
{
    check_limit(g, size_limit);
    OracleReport report;
    const auto cliques = maximal_cliques(g);
    std::size_t omega = 0;
    for (const auto& clique : cliques) {
        omega = std::max(omega, clique.size());
    }
    if (omega < 2) {
        report.value = 1;
        report.colouring = Colouring(g.vertex_count(), Colour::of(1));
        return report;
    }
    std::vector<VertexSet> maximum;
    std::copy_if(cliques.begin(), cliques.end(), std::back_inserter(maximum),
                 [&](const VertexSet& c) { return c.size() == omega; });

    HyperedgeColouringSearch search(g.vertex_count(), maximum);
    if (auto found = k == 0 ? std::nullopt : search.solve(k)) {
        report.value = 1;
        report.colouring = std::move(found);
    } else {
        report.value = 0;
    }
    report.searched = search.searched();
    return report;
}

}  // namespace cliquecol
