#include "cliquecol/colouring.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "clique_search.hpp"

namespace cliquecol {

std::size_t colours_used(const Colouring& colouring)
{
    std::set<Colour> seen;
    for (Colour c : colouring) {
        if (!c.is_blank()) {
            seen.insert(c);
        }
    }
    return seen.size();
}

Params make_params(std::size_t delta, double epsilon, std::uint64_t seed)
{
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw std::invalid_argument("epsilon must be a positive finite number");
    }
    Params params;
    params.epsilon = epsilon;
    params.seed = seed;
    return with_delta(params, delta);
}

Params with_delta(const Params& params, std::size_t delta)
{
    Params out = params;
    out.delta = delta;
    std::size_t q = 0;
    if (delta >= 3) {
        const double d = static_cast<double>(delta);
        q = static_cast<std::size_t>(std::floor((1.0 + params.epsilon) * d / std::log(d)));
    }
    out.palette_size = std::max<std::size_t>(q, 2);
    out.list_threshold = std::pow(static_cast<double>(delta), params.epsilon / 2.0);
    return out;
}

std::string to_string(const Flaw& flaw)
{
    return std::string(flaw.kind == FlawKind::B ? "B" : "Z") + "_" + std::to_string(flaw.vertex);
}

namespace {

bool in_palette(Colour c, const Params& params)
{
    return !c.is_blank() && c.index() >= 1 && static_cast<std::size_t>(c.index()) <= params.palette_size;
}

ColourList list_from_used(const std::vector<bool>& used)
{
    ColourList list{Blank};
    for (std::size_t c = 1; c < used.size(); ++c) {
        if (!used[c]) {
            list.push_back(Colour::of(static_cast<std::int32_t>(c)));
        }
    }
    return list;
}

bool contains(const ColourList& list, Colour c)
{
    return std::binary_search(list.begin(), list.end(), c);
}

}  // namespace

ColourList available_list(const Graph& g, const Colouring& sigma, const Params& params, Vertex v)
{
    std::vector<bool> used(params.palette_size + 1, false);
    for (Vertex w : g.neighbours(v)) {
        if (in_palette(sigma[w], params)) {
            used[sigma[w].index()] = true;
        }
    }
    return list_from_used(used);
}

VertexSet blank_support(const Graph& g, const Colouring& sigma, const Params& params, Vertex v, Colour c)
{
    VertexSet support;
    if (c.is_blank()) {
        return support;
    }
    for (Vertex w : g.neighbours(v)) {
        if (sigma[w].is_blank() && contains(available_list(g, sigma, params, w), c)) {
            support.push_back(w);
        }
    }
    return support;
}

ColourList ignoring_list(const Graph& g, const Colouring& sigma, const Params& params, Vertex v, Vertex u)
{
    if (!g.adjacent(v, u)) {
        throw std::invalid_argument("ignoring_list: vertex " + std::to_string(u) + " is not a neighbour of " +
                                    std::to_string(v));
    }
    std::vector<bool> used(params.palette_size + 1, false);
    for (Vertex w : g.neighbours(u)) {
        // v itself lies in N(u) \ N(v)
        if (!g.adjacent(v, w) && in_palette(sigma[w], params)) {
            used[sigma[w].index()] = true;
        }
    }
    return list_from_used(used);
}

std::size_t blank_mass(const Graph& g, const Colouring& sigma, const Params& params, Vertex v)
{
    std::size_t mass = 0;
    for (Colour c : available_list(g, sigma, params, v)) {
        mass += blank_support(g, sigma, params, v, c).size();
    }
    return mass;
}

bool flaw_holds(const Graph& g, const Colouring& sigma, const Params& params, Flaw flaw)
{
    const std::size_t list_size = available_list(g, sigma, params, flaw.vertex).size();
    if (flaw.kind == FlawKind::B) {
        return list_too_small(list_size, params.list_threshold);
    }
    return blank_mass_too_large(blank_mass(g, sigma, params, flaw.vertex), list_size, params.list_threshold);
}

std::vector<Flaw> find_flaws(const Graph& g, const Colouring& sigma, const Params& params,
                             std::optional<FlawScope> scope)
{
    auto candidates = [&](std::size_t radius) {
        if (scope) {
            return within_distance(g, scope->center, radius);
        }
        VertexSet all(g.vertex_count());
        for (Vertex v = 0; v < all.size(); ++v) {
            all[v] = v;
        }
        return all;
    };

    std::vector<Flaw> flaws;
    for (FlawKind kind : {FlawKind::B, FlawKind::Z}) {
        const auto radius = scope ? (kind == FlawKind::B ? scope->b_radius : scope->z_radius) : 0;
        for (Vertex v : candidates(radius)) {
            const Flaw flaw{kind, v};
            if (flaw_holds(g, sigma, params, flaw)) {
                flaws.push_back(flaw);
            }
        }
    }
    return flaws;
}

namespace {

// Some vertex outside `clique` is adjacent to all of it.
bool extendable(const Graph& g, const VertexSet& clique)
{
    const auto smallest = *std::min_element(clique.begin(), clique.end(), [&](Vertex a, Vertex b) {
        return g.degree(a) < g.degree(b);
    });
    for (Vertex w : g.neighbours(smallest)) {
        if (std::binary_search(clique.begin(), clique.end(), w)) {
            continue;
        }
        if (std::all_of(clique.begin(), clique.end(), [&](Vertex x) { return x == w || g.adjacent(w, x); })) {
            return true;
        }
    }
    return false;
}

// A monochromatic maximal clique of colour c is a maximal clique of the
// subgraph induced by colour class c that no outside vertex extends.
VerifyReport find_monochromatic_clique(const Graph& g, const Colouring& sigma)
{
    VertexSet order;
    order.reserve(sigma.size());
    for (Vertex v = 0; v < sigma.size(); ++v) {
        if (!sigma[v].is_blank()) {
            order.push_back(v);
        }
    }
    // grouped by colour, ascending vertex within a colour
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return sigma[a] < sigma[b]; });

    VerifyReport report;
    VertexSet members;
    for (std::size_t start = 0; start < order.size();) {
        std::size_t stop = start;
        while (stop < order.size() && sigma[order[stop]] == sigma[order[start]]) {
            ++stop;
        }
        ++report.colours_used;
        if (report.ok && stop - start >= 2) {
            members.assign(order.begin() + static_cast<std::ptrdiff_t>(start),
                           order.begin() + static_cast<std::ptrdiff_t>(stop));
            std::optional<VertexSet> witness;
            detail::for_each_maximal_clique_in(g, members, [&](const std::vector<std::size_t>& local) {
                if (witness || local.size() < 2) {
                    return;
                }
                VertexSet clique;
                clique.reserve(local.size());
                for (std::size_t i : local) {
                    clique.push_back(members[i]);
                }
                std::sort(clique.begin(), clique.end());
                if (!extendable(g, clique)) {
                    witness = std::move(clique);
                }
            });
            if (witness) {
                report.ok = false;
                report.violation = Violation::monochromatic_clique;
                report.witness = std::move(*witness);
            }
        }
        start = stop;
    }
    return report;
}

VerifyReport size_mismatch(const Colouring& sigma)
{
    VerifyReport report;
    report.ok = false;
    report.violation = Violation::size_mismatch;
    report.colours_used = colours_used(sigma);
    return report;
}

}  // namespace

VerifyReport verify_partial(const Graph& g, const Colouring& sigma)
{
    if (sigma.size() != g.vertex_count()) {
        return size_mismatch(sigma);
    }
    return find_monochromatic_clique(g, sigma);
}

VerifyReport verify_full(const Graph& g, const Colouring& sigma)
{
    if (sigma.size() != g.vertex_count()) {
        return size_mismatch(sigma);
    }
    for (Vertex v = 0; v < sigma.size(); ++v) {
        if (sigma[v].is_blank()) {
            VerifyReport report;
            report.ok = false;
            report.violation = Violation::blank_vertex;
            report.witness = {v};
            report.colours_used = colours_used(sigma);
            return report;
        }
    }
    return find_monochromatic_clique(g, sigma);
}

}  // namespace cliquecol
