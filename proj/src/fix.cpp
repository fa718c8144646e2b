#include "cliquecol/fix.hpp"

#include <set>

#include "cliquecol/oracle.hpp"
#include "fix_engine.hpp"

namespace cliquecol {

Colouring recolour_neighbourhood(const Graph& g, const Colouring& sigma, Vertex v, const Params& params, Rng& rng)
{
    RunStats scratch;
    detail::FixEngine engine(g, params, sigma, rng, scratch, nullptr);
    engine.recolour(v);
    return engine.colouring();
}

Colouring fix(const Graph& g, const Colouring& sigma, Flaw flaw, const Params& params, Rng& rng,
              std::size_t budget, RunStats& stats, FixObserver* observer)
{
    detail::FixEngine engine(g, params, sigma, rng, stats, observer);
    if (!engine.holds(flaw)) {
        throw std::invalid_argument("fix called on " + to_string(flaw) + ", which does not hold");
    }
    engine.fix(flaw, budget);
    return engine.colouring();
}

ColourResult eliminate_flaws(const Graph& g, const Params& params, FixObserver* observer)
{
    Rng rng(params.seed);
    return eliminate_flaws(g, params, rng, observer);
}

ColourResult eliminate_flaws(const Graph& g, const Params& params, Rng& rng, FixObserver* observer)
{
    ColourResult result;
    result.stats.seed = params.seed;
    const std::size_t budget = params.fix_budget.value_or(2 * g.vertex_count());

    detail::FixEngine engine(g, params, all_blank(g.vertex_count()), rng, result.stats, observer);
    for (const Flaw& flaw : engine.all_flaws()) {
        if (engine.holds(flaw)) {
            ++result.stats.root_calls;
            engine.fix(flaw, budget);
        }
    }
    if (!engine.all_flaws().empty()) {
        throw InvariantError("flaw elimination finished with flaws remaining");
    }
    result.colouring = engine.colouring();
    return result;
}

namespace {

bool conflicted(const Graph& g, const Colouring& sigma, Vertex v)
{
    for (Vertex w : g.neighbours(v)) {
        if (sigma[w] == sigma[v]) {
            return true;
        }
    }
    return false;
}

}  // namespace

Colouring extend_colouring(const Graph& g, const Colouring& flawless, const Params& params, Rng& rng,
                           RunStats& stats)
{
    const std::size_t n = g.vertex_count();
    if (params.debug_checks && !find_flaws(g, flawless, params).empty()) {
        throw InvariantError("extend_colouring needs a flawless partial colouring");
    }

    // lists frozen at the flawless colouring
    std::vector<ColourList> lists(n);
    std::vector<bool> extended(n, false);
    Colouring sigma = flawless;
    for (Vertex v = 0; v < n; ++v) {
        if (!flawless[v].is_blank()) {
            continue;
        }
        auto list = available_list(g, flawless, params, v);
        list.erase(list.begin());  // Blank
        if (list.empty()) {
            throw RunFailure("Blank vertex " + std::to_string(v) + " has no colour available", stats);
        }
        sigma[v] = list[rng.uniform_index(list.size())];
        lists[v] = std::move(list);
        extended[v] = true;
    }

    std::set<Vertex> conflicts;
    for (Vertex v = 0; v < n; ++v) {
        if (extended[v] && conflicted(g, sigma, v)) {
            conflicts.insert(v);
        }
    }

    const std::size_t budget = params.extension_budget.value_or(1000 * n);
    while (!conflicts.empty()) {
        if (stats.extension_resamples >= budget) {
            throw BudgetExhausted("extension budget of " + std::to_string(budget) + " resamples exhausted", stats);
        }
        const Vertex v = *conflicts.begin();
        sigma[v] = lists[v][rng.uniform_index(lists[v].size())];
        ++stats.extension_resamples;

        auto refresh = [&](Vertex x) {
            if (extended[x] && conflicted(g, sigma, x)) {
                conflicts.insert(x);
            } else {
                conflicts.erase(x);
            }
        };
        refresh(v);
        for (Vertex w : g.neighbours(v)) {
            refresh(w);
        }
    }
    return sigma;
}

bool below_cutoff(const Params& params)
{
    return params.palette_size <= 2 || params.list_threshold < 2.0;
}

ColourResult clique_colour(const Graph& g, const Params& params, FixObserver* observer)
{
    ColourResult result;
    bool engine_done = false;

    if (params.fallback == FallbackPolicy::disabled || !below_cutoff(params)) {
        for (std::size_t attempt = 0; attempt <= params.max_restarts && !engine_done; ++attempt) {
            Params attempt_params = params;
            attempt_params.seed = params.seed + attempt;
            Rng rng(attempt_params.seed);
            try {
                ColourResult partial = eliminate_flaws(g, attempt_params, rng, observer);
                partial.colouring = extend_colouring(g, partial.colouring, attempt_params, rng, partial.stats);
                result = std::move(partial);
                result.stats.restarts = attempt;
                engine_done = true;
            } catch (const RunFailure& failure) {
                if (attempt == params.max_restarts && params.fallback == FallbackPolicy::disabled) {
                    throw;
                }
                result.stats = failure.stats();
                result.stats.restarts = attempt + 1;
            }
        }
    }

    if (!engine_done) {
        result.colouring = greedy_clique_colouring(g);
        result.stats.fallback_used = true;
        result.stats.seed = params.seed;
    }

    const auto report = verify_full(g, result.colouring);
    if (!report.ok) {
        throw InvariantError("clique_colour produced an invalid clique colouring");
    }
    result.stats.colours_used = report.colours_used;
    return result;
}

}  // namespace cliquecol
