#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliquecol/colouring.hpp"
#include "cliquecol/graph.hpp"
#include "cliquecol/random.hpp"

namespace cliquecol {

struct FixLogEntry {
    Flaw flaw;
    std::size_t step;  // index of the recolouring step spent on this flaw

    bool operator==(const FixLogEntry&) const = default;
};

struct RunStats {
    std::size_t root_calls = 0;
    std::size_t recolour_steps = 0;
    std::vector<FixLogEntry> fix_log;
    std::size_t extension_resamples = 0;
    bool fallback_used = false;
    std::size_t colours_used = 0;
    // failed engine attempts before the result; each retry reseeds with seed + attempt
    std::size_t restarts = 0;
    std::uint64_t seed = 0;

    bool operator==(const RunStats&) const = default;
};

// The randomized engine gave up (step or resample budget, or an empty list).
class RunFailure : public std::runtime_error {
public:
    RunFailure(const std::string& what, RunStats stats) : std::runtime_error(what), stats_(std::move(stats)) {}
    const RunStats& stats() const { return stats_; }

private:
    RunStats stats_;
};

class BudgetExhausted : public RunFailure {
public:
    using RunFailure::RunFailure;
};

// A checked invariant did not hold; always a bug.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Instrumentation hooks for the recolouring engine. Default no-ops.
class FixObserver {
public:
    virtual ~FixObserver() = default;

    // `u` is about to receive a uniform draw from `list`, the ignoring list
    // L^center_u evaluated against `before`.
    virtual void on_draw(const Colouring& before, Vertex center, Vertex u, const ColourList& list)
    {
        (void)before, (void)center, (void)u, (void)list;
    }
    virtual void on_recolour(const Colouring& after, Vertex center) { (void)after, (void)center; }
    virtual void on_fix_enter(const Flaw& flaw, const Colouring& sigma) { (void)flaw, (void)sigma; }
    virtual void on_fix_exit(const Flaw& flaw, const Colouring& sigma) { (void)flaw, (void)sigma; }
};

struct ColourResult {
    Colouring colouring;
    RunStats stats;
};

// Redraws every u in N(v), ascending, uniformly from L^v_u computed against
// the input colouring. Other vertices keep their colours.
Colouring recolour_neighbourhood(const Graph& g, const Colouring& sigma, Vertex v, const Params& params, Rng& rng);

// One call of the recursive flaw fixer started at `flaw` (which must hold).
// Spends at most `budget` recolouring steps; BudgetExhausted otherwise.
Colouring fix(const Graph& g, const Colouring& sigma, Flaw flaw, const Params& params, Rng& rng,
              std::size_t budget, RunStats& stats, FixObserver* observer = nullptr);

// From the all-Blank colouring, root-fixes every initially present flaw that
// still holds when reached. Result has no flaws. Single attempt.
ColourResult eliminate_flaws(const Graph& g, const Params& params, FixObserver* observer = nullptr);
ColourResult eliminate_flaws(const Graph& g, const Params& params, Rng& rng, FixObserver* observer = nullptr);

// Colours every Blank vertex of a flawless colouring from its list
// L_v \ {Blank}, resampling the lowest-index conflicting vertex until no
// newly coloured vertex shares a colour with a neighbour.
Colouring extend_colouring(const Graph& g, const Colouring& flawless, const Params& params, Rng& rng,
                           RunStats& stats);

// Palettes too small for the flaw machinery to mean anything.
bool below_cutoff(const Params& params);

// Full clique colouring: flaw elimination plus extension with reseeded
// restarts, or the greedy fallback. Output always passes verify_full.
ColourResult clique_colour(const Graph& g, const Params& params, FixObserver* observer = nullptr);

}  // namespace cliquecol
