#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cliquecol/colouring.hpp"
#include "cliquecol/fix.hpp"
#include "cliquecol/graph.hpp"
#include "cliquecol/random.hpp"

namespace cliquecol::detail {

// Incremental state for the flaw fixer. Keeps, per vertex, how many
// neighbours hold each palette colour and the resulting available set as a
// bitmask, so both flaw predicates are cheap to re-evaluate after a
// neighbourhood is redrawn.
class FixEngine {
public:
    FixEngine(const Graph& g, const Params& params, Colouring start, Rng& rng, RunStats& stats,
              FixObserver* observer);

    const Colouring& colouring() const { return sigma_; }

    bool holds(Flaw flaw) const;
    std::vector<Flaw> all_flaws() const;

    // First flaw in flaw order among B_w with dist(w, center) <= 2 and Z_w
    // with dist(w, center) <= 3.
    std::optional<Flaw> first_flaw_near(Vertex center);

    // One recolouring step on N(center).
    void recolour(Vertex center);

    // Iterative form of the recursive fixer; `budget` caps recolour steps.
    void fix(Flaw flaw, std::size_t budget);

private:
    std::size_t list_size(Vertex v) const { return list_size_[v]; }
    const std::uint64_t* available_bits(Vertex v) const { return &available_[v * words_]; }
    std::size_t blank_mass(Vertex v) const;
    bool in_palette(Colour c) const;
    void set_colour(Vertex u, Colour c);
    void check_partial() const;

    const Graph& g_;
    const Params& params_;
    Colouring sigma_;
    Rng& rng_;
    RunStats& stats_;
    FixObserver* observer_;

    std::size_t palette_;
    std::size_t words_;
    std::vector<std::uint32_t> counts_;     // n x (q+1): neighbours holding colour c
    std::vector<std::uint64_t> available_;  // n x words_: bit c set iff c in L_v \ {Blank}
    std::vector<std::uint32_t> list_size_;  // |L_v|, Blank included

    // scratch
    std::vector<std::uint32_t> stamp_;
    std::vector<std::uint8_t> depth_;
    std::uint32_t epoch_ = 0;
    std::vector<Vertex> ball_;
    std::vector<std::uint32_t> local_counts_;
    std::vector<Colour> drawn_;
    ColourList list_;
};

}  // namespace cliquecol::detail
