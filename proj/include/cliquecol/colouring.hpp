#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cliquecol/graph.hpp"

namespace cliquecol {

// A vertex colour: Blank (uncoloured) or a non-negative colour index. The
// main pipeline uses indices 1..q; the peeling decomposition also uses 0.
class Colour {
public:
    constexpr Colour() = default;

    static constexpr Colour blank() { return Colour(); }
    static constexpr Colour of(std::int32_t index) { return Colour(index); }

    constexpr bool is_blank() const { return value_ < 0; }
    constexpr std::int32_t index() const { return value_; }

    // Blank orders before every colour index.
    constexpr auto operator<=>(const Colour&) const = default;

private:
    constexpr explicit Colour(std::int32_t value) : value_(value) {}

    std::int32_t value_ = -1;
};

inline constexpr Colour Blank = Colour::blank();

using Colouring = std::vector<Colour>;
using ColourList = std::vector<Colour>;  // sorted, Blank first when present

inline Colouring all_blank(std::size_t n) { return Colouring(n, Blank); }

// Distinct non-Blank colours in use.
std::size_t colours_used(const Colouring& colouring);

enum class FallbackPolicy {
    greedy,    // small palettes and exhausted budgets fall back to greedy colouring
    disabled,  // always run the flaw engine and surface its failures
};

struct Params {
    double epsilon = 1.0;
    std::size_t delta = 0;
    std::size_t palette_size = 2;  // q; colours 1..q
    double list_threshold = 1.0;   // L; B_v fires below it
    std::uint64_t seed = 0;
    std::optional<std::size_t> fix_budget;        // recolour steps per root call; default 2n
    std::optional<std::size_t> extension_budget;  // resamples; default 1000n
    std::size_t max_restarts = 10;
    FallbackPolicy fallback = FallbackPolicy::greedy;
    bool debug_checks = false;
};

// q = floor((1+eps) * delta / ln delta) for delta >= 3, clamped to >= 2;
// L = delta^(eps/2). Throws std::invalid_argument for eps <= 0.
Params make_params(std::size_t delta, double epsilon, std::uint64_t seed);

// Same policy fields, palette and threshold recomputed for another max degree.
Params with_delta(const Params& params, std::size_t delta);

enum class FlawKind : std::uint8_t { B, Z };

// B_v: too few available colours at v. Z_v: too much blank mass around v.
struct Flaw {
    FlawKind kind;
    Vertex vertex;

    // all B flaws by vertex, then all Z flaws by vertex
    auto operator<=>(const Flaw&) const = default;
};

std::string to_string(const Flaw& flaw);

// L_v: Blank plus the palette colours not used on N(v).
ColourList available_list(const Graph& g, const Colouring& sigma, const Params& params, Vertex v);

// T_{v,c}: Blank neighbours w of v with c in L_w; empty for c = Blank.
VertexSet blank_support(const Graph& g, const Colouring& sigma, const Params& params, Vertex v, Colour c);

// L^v_u: Blank plus the palette colours not used on N(u) \ N(v). Requires u in N(v).
ColourList ignoring_list(const Graph& g, const Colouring& sigma, const Params& params, Vertex v, Vertex u);

// Sum over c in L_v of |T_{v,c}|.
std::size_t blank_mass(const Graph& g, const Colouring& sigma, const Params& params, Vertex v);

inline bool list_too_small(std::size_t list_size, double threshold)
{
    return static_cast<double>(list_size) < threshold;
}

inline bool blank_mass_too_large(std::size_t mass, std::size_t list_size, double threshold)
{
    return static_cast<double>(mass) > threshold * static_cast<double>(list_size) / 10.0;
}

bool flaw_holds(const Graph& g, const Colouring& sigma, const Params& params, Flaw flaw);

struct FlawScope {
    Vertex center;
    std::size_t b_radius = 2;
    std::size_t z_radius = 3;
};

// Every flaw that holds (within scope when given), in flaw order.
std::vector<Flaw> find_flaws(const Graph& g, const Colouring& sigma, const Params& params,
                             std::optional<FlawScope> scope = std::nullopt);

enum class Violation { none, blank_vertex, monochromatic_clique, size_mismatch };

struct VerifyReport {
    bool ok = true;
    Violation violation = Violation::none;
    VertexSet witness;  // offending clique, or the Blank vertex
    std::size_t colours_used = 0;
};

// No maximal clique of size >= 2 is monochromatic in a non-Blank colour.
VerifyReport verify_partial(const Graph& g, const Colouring& sigma);

// No Blank vertex and no monochromatic maximal clique of size >= 2.
VerifyReport verify_full(const Graph& g, const Colouring& sigma);

// Text form: one "v colour" line per vertex, "B" for Blank.
std::string serialize_colouring(const Colouring& colouring);
Colouring parse_colouring(std::string_view text);

}  // namespace cliquecol
