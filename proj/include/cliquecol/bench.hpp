#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cliquecol/colouring.hpp"
#include "cliquecol/fix.hpp"
#include "cliquecol/graph.hpp"
#include "cliquecol/peel.hpp"

namespace cliquecol {

enum class Pipeline { theorem, sqrt };

Pipeline parse_pipeline(std::string_view name);
std::string_view to_string(Pipeline pipeline);

// Runs the chosen pipeline on g with parameters derived from its max degree.
ColourResult run_pipeline(const Graph& g, Pipeline pipeline, double epsilon, std::uint64_t seed);

nlohmann::json stats_to_json(const RunStats& stats);
nlohmann::json peel_to_json(const PeelDecomposition& decomposition);

// Families: gnp, bipartite (random, n/2 + n/2 sides), complete, cycle, path, star.
struct BenchSpec {
    std::string family = "gnp";
    std::vector<std::size_t> sizes;
    std::vector<double> probabilities{0.1};  // random families only
    std::vector<double> epsilons{1.0};
    std::vector<std::uint64_t> seeds;
    Pipeline pipeline = Pipeline::theorem;
    bool timing = false;  // wall_ms is 0 unless set, keeping the CSV byte-stable
    std::size_t jobs = 1;
};

struct BenchRow {
    std::string descriptor;
    std::size_t n = 0;
    std::size_t delta = 0;
    double epsilon = 0.0;
    std::size_t q = 0;
    std::size_t colours_used = 0;
    bool fallback_used = false;
    std::size_t recolour_steps = 0;
    std::size_t extension_resamples = 0;
    double wall_ms = 0.0;
    std::uint64_t seed = 0;
};

inline constexpr std::string_view bench_csv_header =
    "descriptor,n,delta,epsilon,q,colours_used,fallback_used,recolour_steps,extension_resamples,wall_ms,seed";

// One row per (instance, seed), in spec order: size, probability, epsilon, seed.
// Each emitted colouring is re-verified; InvariantError if one fails.
std::vector<BenchRow> run_bench(const BenchSpec& spec);

std::string bench_to_csv(const std::vector<BenchRow>& rows);

// "1,2,5" or ranges "1..5" (inclusive), mixable: "1..3,10".
std::vector<std::uint64_t> parse_integer_list(std::string_view text);
std::vector<double> parse_real_list(std::string_view text);

}  // namespace cliquecol
