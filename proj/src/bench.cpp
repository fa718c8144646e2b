#include "cliquecol/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cliquecol/generators.hpp"
#include "text_scan.hpp"

namespace cliquecol {

Pipeline parse_pipeline(std::string_view name)
{
    if (name == "theorem") return Pipeline::theorem;
    if (name == "sqrt") return Pipeline::sqrt;
    throw std::invalid_argument("unknown mode '" + std::string(name) + "' (expected theorem or sqrt)");
}

std::string_view to_string(Pipeline pipeline)
{
    return pipeline == Pipeline::theorem ? "theorem" : "sqrt";
}

ColourResult run_pipeline(const Graph& g, Pipeline pipeline, double epsilon, std::uint64_t seed)
{
    const Params params = make_params(max_degree(g), epsilon, seed);
    return pipeline == Pipeline::theorem ? clique_colour(g, params) : colour_sqrt(g, params);
}

nlohmann::json stats_to_json(const RunStats& stats)
{
    return {
        {"root_calls", stats.root_calls},
        {"recolour_steps", stats.recolour_steps},
        {"extension_resamples", stats.extension_resamples},
        {"fallback_used", stats.fallback_used},
        {"colours_used", stats.colours_used},
        {"restarts", stats.restarts},
        {"seed", stats.seed},
    };
}

nlohmann::json peel_to_json(const PeelDecomposition& decomposition)
{
    nlohmann::json sizes = nlohmann::json::array();
    for (const auto& cls : decomposition.classes) {
        sizes.push_back(cls.size());
    }
    return {
        {"k", decomposition.centers.size()},
        {"threshold", decomposition.threshold},
        {"centers", decomposition.centers},
        {"class_sizes", sizes},
        {"residual_vertices", decomposition.residual.vertex_count()},
        {"residual_max_degree", max_degree(decomposition.residual)},
    };
}

namespace {

std::string format_real(double x)
{
    std::ostringstream out;
    out << x;
    return out.str();
}

struct Cell {
    std::size_t n;
    double p;
    double epsilon;
    std::uint64_t seed;
};

bool random_family(const std::string& family)
{
    return family == "gnp" || family == "bipartite";
}

Graph make_instance(const BenchSpec& spec, const Cell& cell, std::string& descriptor)
{
    if (spec.family == "gnp") {
        descriptor = "gnp_n" + std::to_string(cell.n) + "_p" + format_real(cell.p);
        return gen_gnp(cell.n, cell.p, cell.seed);
    }
    if (spec.family == "bipartite") {
        descriptor = "bipartite_n" + std::to_string(cell.n) + "_p" + format_real(cell.p);
        return gen_bipartite_gnp(cell.n / 2, cell.n - cell.n / 2, cell.p, cell.seed);
    }
    const NamedKind kind = parse_named_kind(spec.family);
    if (kind == NamedKind::petersen || kind == NamedKind::complete_bipartite) {
        throw std::invalid_argument("bench family '" + spec.family + "' is not size-parameterised");
    }
    descriptor = spec.family + "_n" + std::to_string(cell.n);
    const std::size_t sizes[] = {cell.n};
    return gen_named(kind, sizes);
}

BenchRow run_cell(const BenchSpec& spec, const Cell& cell)
{
    BenchRow row;
    const Graph g = make_instance(spec, cell, row.descriptor);
    const auto start = std::chrono::steady_clock::now();
    const ColourResult result = run_pipeline(g, spec.pipeline, cell.epsilon, cell.seed);
    const auto stop = std::chrono::steady_clock::now();

    const auto check = verify_full(g, result.colouring);
    if (!check.ok || check.colours_used != result.stats.colours_used) {
        throw InvariantError("bench colouring failed re-verification on " + row.descriptor);
    }

    const Params params = make_params(max_degree(g), cell.epsilon, cell.seed);
    row.n = g.vertex_count();
    row.delta = params.delta;
    row.epsilon = cell.epsilon;
    row.q = params.palette_size;
    row.colours_used = check.colours_used;
    row.fallback_used = result.stats.fallback_used;
    row.recolour_steps = result.stats.recolour_steps;
    row.extension_resamples = result.stats.extension_resamples;
    row.wall_ms = spec.timing ? std::chrono::duration<double, std::milli>(stop - start).count() : 0.0;
    row.seed = cell.seed;
    return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchSpec& spec)
{
    if (spec.seeds.empty()) {
        throw std::invalid_argument("bench needs at least one seed");
    }
    if (spec.sizes.empty() || spec.epsilons.empty()) {
        throw std::invalid_argument("bench needs at least one size and one epsilon");
    }
    const bool random = random_family(spec.family);
    if (random && spec.probabilities.empty()) {
        throw std::invalid_argument("bench needs at least one edge probability");
    }

    std::vector<Cell> cells;
    const std::vector<double> no_probability{0.0};
    for (std::size_t n : spec.sizes) {
        for (double p : random ? spec.probabilities : no_probability) {
            for (double epsilon : spec.epsilons) {
                for (std::uint64_t seed : spec.seeds) {
                    cells.push_back({n, p, epsilon, seed});
                }
            }
        }
    }

    std::vector<BenchRow> rows(cells.size());
    const std::size_t workers = std::max<std::size_t>(1, std::min(spec.jobs, cells.size()));
    if (workers == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            rows[i] = run_cell(spec, cells[i]);
        }
        return rows;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = next++; i < cells.size(); i = next++) {
                    rows[i] = run_cell(spec, cells[i]);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    for (const auto& error : errors) {
        if (error) {
            std::rethrow_exception(error);
        }
    }
    return rows;
}

std::string bench_to_csv(const std::vector<BenchRow>& rows)
{
    std::ostringstream out;
    out << bench_csv_header << '\n';
    for (const auto& r : rows) {
        out << r.descriptor << ',' << r.n << ',' << r.delta << ',' << format_real(r.epsilon) << ',' << r.q << ','
            << r.colours_used << ',' << (r.fallback_used ? "true" : "false") << ',' << r.recolour_steps << ','
            << r.extension_resamples << ',' << format_real(r.wall_ms) << ',' << r.seed << '\n';
    }
    return out.str();
}

std::vector<std::uint64_t> parse_integer_list(std::string_view text)
{
    std::vector<std::uint64_t> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const auto item = text.substr(start, end - start);
        const auto dots = item.find("..");
        if (dots == std::string_view::npos) {
            const auto value = detail::parse_unsigned(item);
            if (!value) {
                throw std::invalid_argument("bad integer '" + std::string(item) + "'");
            }
            values.push_back(*value);
        } else {
            const auto lo = detail::parse_unsigned(item.substr(0, dots));
            const auto hi = detail::parse_unsigned(item.substr(dots + 2));
            if (!lo || !hi || *lo > *hi) {
                throw std::invalid_argument("bad range '" + std::string(item) + "'");
            }
            for (auto v = *lo; v <= *hi; ++v) {
                values.push_back(v);
            }
        }
        start = end + 1;
    }
    return values;
}

std::vector<double> parse_real_list(std::string_view text)
{
    std::vector<double> values;
    std::istringstream in{std::string(text)};
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() || !std::isfinite(value)) {
            throw std::invalid_argument("bad number '" + item + "'");
        }
        values.push_back(value);
    }
    if (values.empty()) {
        throw std::invalid_argument("empty number list");
    }
    return values;
}

}  // namespace cliquecol
