#include "cliquecol/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "text_scan.hpp"

namespace cliquecol {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line)
{
}

namespace {

Edge checked_edge(std::size_t line, std::uint64_t u, std::uint64_t v, std::size_t n)
{
    if (u >= n || v >= n) {
        throw ParseError(line, "vertex index out of range [0, " + std::to_string(n) + ")");
    }
    if (u == v) {
        throw ParseError(line, "self-loop at vertex " + std::to_string(u));
    }
    return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

}  // namespace

Graph parse_edge_list(std::string_view text)
{
    detail::LineScanner scanner(text);
    auto header = scanner.next_nonblank();
    if (!header) {
        throw ParseError(0, "empty input: expected header \"n m\"");
    }
    const auto counts = detail::parse_unsigned_fields(header->text, 2);
    if (!counts) {
        throw ParseError(header->number, "expected header \"n m\"");
    }
    const std::size_t n = (*counts)[0];
    const std::size_t m = (*counts)[1];

    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        auto line = scanner.next_nonblank();
        if (!line) {
            throw ParseError(0, "unexpected end of input: " + std::to_string(i) + " of " + std::to_string(m) +
                                    " edges read");
        }
        const auto ends = detail::parse_unsigned_fields(line->text, 2);
        if (!ends) {
            throw ParseError(line->number, "expected \"u v\"");
        }
        edges.push_back(checked_edge(line->number, (*ends)[0], (*ends)[1], n));
    }
    if (auto extra = scanner.next_nonblank()) {
        throw ParseError(extra->number, "more edge lines than the header's m = " + std::to_string(m));
    }
    return Graph(n, edges);
}

std::string serialize_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

Graph parse_dimacs(std::string_view text)
{
    detail::LineScanner scanner(text);
    std::size_t n = 0;
    bool have_header = false;
    std::vector<Edge> edges;
    while (auto line = scanner.next_nonblank()) {
        std::istringstream fields{std::string(line->text)};
        std::string tag;
        fields >> tag;
        if (tag == "c") {
            continue;
        }
        if (tag == "p") {
            std::string format;
            std::size_t m = 0;
            if (have_header || !(fields >> format >> n >> m) || (format != "edge" && format != "col")) {
                throw ParseError(line->number, "expected a single \"p edge n m\" header");
            }
            have_header = true;
            edges.reserve(m);
        } else if (tag == "e") {
            std::uint64_t u = 0;
            std::uint64_t v = 0;
            if (!have_header) {
                throw ParseError(line->number, "edge before \"p edge n m\" header");
            }
            if (!(fields >> u >> v) || u == 0 || v == 0) {
                throw ParseError(line->number, "expected \"e u v\" with 1-based endpoints");
            }
            edges.push_back(checked_edge(line->number, u - 1, v - 1, n));
        } else {
            throw ParseError(line->number, "unrecognised line tag '" + tag + "'");
        }
    }
    if (!have_header) {
        throw ParseError(0, "missing \"p edge n m\" header");
    }
    return Graph(n, edges);
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

Graph read_graph_file(const std::filesystem::path& path)
{
    const std::string text = read_text_file(path);
    if (path.extension() == ".col") {
        return parse_dimacs(text);
    }
    return parse_edge_list(text);
}

}  // namespace cliquecol
