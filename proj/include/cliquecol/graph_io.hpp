#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cliquecol/graph.hpp"

namespace cliquecol {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);

    // 1-based line of the offending input; 0 when the input ended early.
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Edge-list text: a header "n m", then m lines "u v" with 0-based endpoints.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

// DIMACS colouring format: "c" comments, "p edge n m", then "e u v" with 1-based endpoints.
Graph parse_dimacs(std::string_view text);

// Reads a file, using the DIMACS reader for ".col" and the edge-list reader otherwise.
Graph read_graph_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace cliquecol
