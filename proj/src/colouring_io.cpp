#include <limits>
#include <sstream>

#include "cliquecol/colouring.hpp"
#include "cliquecol/graph_io.hpp"
#include "text_scan.hpp"

namespace cliquecol {

std::string serialize_colouring(const Colouring& colouring)
{
    std::ostringstream out;
    for (std::size_t v = 0; v < colouring.size(); ++v) {
        out << v << ' ';
        if (colouring[v].is_blank()) {
            out << 'B';
        } else {
            out << colouring[v].index();
        }
        out << '\n';
    }
    return out.str();
}

Colouring parse_colouring(std::string_view text)
{
    detail::LineScanner scanner(text);
    std::vector<std::optional<Colour>> slots;
    while (auto line = scanner.next_nonblank()) {
        const auto fields = detail::split_fields(line->text);
        if (fields.size() != 2) {
            throw ParseError(line->number, "expected \"v colour\"");
        }
        const auto v = detail::parse_unsigned(fields[0]);
        if (!v || *v >= std::numeric_limits<Vertex>::max()) {
            throw ParseError(line->number, "bad vertex index");
        }
        Colour colour = Blank;
        if (fields[1] != "B") {
            const auto index = detail::parse_unsigned(fields[1]);
            if (!index || *index > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max())) {
                throw ParseError(line->number, "bad colour '" + std::string(fields[1]) + "'");
            }
            colour = Colour::of(static_cast<std::int32_t>(*index));
        }
        if (*v >= slots.size()) {
            slots.resize(*v + 1);
        }
        if (slots[*v]) {
            throw ParseError(line->number, "vertex " + std::to_string(*v) + " coloured twice");
        }
        slots[*v] = colour;
    }
    Colouring colouring;
    colouring.reserve(slots.size());
    for (std::size_t v = 0; v < slots.size(); ++v) {
        if (!slots[v]) {
            throw ParseError(0, "no colour given for vertex " + std::to_string(v));
        }
        colouring.push_back(*slots[v]);
    }
    return colouring;
}

}  // namespace cliquecol
