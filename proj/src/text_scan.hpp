#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace cliquecol::detail {

struct Line {
    std::size_t number;  // 1-based
    std::string_view text;
};

class LineScanner {
public:
    explicit LineScanner(std::string_view text) : text_(text) {}

    std::optional<Line> next_nonblank()
    {
        while (pos_ < text_.size()) {
            const auto end = text_.find('\n', pos_);
            const auto stop = end == std::string_view::npos ? text_.size() : end;
            std::string_view line = text_.substr(pos_, stop - pos_);
            pos_ = stop + 1;
            ++number_;
            if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
                return Line{number_, line};
            }
        }
        return std::nullopt;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t number_ = 0;
};

inline std::vector<std::string_view> split_fields(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        i = line.find_first_not_of(" \t\r", i);
        if (i == std::string_view::npos) {
            break;
        }
        auto j = line.find_first_of(" \t\r", i);
        if (j == std::string_view::npos) {
            j = line.size();
        }
        fields.push_back(line.substr(i, j - i));
        i = j;
    }
    return fields;
}

inline std::optional<std::uint64_t> parse_unsigned(std::string_view token)
{
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        return std::nullopt;
    }
    return value;
}

// Exactly `count` unsigned integer fields, or nullopt.
inline std::optional<std::vector<std::uint64_t>> parse_unsigned_fields(std::string_view line, std::size_t count)
{
    const auto fields = split_fields(line);
    if (fields.size() != count) {
        return std::nullopt;
    }
    std::vector<std::uint64_t> values;
    values.reserve(count);
    for (auto field : fields) {
        auto value = parse_unsigned(field);
        if (!value) {
            return std::nullopt;
        }
        values.push_back(*value);
    }
    return values;
}

}  // namespace cliquecol::detail
