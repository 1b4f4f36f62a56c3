#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qturan/graph.hpp"

namespace qturan {

/// Malformed graph6 input. `offset` is the byte position of the problem.
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset)
    {
    }
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Largest order accepted by the parser.
inline constexpr std::size_t graph6_max_order = 100000;

/// Parse one graph6 line. A trailing newline and an optional ">>graph6<<"
/// header are accepted.
Graph parse_graph6(std::string_view text);

/// Encode as graph6 (short form for n <= 62, "~" long forms otherwise).
std::string to_graph6(const Graph& g);

} // namespace qturan
