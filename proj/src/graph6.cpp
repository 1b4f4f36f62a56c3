#include "qturan/graph6.hpp"

namespace qturan {

namespace {

constexpr int bias = 63;

bool printable(char c)
{
    return c >= 63 && c <= 126;
}

} // namespace

Graph parse_graph6(std::string_view text)
{
    std::size_t base = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) {
        text.remove_prefix(header.size());
        base = header.size();
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw FormatError("empty graph6 string", base);

    std::size_t pos = 0;
    auto take = [&](std::size_t count) -> std::uint64_t {
        std::uint64_t value = 0;
        for (std::size_t k = 0; k < count; ++k, ++pos) {
            if (pos >= text.size())
                throw FormatError("truncated order field", base + pos);
            if (!printable(text[pos]))
                throw FormatError("bad header byte", base + pos);
            value = (value << 6) | static_cast<std::uint64_t>(text[pos] - bias);
        }
        return value;
    };

    std::uint64_t n = 0;
    if (!printable(text[0]))
        throw FormatError("bad header byte", base);
    if (text[0] != '~') {
        n = take(1);
    } else if (text.size() > 1 && text[1] == '~') {
        pos = 2;
        n = take(6);
    } else {
        pos = 1;
        n = take(3);
    }
    if (n > graph6_max_order)
        throw FormatError("order " + std::to_string(n) + " exceeds cap", base);

    const std::uint64_t bit_count = n * (n == 0 ? 0 : n - 1) / 2;
    const std::uint64_t byte_count = (bit_count + 5) / 6;
    if (text.size() - pos < byte_count)
        throw FormatError("truncated bit payload", base + text.size());
    if (text.size() - pos > byte_count)
        throw FormatError("trailing bytes after payload", base + pos + byte_count);

    GraphBuilder b(static_cast<std::size_t>(n));
    std::uint64_t k = 0;
    const std::size_t payload = pos;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const std::size_t at = payload + static_cast<std::size_t>(k / 6);
            const char c = text[at];
            if (!printable(c))
                throw FormatError("byte outside graph6 range", base + at);
            if (((c - bias) >> (5 - k % 6)) & 1)
                b.add_edge(i, j);
        }
    }
    if (bit_count % 6 != 0) {
        const std::size_t at = payload + byte_count - 1;
        const char c = text[at];
        if (!printable(c))
            throw FormatError("byte outside graph6 range", base + at);
        const int pad = static_cast<int>(6 - bit_count % 6);
        if ((c - bias) & ((1 << pad) - 1))
            throw FormatError("nonzero padding bits", base + at);
    }
    return std::move(b).build();
}

std::string to_graph6(const Graph& g)
{
    const std::uint64_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + bias));
    } else {
        const int groups = n <= 258047 ? 3 : 6;
        out.append(groups == 3 ? "~" : "~~");
        for (int s = groups - 1; s >= 0; --s)
            out.push_back(static_cast<char>(((n >> (6 * s)) & 63) + bias));
    }
    int acc = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + bias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + bias));
    return out;
}

} // namespace qturan
