#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qturan/families.hpp"
#include "qturan/graph6.hpp"
#include "qturan/search.hpp"

using namespace qturan;

TEST_CASE("hand-built graph6 vectors")
{
    CHECK(parse_graph6("@") == complete_graph(1));
    CHECK(parse_graph6("A_") == complete_graph(2));
    CHECK(parse_graph6("Bw") == complete_graph(3));
    CHECK(to_graph6(complete_graph(2)) == "A_");
    CHECK(to_graph6(empty_graph(5)) == "D??");
    CHECK(to_graph6(Graph(0)) == "?");
}

TEST_CASE("encoder matches the format-definition oracle")
{
    for (const Graph& g : {petersen_graph(), turan(13, 4), wheel(1, 7), cycle_graph(62), complete_graph(17)})
        CHECK(to_graph6(g) == oracle::graph6_encode(g));
}

TEST_CASE("trailing newline and header are accepted")
{
    CHECK(parse_graph6("Bw\n") == complete_graph(3));
    CHECK(parse_graph6(">>graph6<<Bw") == complete_graph(3));
}

TEST_CASE("malformed graph6 reports byte offsets")
{
    auto offset_of = [](std::string_view text) -> std::optional<std::size_t> {
        try {
            (void)parse_graph6(text);
        } catch (const FormatError& e) {
            return e.offset();
        }
        return std::nullopt;
    };
    CHECK(offset_of("") == std::size_t{0});
    CHECK(offset_of(" ") == std::size_t{0});
    CHECK(offset_of("B") == std::size_t{1});
    // K2 needs one bit; any low bit in the single payload byte is padding.
    CHECK(offset_of("A`") == std::size_t{1});
    CHECK(offset_of("A_?") == std::size_t{2});
    CHECK(offset_of("B\x7f").has_value());
}

TEST_CASE("long form for orders above 62")
{
    for (std::size_t n : {63u, 64u, 100u, 300u}) {
        const Graph g = cycle_graph(n);
        const std::string code = to_graph6(g);
        CHECK(code[0] == '~');
        CHECK(parse_graph6(code) == g);
    }
    CHECK(to_graph6(empty_graph(63)).substr(0, 4) == "~??~");
}

TEST_CASE("round trip over every graph up to order 8")
{
    for (std::size_t n = 0; n <= 8; ++n)
        for (const Graph& g : *enumerate_graphs(n))
            REQUIRE(parse_graph6(to_graph6(g)) == g);
}
