#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sgc4/constructions.hpp"
#include "sgc4/io.hpp"

using namespace sgc4;
using namespace sgc4::test;

TEST_CASE("serialization is canonical and round-trips") {
    SignedGraph g = gallery(GalleryId::Tag::what);
    std::string text = serialize(g);
    CHECK(text.substr(0, 5) == "sg 1\n");
    CHECK(parse_signed_graph(text) == g);
    CHECK(serialize(parse_signed_graph(text)) == text);

    std::mt19937 rng(8001);
    for (int it = 0; it < 100; it++) {
        SignedGraph r = random_signed(rng, 1 + static_cast<int>(rng() % 9), 0.4);
        CHECK(parse_signed_graph(serialize(r)) == r);
    }
    for (int it = 0; it < 50; it++) {
        SignedMultiGraph m = random_multigraph(rng, 1 + static_cast<int>(rng() % 7), 0.5);
        CHECK(parse_signed_multigraph(serialize(m)) == m);
    }
}

TEST_CASE("multigraph text lists the positive edge of a parallel pair first") {
    SignedMultiGraph m = tilde(make_signed_graph(2, {{0, 1, Sign::neg}}));
    CHECK(serialize(m) == "sgm 1\nn 2\ne 0 1 +\ne 0 1 -\n");
}

TEST_CASE("parser tolerates comments and odd spacing") {
    const char* text =
        "# a comment\n"
        "\n"
        "  sg   1   \n"
        "n 4\n"
        "# interior comment\n"
        "e 0 1 +\n"
        "\te 1   2 +\n"
        "e 2 3 +\n"
        "e 0 3 -   # trailing comment\n";
    CHECK(parse_signed_graph(text) == cycle_graph(4, true));
}

TEST_CASE("parse errors carry line numbers and the right codes") {
    auto code_of = [](const std::string& text) {
        try {
            parse_signed_graph(text);
        } catch (const GraphError& e) {
            return e.code;
        }
        return Err::internal_assertion;
    };
    CHECK(code_of("") == Err::parse_error);
    CHECK(code_of("sg 2\nn 1\n") == Err::parse_error);           // unknown version
    CHECK(code_of("graph 1\nn 1\n") == Err::parse_error);        // bad magic
    CHECK(code_of("sg 1\ne 0 1 +\nn 2\n") == Err::parse_error);  // edge before n
    CHECK(code_of("sg 1\nn 2\nn 2\n") == Err::parse_error);      // n twice
    CHECK(code_of("sg 1\nn 2\ne 0 1 *\n") == Err::parse_error);  // bad sign
    CHECK(code_of("sg 1\nn 2\ne 0 1\n") == Err::parse_error);    // missing sign
    CHECK(code_of("sg 1\nn 2\ne 0 1 + junk\n") == Err::parse_error);
    CHECK(code_of("sg 1\nn x\n") == Err::parse_error);
    CHECK(code_of("sg 1\nn -3\n") == Err::parse_error);
    CHECK(code_of("sg 1\nn 2\nz 0 1 +\n") == Err::parse_error);  // unknown directive
    CHECK(code_of("sg 1\nn 2\ne 1 1 +\n") == Err::loop_edge);
    CHECK(code_of("sg 1\nn 2\ne 0 2 +\n") == Err::vertex_out_of_range);
    CHECK(code_of("sg 1\nn 2\ne 0 1 +\ne 0 1 -\n") == Err::duplicate_edge);
    CHECK(code_of("sgm 1\nn 2\ne 0 1 +\n") == Err::parse_error);  // sgm into parse_signed_graph

    try {
        parse_signed_graph("sg 1\nn 2\ne 0 1 *\n");
        CHECK(false);
    } catch (const GraphError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }

    // the multigraph parser accepts both magics, a pair may disagree only in sign
    CHECK(parse_signed_multigraph("sg 1\nn 2\ne 0 1 +\n").edges.size() == 1);
    CHECK_THROWS_AS(parse_signed_multigraph("sgm 1\nn 2\ne 0 1 +\ne 0 1 +\n"), GraphError);
}

TEST_CASE("parse_any_graph dispatches on the magic") {
    AnyGraph a = parse_any_graph("sg 1\nn 1\n");
    CHECK(std::holds_alternative<SignedGraph>(a));
    AnyGraph b = parse_any_graph("sgm 1\nn 2\ne 0 1 +\ne 0 1 -\n");
    CHECK(std::holds_alternative<SignedMultiGraph>(b));
}

TEST_CASE("read_text_file reports missing files") {
    CHECK_THROWS_AS(read_text_file("/nonexistent/graph.sg"), GraphError);
}
