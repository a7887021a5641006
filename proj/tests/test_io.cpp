#include <doctest.h>

#include <sstream>

#include "w4/generators.hpp"
#include "w4/io.hpp"

using namespace w4;

TEST_CASE("read_graph parses the basic format") {
    Multigraph g = read_graph_string("3 2\n0 1\n1 2\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.edge(0) == std::pair{0, 1});
    CHECK(g.edge(1) == std::pair{1, 2});
}

TEST_CASE("comments and blank lines are skipped") {
    Multigraph g = read_graph_string(
        "# a triangle\n\n3 3\n0 1\n# middle comment\n1 2\n\n0 2\n");
    CHECK(g == gen::complete(3));
}

TEST_CASE("endpoint order and edge order are canonicalized") {
    Multigraph g = read_graph_string("4 3\n3 2\n1 0\n2 0\n");
    CHECK(g.edge(0) == std::pair{0, 1});
    CHECK(g.edge(1) == std::pair{0, 2});
    CHECK(g.edge(2) == std::pair{2, 3});
}

TEST_CASE("parallel edges survive the round trip") {
    Multigraph g = read_graph_string("2 3\n0 1\n0 1\n1 0\n");
    CHECK(g.edge_count() == 3);
    CHECK(write_graph_string(g) == "2 3\n0 1\n0 1\n0 1\n");
}

TEST_CASE("write then read is the identity") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        Multigraph g = gen::random_multigraph(9, 14, 3, seed);
        CHECK(read_graph_string(write_graph_string(g)) == g);
    }
    Multigraph empty(0, {});
    CHECK(read_graph_string(write_graph_string(empty)) == empty);
    Multigraph isolated(4, {});
    CHECK(read_graph_string(write_graph_string(isolated)) == isolated);
}

TEST_CASE("serialization is canonical and newline-terminated") {
    std::string text = write_graph_string(gen::path(3));
    CHECK(text == "3 2\n0 1\n1 2\n");
    CHECK(text.back() == '\n');
}

TEST_CASE("malformed inputs raise ParseError") {
    const char* bad[] = {
        "",                      // no header
        "x y\n",                 // non-numeric header
        "3\n",                   // missing edge count
        "-1 0\n",                // negative vertex count
        "2 1\n",                 // missing edge line
        "2 1\n0\n",              // missing endpoint
        "2 1\n0 1 2\n",          // extra token on edge line
        "2 1\n0 2\n",            // endpoint out of range
        "2 1\n1 1\n",            // self-loop
        "2 1\n0 1\n0 1\n",       // trailing edge line
        "2 1\n0 1\njunk\n",      // trailing garbage
        "2 a\n",                 // non-numeric edge count
        "2 1\n0 1.5\n",          // non-integer endpoint
        "99999999999999999999 1\n0 1\n", // overflow
    };
    for (const char* text : bad) {
        CAPTURE(text);
        CHECK_THROWS_AS(read_graph_string(text), ParseError);
    }
}

TEST_CASE("parse errors carry line numbers") {
    try {
        read_graph_string("# header\n3 1\n0 3\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
}

TEST_CASE("stream round trip") {
    Multigraph g = gen::wheel(5);
    std::stringstream ss;
    write_graph(ss, g);
    CHECK(read_graph(ss) == g);
}
