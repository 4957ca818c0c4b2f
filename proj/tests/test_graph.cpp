#include "hexlap/error.hpp"
#include "hexlap/graph.hpp"

#include <doctest.h>

using namespace hexlap;

namespace {

InputError::Kind kind_of(auto&& f) {
    try {
        f();
    } catch (const InputError& e) {
        return e.kind();
    }
    FAIL("expected InputError");
    return InputError::Kind::BadParameter;
}

} // namespace

TEST_SUITE("graph") {

TEST_CASE("make_graph canonicalizes edge order and orientation") {
    const Graph a = make_graph(4, {{3, 2}, {0, 1}, {2, 1}});
    const Graph b = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(a == b);
    CHECK(a.edges().front() == Edge{0, 1});
    CHECK(a.edges().back() == Edge{2, 3});
}

TEST_CASE("make_graph rejects loops, duplicates and bad indices") {
    CHECK(kind_of([] { make_graph(3, {{1, 1}}); }) == InputError::Kind::SelfLoop);
    CHECK(kind_of([] { make_graph(3, {{0, 1}, {1, 0}}); }) == InputError::Kind::DuplicateEdge);
    CHECK(kind_of([] { make_graph(3, {{0, 3}}); }) == InputError::Kind::IndexOutOfRange);
}

TEST_CASE("generators") {
    const Graph c6 = generate(GraphKind::Cycle, 6);
    CHECK(c6.num_vertices() == 6);
    CHECK(c6.num_edges() == 6);
    CHECK(is_bipartite(c6));

    const Graph c5 = generate(GraphKind::Cycle, 5);
    CHECK_FALSE(is_bipartite(c5));

    const Graph p3 = generate(GraphKind::Path, 3);
    CHECK(p3.num_edges() == 2);
    CHECK(is_bipartite(p3));

    const Graph k4 = generate(GraphKind::Complete, 4);
    CHECK(k4.num_edges() == 6);
    CHECK_FALSE(is_bipartite(k4));

    const Graph k2 = generate(GraphKind::Complete, 2);
    CHECK(k2 == generate(GraphKind::Path, 2));

    for (const Graph* g : {&c6, &c5, &p3, &k4, &k2}) CHECK(is_connected(*g));
}

TEST_CASE("generators reject degenerate sizes") {
    CHECK_THROWS_AS(generate(GraphKind::Cycle, 2), InputError);
    CHECK_THROWS_AS(generate(GraphKind::Path, 1), InputError);
    CHECK_THROWS_AS(generate(GraphKind::Complete, 1), InputError);
    CHECK(parse_graph_kind("path") == GraphKind::Path);
    CHECK_THROWS_AS(parse_graph_kind("star"), InputError);
}

TEST_CASE("connectivity and bipartiteness on a disconnected graph") {
    const Graph g = make_graph(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_connected(g));
    CHECK(is_bipartite(g));
    CHECK(kind_of([&] { require_connected_with_edges(g); }) == InputError::Kind::Disconnected);
    CHECK(kind_of([] { require_connected_with_edges(make_graph(1, {})); }) != InputError::Kind::Disconnected);
}

TEST_CASE("degrees and metadata") {
    const Graph p3 = generate(GraphKind::Path, 3);
    CHECK(degrees(p3) == std::vector<std::uint32_t>{1, 2, 1});
    const GraphMeta m = meta_of(p3);
    CHECK(m.num_vertices == 3);
    CHECK(m.num_edges == 2);
    CHECK(m.bipartite);
}

TEST_CASE("edge-list round trip") {
    const Graph c6 = generate(GraphKind::Cycle, 6);
    const std::string text = serialize_edge_list(c6);
    CHECK(text == "6\n0 1\n0 5\n1 2\n2 3\n3 4\n4 5\n");
    CHECK(parse_edge_list(text) == c6);
    CHECK(serialize_edge_list(parse_edge_list(text)) == text);
}

TEST_CASE("parser tolerates comments and blank lines") {
    const Graph g = parse_edge_list("# triangle\n3\n\n0 1\n  # between edges\n1 2\n2 0");
    CHECK(g == generate(GraphKind::Cycle, 3));
}

TEST_CASE("parser errors") {
    CHECK(kind_of([] { parse_edge_list(""); }) == InputError::Kind::VertexCount);
    CHECK(kind_of([] { parse_edge_list("x\n"); }) == InputError::Kind::VertexCount);
    CHECK(kind_of([] { parse_edge_list("3\n0 1 # trailing\n"); }) == InputError::Kind::Malformed);
    CHECK(kind_of([] { parse_edge_list("3\n0 x\n"); }) == InputError::Kind::Malformed);
    CHECK(kind_of([] { parse_edge_list("3\n0\n"); }) == InputError::Kind::Malformed);
    CHECK(kind_of([] { parse_edge_list("3\n0 5\n"); }) == InputError::Kind::IndexOutOfRange);
    CHECK(kind_of([] { parse_edge_list("3\n0 1\n1 0\n"); }) == InputError::Kind::DuplicateEdge);
    CHECK(kind_of([] { parse_edge_list("3\n1 1\n"); }) == InputError::Kind::SelfLoop);
}

} // TEST_SUITE
