#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hexlap {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..N-1.
///
/// Edges are canonical: smaller endpoint first, sorted lexicographically, so
/// two graphs compare equal iff they have identical vertex counts and edge
/// sets. Construct through make_graph() or the generators; the class never
/// holds a loop, a duplicate or an out-of-range endpoint.
class Graph {
public:
    Graph() = default;

    std::size_t num_vertices() const noexcept { return num_vertices_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend Graph make_graph(std::size_t num_vertices, std::vector<Edge> edges);
    friend Graph make_graph_unchecked(std::size_t num_vertices, std::vector<Edge> edges);

    std::size_t num_vertices_ = 0;
    std::vector<Edge> edges_;
};

struct GraphMeta {
    std::uint64_t num_vertices = 0;
    std::uint64_t num_edges = 0;
    bool bipartite = false;

    friend bool operator==(const GraphMeta&, const GraphMeta&) = default;
};

enum class GraphKind { Cycle, Path, Complete };

/// Validates and canonicalizes. Throws InputError with kind IndexOutOfRange,
/// SelfLoop or DuplicateEdge.
Graph make_graph(std::size_t num_vertices, std::vector<Edge> edges);

// Canonicalizes without validation; for generators whose output is simple by
// construction.
Graph make_graph_unchecked(std::size_t num_vertices, std::vector<Edge> edges);

Graph generate(GraphKind kind, std::size_t m);
GraphKind parse_graph_kind(std::string_view name);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
std::vector<std::uint32_t> degrees(const Graph& g);
std::vector<std::vector<Vertex>> adjacency(const Graph& g);
GraphMeta meta_of(const Graph& g);

// Rejects graphs the hexagonal theory does not cover: N < 2, no edges, or
// more than one component.
void require_connected_with_edges(const Graph& g);

Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

} // namespace hexlap
