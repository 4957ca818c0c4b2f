#include "hexlap/graph.hpp"

#include "hexlap/error.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <sstream>

namespace hexlap {

namespace {

void canonicalize(std::vector<Edge>& edges) {
    for (auto& [u, v] : edges) {
        if (v < u) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
}

std::string edge_str(const Edge& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

} // namespace

Graph make_graph_unchecked(std::size_t num_vertices, std::vector<Edge> edges) {
    canonicalize(edges);
    Graph g;
    g.num_vertices_ = num_vertices;
    g.edges_ = std::move(edges);
    return g;
}

Graph make_graph(std::size_t num_vertices, std::vector<Edge> edges) {
    if (num_vertices > std::numeric_limits<Vertex>::max()) {
        throw InputError(InputError::Kind::VertexCount, "vertex count too large");
    }
    for (const auto& e : edges) {
        if (e.first >= num_vertices || e.second >= num_vertices) {
            throw InputError(InputError::Kind::IndexOutOfRange,
                             "edge " + edge_str(e) + " has an endpoint outside 0.." +
                                 std::to_string(num_vertices == 0 ? 0 : num_vertices - 1));
        }
        if (e.first == e.second) {
            throw InputError(InputError::Kind::SelfLoop, "self-loop at vertex " + std::to_string(e.first));
        }
    }
    canonicalize(edges);
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) {
        throw InputError(InputError::Kind::DuplicateEdge, "duplicate edge " + edge_str(*dup));
    }
    return make_graph_unchecked(num_vertices, std::move(edges));
}

Graph generate(GraphKind kind, std::size_t m) {
    std::vector<Edge> edges;
    switch (kind) {
    case GraphKind::Cycle:
        if (m < 3) throw InputError(InputError::Kind::BadParameter, "cycle needs at least 3 vertices");
        for (std::size_t i = 0; i < m; ++i) {
            edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % m));
        }
        break;
    case GraphKind::Path:
        if (m < 2) throw InputError(InputError::Kind::BadParameter, "path needs at least 2 vertices");
        for (std::size_t i = 0; i + 1 < m; ++i) {
            edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
        }
        break;
    case GraphKind::Complete:
        if (m < 2) throw InputError(InputError::Kind::BadParameter, "complete graph needs at least 2 vertices");
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        }
        break;
    }
    return make_graph(m, std::move(edges));
}

GraphKind parse_graph_kind(std::string_view name) {
    if (name == "cycle") return GraphKind::Cycle;
    if (name == "path") return GraphKind::Path;
    if (name == "complete") return GraphKind::Complete;
    throw InputError(InputError::Kind::BadParameter, "unknown graph kind '" + std::string(name) + "'");
}

std::vector<std::vector<Vertex>> adjacency(const Graph& g) {
    std::vector<std::vector<Vertex>> adj(g.num_vertices());
    for (const auto& [u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

std::vector<std::uint32_t> degrees(const Graph& g) {
    std::vector<std::uint32_t> deg(g.num_vertices(), 0);
    for (const auto& [u, v] : g.edges()) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

bool is_connected(const Graph& g) {
    const std::size_t n = g.num_vertices();
    if (n <= 1) return true;
    const auto adj = adjacency(g);
    std::vector<bool> seen(n, false);
    std::deque<Vertex> queue{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : adj[u]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    return reached == n;
}

bool is_bipartite(const Graph& g) {
    const std::size_t n = g.num_vertices();
    const auto adj = adjacency(g);
    std::vector<int> color(n, -1);
    for (std::size_t start = 0; start < n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::deque<Vertex> queue{static_cast<Vertex>(start)};
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : adj[u]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

GraphMeta meta_of(const Graph& g) {
    return GraphMeta{g.num_vertices(), g.num_edges(), is_bipartite(g)};
}

void require_connected_with_edges(const Graph& g) {
    if (g.num_vertices() < 2 || g.num_edges() == 0) {
        throw InputError(InputError::Kind::NoEdges, "graph must have at least 2 vertices and one edge");
    }
    if (!is_connected(g)) {
        throw InputError(InputError::Kind::Disconnected, "graph is not connected");
    }
}

// ---------------------------------------------------------------------------
// Edge-list text format

namespace {

bool parse_uint(std::string_view tok, std::uint64_t& out) {
    if (tok.empty()) return false;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    bool have_count = false;
    std::uint64_t count = 0;
    std::vector<Edge> edges;
    std::size_t line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        const auto toks = split_ws(line);
        if (toks.empty() || toks.front().front() == '#') {
            if (end == text.size()) break;
            continue;
        }
        const std::string where = "line " + std::to_string(line_no);
        if (!have_count) {
            if (toks.size() != 1 || !parse_uint(toks[0], count)) {
                throw InputError(InputError::Kind::VertexCount, where + ": expected a vertex count");
            }
            if (count > std::numeric_limits<Vertex>::max()) {
                throw InputError(InputError::Kind::VertexCount, where + ": vertex count too large");
            }
            have_count = true;
        } else {
            std::uint64_t u = 0, v = 0;
            if (toks.size() != 2 || !parse_uint(toks[0], u) || !parse_uint(toks[1], v)) {
                throw InputError(InputError::Kind::Malformed, where + ": expected 'u v'");
            }
            if (u >= count || v >= count) {
                throw InputError(InputError::Kind::IndexOutOfRange,
                                 where + ": vertex index out of range for N=" + std::to_string(count));
            }
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
        if (end == text.size()) break;
    }
    if (!have_count) {
        throw InputError(InputError::Kind::VertexCount, "missing vertex count line");
    }
    return make_graph(count, std::move(edges));
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.num_vertices() << '\n';
    for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

} // namespace hexlap
