#include "hexlap/hex_transform.hpp"

#include "hexlap/error.hpp"

#include <cstdlib>
#include <limits>
#include <string>

namespace hexlap {

std::uint64_t vertex_budget_from_env() {
    const char* raw = std::getenv("HEXLAP_VERTEX_BUDGET");
    if (raw == nullptr || *raw == '\0') return kDefaultVertexBudget;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0') {
        throw InputError(InputError::Kind::BadParameter,
                         std::string("HEXLAP_VERTEX_BUDGET is not an integer: ") + raw);
    }
    return v;
}

GraphSize size_after(const BigInt& n0, const BigInt& e0, unsigned k, unsigned n) {
    const BigInt growth = pow_big(BigInt(5 * k + 1), n);
    // (5k+1)^n = 1 (mod 5), so the 4/5 factor always divides exactly.
    return GraphSize{n0 + 4 * (growth - 1) * e0 / 5, growth * e0};
}

Graph hexagonal(const Graph& g, unsigned k) {
    if (k < 1) throw InputError(InputError::Kind::BadParameter, "k must be at least 1");
    require_connected_with_edges(g);

    const std::size_t n0 = g.num_vertices();
    const std::size_t e0 = g.num_edges();
    const std::size_t n1 = n0 + 4 * static_cast<std::size_t>(k) * e0;
    if (n1 > std::numeric_limits<Vertex>::max()) {
        throw BudgetError("transformed graph would exceed the 32-bit vertex label range");
    }

    std::vector<Edge> edges;
    edges.reserve((5 * static_cast<std::size_t>(k) + 1) * e0);
    Vertex next = static_cast<Vertex>(n0);
    for (const auto& [u, v] : g.edges()) {
        edges.emplace_back(u, v);
        for (unsigned l = 0; l < k; ++l) {
            const Vertex j1 = next, j2 = next + 1, j3 = next + 2, j4 = next + 3;
            next += 4;
            edges.emplace_back(u, j1);
            edges.emplace_back(j1, j2);
            edges.emplace_back(j2, j3);
            edges.emplace_back(j3, j4);
            edges.emplace_back(j4, v);
        }
    }
    return make_graph_unchecked(n1, std::move(edges));
}

Graph hexagonal_iter(const Graph& g, TransformParams p, std::uint64_t vertex_budget) {
    if (p.k < 1) throw InputError(InputError::Kind::BadParameter, "k must be at least 1");
    if (p.n == 0) return g;
    require_connected_with_edges(g);

    const GraphSize predicted = size_after(g.num_vertices(), g.num_edges(), p.k, p.n);
    if (predicted.num_vertices > vertex_budget) {
        throw BudgetError("H^" + std::to_string(p.k) + "_" + std::to_string(p.n) + " would have " +
                          predicted.num_vertices.str() + " vertices, above the budget of " +
                          std::to_string(vertex_budget));
    }

    Graph out = g;
    for (unsigned i = 0; i < p.n; ++i) out = hexagonal(out, p.k);
    return out;
}

} // namespace hexlap
