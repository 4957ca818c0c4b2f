#pragma once

#include "hexlap/bignum.hpp"
#include "hexlap/graph.hpp"

#include <cstdint>

namespace hexlap {

/// Parameters of the iterated k-hexagonal construction: every edge gains
/// `k` parallel paths of length 5, and the substitution is applied `n` times.
struct TransformParams {
    unsigned k = 1;
    unsigned n = 0;
};

inline constexpr std::uint64_t kDefaultVertexBudget = 1'000'000;

// Reads HEXLAP_VERTEX_BUDGET, falling back to kDefaultVertexBudget.
std::uint64_t vertex_budget_from_env();

struct GraphSize {
    BigInt num_vertices;
    BigInt num_edges;
};

/// Exact order and size after n substitutions:
///   N_n = N_0 + 4/5 ((5k+1)^n - 1) E_0,   E_n = (5k+1)^n E_0.
GraphSize size_after(const BigInt& n0, const BigInt& e0, unsigned k, unsigned n);

/// One k-hexagonal substitution. Original vertices keep their labels; the
/// four interior vertices of path l on the r-th canonical edge get labels
/// N + 4(k r + l) + 0..3, ordered from the smaller endpoint.
Graph hexagonal(const Graph& g, unsigned k);

/// n-fold substitution. Fails with BudgetError before building anything when
/// the predicted vertex count exceeds `vertex_budget`.
Graph hexagonal_iter(const Graph& g, TransformParams p, std::uint64_t vertex_budget = kDefaultVertexBudget);

} // namespace hexlap
