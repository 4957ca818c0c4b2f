#include "hexlap/hexlap.h"

#include "hexlap/error.hpp"
#include "hexlap/graph.hpp"
#include "hexlap/hex_transform.hpp"
#include "hexlap/invariants.hpp"
#include "hexlap/iterative_spectrum.hpp"
#include "hexlap/report.hpp"
#include "hexlap/spectral_oracle.hpp"
#include "hexlap/validation.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct hexlap_graph {
    hexlap::Graph graph;
};

struct hexlap_spectrum {
    hexlap::Spectrum spectrum;
    hexlap::TransformParams params;
};

struct hexlap_invariants {
    hexlap::InvariantReport report;
    hexlap::TransformParams params;
    std::string tau_exact;
};

struct hexlap_validation {
    hexlap::ValidationReport report;
};

namespace {

thread_local std::string g_last_error;

hexlap_status fail(hexlap_status status, const char* message) {
    g_last_error = message;
    return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
hexlap_status guarded(F&& body) {
    try {
        body();
        g_last_error.clear();
        return HEXLAP_OK;
    } catch (const hexlap::InputError& e) {
        switch (e.kind()) {
        case hexlap::InputError::Kind::Malformed:
        case hexlap::InputError::Kind::VertexCount:
            return fail(HEXLAP_ERR_PARSE, e.what());
        case hexlap::InputError::Kind::BadParameter:
            return fail(HEXLAP_ERR_INVALID_ARGUMENT, e.what());
        default:
            return fail(HEXLAP_ERR_GRAPH, e.what());
        }
    } catch (const hexlap::BudgetError& e) {
        return fail(HEXLAP_ERR_BUDGET, e.what());
    } catch (const hexlap::NumericalError& e) {
        return fail(HEXLAP_ERR_NUMERICAL, e.what());
    } catch (const hexlap::DomainError& e) {
        return fail(HEXLAP_ERR_DOMAIN, e.what());
    } catch (const std::bad_alloc&) {
        return fail(HEXLAP_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(HEXLAP_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(HEXLAP_ERR_INTERNAL, "unknown error");
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::uint64_t resolve_budget(std::uint64_t budget) {
    return budget == 0 ? hexlap::vertex_budget_from_env() : budget;
}

#define HEXLAP_REQUIRE(cond)                                                       \
    do {                                                                           \
        if (!(cond)) return fail(HEXLAP_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
    } while (0)

} // namespace

extern "C" {

const char* hexlap_version(void) { return "0.1.0"; }

const char* hexlap_last_error(void) { return g_last_error.c_str(); }

const char* hexlap_status_string(hexlap_status status) {
    switch (status) {
    case HEXLAP_OK: return "ok";
    case HEXLAP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HEXLAP_ERR_PARSE: return "parse error";
    case HEXLAP_ERR_GRAPH: return "invalid graph";
    case HEXLAP_ERR_BUDGET: return "vertex budget exceeded";
    case HEXLAP_ERR_NUMERICAL: return "numerical failure";
    case HEXLAP_ERR_DOMAIN: return "domain error";
    case HEXLAP_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void hexlap_string_free(char* s) { std::free(s); }

hexlap_status hexlap_default_vertex_budget(uint64_t* out) {
    HEXLAP_REQUIRE(out);
    return guarded([&] { *out = hexlap::vertex_budget_from_env(); });
}

// ---- graphs ----

hexlap_status hexlap_graph_create(size_t num_vertices, const uint32_t* endpoints, size_t num_edges,
                                  hexlap_graph** out) {
    HEXLAP_REQUIRE(out);
    HEXLAP_REQUIRE(endpoints || num_edges == 0);
    return guarded([&] {
        std::vector<hexlap::Edge> edges;
        edges.reserve(num_edges);
        for (size_t i = 0; i < num_edges; ++i) edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
        *out = new hexlap_graph{hexlap::make_graph(num_vertices, std::move(edges))};
    });
}

hexlap_status hexlap_graph_generate(hexlap_graph_kind kind, size_t m, hexlap_graph** out) {
    HEXLAP_REQUIRE(out);
    hexlap::GraphKind k;
    switch (kind) {
    case HEXLAP_GRAPH_CYCLE: k = hexlap::GraphKind::Cycle; break;
    case HEXLAP_GRAPH_PATH: k = hexlap::GraphKind::Path; break;
    case HEXLAP_GRAPH_COMPLETE: k = hexlap::GraphKind::Complete; break;
    default: return fail(HEXLAP_ERR_INVALID_ARGUMENT, "unknown graph kind");
    }
    return guarded([&] { *out = new hexlap_graph{hexlap::generate(k, m)}; });
}

hexlap_status hexlap_graph_parse(const char* text, hexlap_graph** out) {
    HEXLAP_REQUIRE(text);
    HEXLAP_REQUIRE(out);
    return guarded([&] { *out = new hexlap_graph{hexlap::parse_edge_list(text)}; });
}

hexlap_status hexlap_graph_serialize(const hexlap_graph* g, char** out) {
    HEXLAP_REQUIRE(g);
    HEXLAP_REQUIRE(out);
    return guarded([&] { *out = dup_string(hexlap::serialize_edge_list(g->graph)); });
}

void hexlap_graph_free(hexlap_graph* g) { delete g; }

size_t hexlap_graph_num_vertices(const hexlap_graph* g) { return g ? g->graph.num_vertices() : 0; }
size_t hexlap_graph_num_edges(const hexlap_graph* g) { return g ? g->graph.num_edges() : 0; }
int hexlap_graph_is_connected(const hexlap_graph* g) { return g && hexlap::is_connected(g->graph) ? 1 : 0; }
int hexlap_graph_is_bipartite(const hexlap_graph* g) { return g && hexlap::is_bipartite(g->graph) ? 1 : 0; }

hexlap_status hexlap_graph_transform(const hexlap_graph* g, unsigned k, unsigned n, uint64_t budget,
                                     hexlap_graph** out) {
    HEXLAP_REQUIRE(g);
    HEXLAP_REQUIRE(out);
    return guarded([&] {
        *out = new hexlap_graph{hexlap::hexagonal_iter(g->graph, {k, n}, resolve_budget(budget))};
    });
}

// ---- spectra ----

hexlap_status hexlap_spectrum_compute(const hexlap_graph* g, unsigned k, unsigned n, hexlap_spectrum_method method,
                                      uint64_t budget, hexlap_spectrum** out) {
    HEXLAP_REQUIRE(g);
    HEXLAP_REQUIRE(out);
    if (method != HEXLAP_SPECTRUM_ORACLE && method != HEXLAP_SPECTRUM_ITERATIVE) {
        return fail(HEXLAP_ERR_INVALID_ARGUMENT, "unknown spectrum method");
    }
    return guarded([&] {
        const hexlap::TransformParams p{k, n};
        if (method == HEXLAP_SPECTRUM_ITERATIVE) {
            *out = new hexlap_spectrum{hexlap::spectrum_n(g->graph, p), p};
        } else {
            const hexlap::Graph h = hexlap::hexagonal_iter(g->graph, p, resolve_budget(budget));
            *out = new hexlap_spectrum{hexlap::spectrum_oracle(h), p};
        }
    });
}

void hexlap_spectrum_free(hexlap_spectrum* s) { delete s; }

size_t hexlap_spectrum_num_entries(const hexlap_spectrum* s) { return s ? s->spectrum.entries.size() : 0; }

uint64_t hexlap_spectrum_total_dim(const hexlap_spectrum* s) { return s ? s->spectrum.total_dim : 0; }

hexlap_status hexlap_spectrum_entry_at(const hexlap_spectrum* s, size_t index, hexlap_spectrum_entry* out) {
    HEXLAP_REQUIRE(s);
    HEXLAP_REQUIRE(out);
    if (index >= s->spectrum.entries.size()) return fail(HEXLAP_ERR_INVALID_ARGUMENT, "entry index out of range");
    const auto& e = s->spectrum.entries[index];
    out->value = e.value;
    out->multiplicity = e.multiplicity;
    // family_name returns views of string literals, so data() is NUL-terminated.
    out->family = e.family ? hexlap::family_name(*e.family).data() : nullptr;
    return HEXLAP_OK;
}

hexlap_status hexlap_spectrum_to_json(const hexlap_spectrum* s, char** out) {
    HEXLAP_REQUIRE(s);
    HEXLAP_REQUIRE(out);
    return guarded([&] { *out = dup_string(hexlap::spectrum_to_json(s->spectrum, s->params)); });
}

hexlap_status hexlap_spectrum_to_text(const hexlap_spectrum* s, char** out) {
    HEXLAP_REQUIRE(s);
    HEXLAP_REQUIRE(out);
    return guarded([&] { *out = dup_string(hexlap::spectrum_to_text(s->spectrum, s->params)); });
}

// ---- invariants ----

hexlap_status hexlap_invariants_compute(const hexlap_graph* g, unsigned k, unsigned n, hexlap_invariant_method method,
                                        uint64_t budget, hexlap_invariants** out) {
    HEXLAP_REQUIRE(g);
    HEXLAP_REQUIRE(out);
    hexlap::InvariantMethod m;
    switch (method) {
    case HEXLAP_INVARIANTS_CLOSED: m = hexlap::InvariantMethod::ClosedForm; break;
    case HEXLAP_INVARIANTS_SPECTRUM: m = hexlap::InvariantMethod::Spectrum; break;
    case HEXLAP_INVARIANTS_ORACLE: m = hexlap::InvariantMethod::Oracle; break;
    default: return fail(HEXLAP_ERR_INVALID_ARGUMENT, "unknown invariant method");
    }
    return guarded([&] {
        const hexlap::TransformParams p{k, n};
        auto* r = new hexlap_invariants{hexlap::compute_invariants(g->graph, p, m, resolve_budget(budget)), p, {}};
        if (r->report.tau_exact) r->tau_exact = r->report.tau_exact->str();
        *out = r;
    });
}

void hexlap_invariants_free(hexlap_invariants* r) { delete r; }
double hexlap_invariants_kemeny(const hexlap_invariants* r) { return r ? r->report.kemeny : 0.0; }
double hexlap_invariants_kirchhoff(const hexlap_invariants* r) { return r ? r->report.kirchhoff : 0.0; }
double hexlap_invariants_tau_log10(const hexlap_invariants* r) { return r ? r->report.tau_log10 : 0.0; }

const char* hexlap_invariants_tau_exact(const hexlap_invariants* r) {
    return r && r->report.tau_exact ? r->tau_exact.c_str() : nullptr;
}

hexlap_status hexlap_invariants_to_json(const hexlap_invariants* r, char** out) {
    HEXLAP_REQUIRE(r);
    HEXLAP_REQUIRE(out);
    return guarded([&] { *out = dup_string(hexlap::invariants_to_json(r->report, r->params)); });
}

hexlap_status hexlap_invariants_to_text(const hexlap_invariants* r, char** out) {
    HEXLAP_REQUIRE(r);
    HEXLAP_REQUIRE(out);
    return guarded([&] { *out = dup_string(hexlap::invariants_to_text(r->report, r->params)); });
}

// ---- validation ----

hexlap_status hexlap_validate(hexlap_validation_mode mode, hexlap_validation** out) {
    HEXLAP_REQUIRE(out);
    if (mode != HEXLAP_VALIDATE_TABLES && mode != HEXLAP_VALIDATE_ORACLE) {
        return fail(HEXLAP_ERR_INVALID_ARGUMENT, "unknown validation mode");
    }
    return guarded([&] {
        *out = new hexlap_validation{mode == HEXLAP_VALIDATE_TABLES ? hexlap::validate_tables()
                                                                    : hexlap::validate_oracle()};
    });
}

void hexlap_validation_free(hexlap_validation* v) { delete v; }

int hexlap_validation_ok(const hexlap_validation* v) { return v && v->report.ok() ? 1 : 0; }

size_t hexlap_validation_count(const hexlap_validation* v, const char* status) {
    if (v == nullptr || status == nullptr) return 0;
    for (auto s : {hexlap::RecordStatus::Match, hexlap::RecordStatus::FlaggedDiscrepancy,
                   hexlap::RecordStatus::Mismatch}) {
        if (hexlap::status_name(s) == status) return v->report.count(s);
    }
    return 0;
}

hexlap_status hexlap_validation_to_json(const hexlap_validation* v, char** out) {
    HEXLAP_REQUIRE(v);
    HEXLAP_REQUIRE(out);
    return guarded([&] { *out = dup_string(hexlap::validation_to_json(v->report)); });
}

hexlap_status hexlap_validation_to_text(const hexlap_validation* v, char** out) {
    HEXLAP_REQUIRE(v);
    HEXLAP_REQUIRE(out);
    return guarded([&] { *out = dup_string(hexlap::validation_to_text(v->report)); });
}

// ---- scalar helpers ----

hexlap_status hexlap_cubic_roots(double sigma, double out_roots[3]) {
    HEXLAP_REQUIRE(out_roots);
    return guarded([&] {
        const auto rs = hexlap::cubic_roots(sigma);
        for (int i = 0; i < 3; ++i) out_roots[i] = rs.roots[i];
    });
}

hexlap_status hexlap_quintic_roots(double sigma, unsigned k, double out_roots[5]) {
    HEXLAP_REQUIRE(out_roots);
    return guarded([&] {
        const auto rs = hexlap::quintic_roots(sigma, k);
        for (int i = 0; i < 5; ++i) out_roots[i] = rs.roots[i];
    });
}

hexlap_status hexlap_tau_closed(const char* tau0_decimal, uint64_t n0, uint64_t e0, unsigned k, unsigned n,
                                char** out) {
    HEXLAP_REQUIRE(tau0_decimal);
    HEXLAP_REQUIRE(out);
    return guarded([&] {
        const std::string text(tau0_decimal);
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
            throw hexlap::InputError(hexlap::InputError::Kind::BadParameter, "not a decimal integer: " + text);
        }
        // Boost reads a leading 0 as an octal prefix.
        const auto lead = text.find_first_not_of('0');
        const hexlap::BigInt tau0 = lead == std::string::npos ? hexlap::BigInt(0) : hexlap::BigInt(text.substr(lead));
        const auto product = hexlap::tau_closed_k(tau0, n0, e0, k, n);
        *out = dup_string(product.value().str());
    });
}

hexlap_status hexlap_spanning_trees(const hexlap_graph* g, char** out) {
    HEXLAP_REQUIRE(g);
    HEXLAP_REQUIRE(out);
    return guarded([&] { *out = dup_string(hexlap::spanning_trees_matrix_tree(g->graph).str()); });
}

} // extern "C"
