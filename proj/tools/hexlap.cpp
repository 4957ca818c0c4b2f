// hexlap command-line driver. Talks to the library only through hexlap.h.

#include "hexlap/hexlap.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

struct InputFailure {
    std::string message;
};

int exit_code_for(hexlap_status s) {
    switch (s) {
    case HEXLAP_OK: return kExitOk;
    case HEXLAP_ERR_NUMERICAL:
    case HEXLAP_ERR_INTERNAL: return kExitFailure;
    default: return kExitInput;
    }
}

// Carries a non-OK status out of a subcommand.
struct StatusError {
    hexlap_status status;
    std::string message;
};

void check(hexlap_status s) {
    if (s != HEXLAP_OK) throw StatusError{s, hexlap_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};

using GraphPtr = std::unique_ptr<hexlap_graph, Deleter<hexlap_graph, hexlap_graph_free>>;
using SpectrumPtr = std::unique_ptr<hexlap_spectrum, Deleter<hexlap_spectrum, hexlap_spectrum_free>>;
using InvariantsPtr = std::unique_ptr<hexlap_invariants, Deleter<hexlap_invariants, hexlap_invariants_free>>;
using ValidationPtr = std::unique_ptr<hexlap_validation, Deleter<hexlap_validation, hexlap_validation_free>>;

// Writes a library-allocated string to stdout and frees it.
void emit(char* text) {
    std::fputs(text, stdout);
    hexlap_string_free(text);
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputFailure{"cannot open " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GraphPtr load_graph(const std::string& path) {
    const std::string text = read_input(path);
    hexlap_graph* g = nullptr;
    check(hexlap_graph_parse(text.c_str(), &g));
    return GraphPtr(g);
}

struct Options {
    std::string kind;
    std::size_t m = 0;
    unsigned k = 1;
    unsigned n = 0;
    std::string method;
    std::string file;
    bool json = false;
    bool tables = false;
    bool oracle = false;
};

int run_gen(const Options& o) {
    static const std::map<std::string, hexlap_graph_kind> kinds{
        {"cycle", HEXLAP_GRAPH_CYCLE}, {"path", HEXLAP_GRAPH_PATH}, {"complete", HEXLAP_GRAPH_COMPLETE}};
    hexlap_graph* raw = nullptr;
    check(hexlap_graph_generate(kinds.at(o.kind), o.m, &raw));
    GraphPtr g(raw);
    char* text = nullptr;
    check(hexlap_graph_serialize(g.get(), &text));
    emit(text);
    return kExitOk;
}

int run_transform(const Options& o) {
    GraphPtr g = load_graph(o.file);
    hexlap_graph* raw = nullptr;
    check(hexlap_graph_transform(g.get(), o.k, o.n, 0, &raw));
    GraphPtr h(raw);
    char* text = nullptr;
    check(hexlap_graph_serialize(h.get(), &text));
    emit(text);
    return kExitOk;
}

int run_spectrum(const Options& o) {
    GraphPtr g = load_graph(o.file);
    const auto method = o.method == "oracle" ? HEXLAP_SPECTRUM_ORACLE : HEXLAP_SPECTRUM_ITERATIVE;
    hexlap_spectrum* raw = nullptr;
    check(hexlap_spectrum_compute(g.get(), o.k, o.n, method, 0, &raw));
    SpectrumPtr s(raw);
    char* text = nullptr;
    check(o.json ? hexlap_spectrum_to_json(s.get(), &text) : hexlap_spectrum_to_text(s.get(), &text));
    emit(text);
    return kExitOk;
}

int run_invariants(const Options& o) {
    GraphPtr g = load_graph(o.file);
    static const std::map<std::string, hexlap_invariant_method> methods{
        {"closed", HEXLAP_INVARIANTS_CLOSED}, {"spectrum", HEXLAP_INVARIANTS_SPECTRUM},
        {"oracle", HEXLAP_INVARIANTS_ORACLE}};
    hexlap_invariants* raw = nullptr;
    check(hexlap_invariants_compute(g.get(), o.k, o.n, methods.at(o.method), 0, &raw));
    InvariantsPtr r(raw);
    char* text = nullptr;
    check(o.json ? hexlap_invariants_to_json(r.get(), &text) : hexlap_invariants_to_text(r.get(), &text));
    emit(text);
    return kExitOk;
}

int run_validate(const Options& o) {
    hexlap_validation* raw = nullptr;
    check(hexlap_validate(o.tables ? HEXLAP_VALIDATE_TABLES : HEXLAP_VALIDATE_ORACLE, &raw));
    ValidationPtr v(raw);
    char* text = nullptr;
    check(o.json ? hexlap_validation_to_json(v.get(), &text) : hexlap_validation_to_text(v.get(), &text));
    emit(text);
    return hexlap_validation_ok(v.get()) ? kExitOk : kExitFailure;
}

void add_kn(CLI::App* cmd, Options& o) {
    cmd->add_option("-k", o.k, "paths of length 5 added per edge")->required()->check(CLI::PositiveNumber);
    cmd->add_option("-n", o.n, "number of iterations")->required()->check(CLI::NonNegativeNumber);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-hexagonal iterated graphs: spectra, Kemeny's constant, Kirchhoff index, spanning trees"};
    app.set_version_flag("--version", std::string(hexlap_version()));
    app.require_subcommand(1);

    Options o;

    auto* gen = app.add_subcommand("gen", "write a cycle, path or complete graph as an edge list");
    gen->add_option("kind", o.kind)->required()->check(CLI::IsMember({"cycle", "path", "complete"}));
    gen->add_option("m", o.m, "number of vertices")->required();

    auto* transform = app.add_subcommand("transform", "write H^k_n of an edge list");
    add_kn(transform, o);
    transform->add_option("file", o.file, "edge list, '-' for stdin")->required();

    auto* spectrum = app.add_subcommand("spectrum", "normalized Laplacian spectrum of H^k_n");
    add_kn(spectrum, o);
    spectrum->add_option("--method", o.method)->required()->check(CLI::IsMember({"oracle", "iterative"}));
    spectrum->add_flag("--json", o.json);
    spectrum->add_option("file", o.file, "edge list, '-' for stdin")->required();

    auto* invariants = app.add_subcommand("invariants", "Kemeny's constant, Kirchhoff index and spanning trees");
    add_kn(invariants, o);
    invariants->add_option("--method", o.method)
        ->required()
        ->check(CLI::IsMember({"closed", "spectrum", "oracle"}));
    invariants->add_flag("--json", o.json);
    invariants->add_option("file", o.file, "edge list, '-' for stdin")->required();

    auto* validate = app.add_subcommand("validate", "check the published tables or the oracle suite");
    auto* tables_flag = validate->add_flag("--tables", o.tables);
    auto* oracle_flag = validate->add_flag("--oracle", o.oracle);
    tables_flag->excludes(oracle_flag);
    validate->add_flag("--json", o.json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*gen) return run_gen(o);
        if (*transform) return run_transform(o);
        if (*spectrum) return run_spectrum(o);
        if (*invariants) return run_invariants(o);
        if (*validate) {
            if (!o.tables && !o.oracle) {
                std::cerr << "validate: one of --tables or --oracle is required\n";
                return kExitInput;
            }
            return run_validate(o);
        }
    } catch (const StatusError& e) {
        std::cerr << "hexlap: " << hexlap_status_string(e.status) << ": " << e.message << '\n';
        return exit_code_for(e.status);
    } catch (const InputFailure& e) {
        std::cerr << "hexlap: " << e.message << '\n';
        return kExitInput;
    }
    return kExitInput;
}
