#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#ifndef HEXLAP_CLI
#error "HEXLAP_CLI must name the hexlap executable"
#endif
#ifndef HEXLAP_TEST_DIR
#error "HEXLAP_TEST_DIR must name a scratch directory"
#endif

namespace {

struct Result {
    int code = -1;
    std::string out;
};

// Runs `hexlap <args>` through the shell, capturing stdout; stderr is dropped.
Result run(const std::string& args) {
    const std::string cmd = std::string("\"") + HEXLAP_CLI + "\" " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string scratch(const std::string& name, const std::string& content) {
    const std::string path = std::string(HEXLAP_TEST_DIR) + "/" + name;
    std::ofstream(path, std::ios::binary) << content;
    return path;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("gen") {
    const Result c6 = run("gen cycle 6");
    CHECK(c6.code == 0);
    CHECK(c6.out == "6\n0 1\n0 5\n1 2\n2 3\n3 4\n4 5\n");
    CHECK(run("gen path 3").out == "3\n0 1\n1 2\n");
    CHECK(run("gen cycle 2").code == 2);
    CHECK(run("gen star 4").code == 2);
    CHECK(run("gen cycle").code == 2);
    CHECK(run("").code == 2);
}

TEST_CASE("transform") {
    const std::string c6 = scratch("c6.txt", run("gen cycle 6").out);
    const Result h1 = run("transform -k 1 -n 1 " + c6);
    CHECK(h1.code == 0);
    CHECK(h1.out.rfind("30\n", 0) == 0);
    CHECK(run("transform -k 2 -n 1 " + c6).out.rfind("54\n", 0) == 0);
    CHECK(run("transform -k 1 -n 0 " + c6).out == run("gen cycle 6").out);
    CHECK(run("transform -k 1 -n 1 - < " + c6).out == h1.out);
}

TEST_CASE("transform errors exit with 2") {
    CHECK(run("transform -k 1 -n 1 " + scratch("bad.txt", "3\n0 x\n")).code == 2);
    CHECK(run("transform -k 1 -n 1 " + scratch("split.txt", "4\n0 1\n2 3\n")).code == 2);
    CHECK(run("transform -k 1 -n 1 /nonexistent/graph.txt").code == 2);
    const std::string c6 = scratch("c6b.txt", run("gen cycle 6").out);
    CHECK(run("transform -k 0 -n 1 " + c6).code == 2);
    CHECK(run("transform -k 1 -n 9 " + c6).code == 2);
    CHECK(run("transform -k 1 -n 2 " + c6).code == 0);
    // The environment budget applies.
    CHECK(std::system(("HEXLAP_VERTEX_BUDGET=100 \"" + std::string(HEXLAP_CLI) + "\" transform -k 1 -n 2 " + c6 +
                       " >/dev/null 2>&1")
                          .c_str()) != 0);
}

TEST_CASE("spectrum") {
    const std::string c6 = scratch("c6c.txt", run("gen cycle 6").out);
    const Result oracle = run("spectrum -k 1 -n 1 --method oracle --json " + c6);
    const Result iter = run("spectrum -k 1 -n 1 --method iterative --json " + c6);
    REQUIRE(oracle.code == 0);
    REQUIRE(iter.code == 0);
    const auto a = nlohmann::json::parse(oracle.out);
    const auto b = nlohmann::json::parse(iter.out);
    std::uint64_t total = 0;
    for (const auto& e : a["entries"]) total += e["multiplicity"].get<std::uint64_t>();
    CHECK(total == 30);
    REQUIRE(a["entries"].size() == b["entries"].size());
    for (std::size_t i = 0; i < a["entries"].size(); ++i) {
        CHECK(std::abs(a["entries"][i]["value"].get<double>() - b["entries"][i]["value"].get<double>()) < 1e-7);
        CHECK(a["entries"][i]["multiplicity"] == b["entries"][i]["multiplicity"]);
    }
    for (const char* key : {"k", "n", "N", "E", "bipartite", "entries"}) CHECK(a.contains(key));

    const std::string k2 = scratch("k2.txt", run("gen complete 2").out);
    const auto h = nlohmann::json::parse(run("spectrum -k 1 -n 1 --method iterative --json " + k2).out);
    CHECK(h["N"] == 6);
    CHECK(h["entries"].size() == 4);

    CHECK(run("spectrum -k 1 -n 1 --method oracle " + c6).out.rfind("# k=1", 0) == 0);
    CHECK(run("spectrum -k 1 -n 1 --method magic " + c6).code == 2);
}

TEST_CASE("invariants") {
    const std::string c6 = scratch("c6d.txt", run("gen cycle 6").out);
    const Result r = run("invariants -k 1 -n 2 --method closed --json " + c6);
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["tau"]["exact"] == "671512031151727574620569600000000");
    CHECK(j["tau"]["log10"].get<double>() == doctest::Approx(32.8270537981));
    CHECK(j["method"] == "closed-form");
    for (const char* key : {"k", "n", "N", "E", "kemeny", "kirchhoff", "tau", "method"}) CHECK(j.contains(key));

    const auto k21 = nlohmann::json::parse(run("invariants -k 2 -n 1 --method closed --json " + c6).out);
    CHECK(k21["tau"]["exact"] == "7878281250");

    const auto spectral = nlohmann::json::parse(run("invariants -k 1 -n 2 --method spectrum --json " + c6).out);
    CHECK(spectral["tau"]["exact"].is_null());
    CHECK(spectral["kemeny"].get<double>() == doctest::Approx(j["kemeny"].get<double>()).epsilon(1e-9));

    const std::string k2 = scratch("k2b.txt", run("gen complete 2").out);
    const auto base = nlohmann::json::parse(run("invariants -k 1 -n 0 --method closed --json " + k2).out);
    CHECK(base["kemeny"] == 0.5);
    CHECK(base["kirchhoff"] == 1.0);
    CHECK(base["tau"]["exact"] == "1");

    const Result text = run("invariants -k 1 -n 2 --method closed " + c6);
    CHECK(text.out.find("5^8 * 6^34 * 6") != std::string::npos);
    CHECK(run("invariants -k 1 -n 2 --method closed " + scratch("empty.txt", "")).code == 2);
}

TEST_CASE("validate") {
    const Result tables = run("validate --tables --json");
    CHECK(tables.code == 0);
    const auto j = nlohmann::json::parse(tables.out);
    CHECK(j["summary"]["mismatch"] == 0);
    CHECK(j["summary"]["flagged-discrepancy"].get<int>() > 0);

    const Result first = run("validate --oracle --json");
    const Result second = run("validate --oracle --json");
    CHECK(first.code == 0);
    CHECK(first.out == second.out);

    CHECK(run("validate").code == 2);
    CHECK(run("validate --tables --oracle").code == 2);
}

} // TEST_SUITE
