#include "hexlap/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <limits>
#include <sstream>

namespace hexlap {

using json = nlohmann::ordered_json;

namespace {

json big_to_json(const BigInt& v) {
    if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
    return v.convert_to<double>();
}

} // namespace

std::string format_double(double v) { return json(v).dump(); }

std::string spectrum_to_json(const Spectrum& s, TransformParams p) {
    json entries = json::array();
    for (const auto& e : s.entries) {
        json item;
        item["value"] = e.value;
        item["multiplicity"] = e.multiplicity;
        item["family"] = e.family ? json(std::string(family_name(*e.family))) : json(nullptr);
        entries.push_back(std::move(item));
    }
    json j;
    j["k"] = p.k;
    j["n"] = p.n;
    j["N"] = s.meta.num_vertices;
    j["E"] = s.meta.num_edges;
    j["bipartite"] = s.meta.bipartite;
    j["entries"] = std::move(entries);
    return j.dump(2) + "\n";
}

std::string spectrum_to_text(const Spectrum& s, TransformParams p) {
    std::ostringstream os;
    os << "# k=" << p.k << " n=" << p.n << " N=" << s.meta.num_vertices << " E=" << s.meta.num_edges
       << " bipartite=" << (s.meta.bipartite ? "yes" : "no") << " distinct=" << s.entries.size() << '\n';
    char buf[64];
    for (const auto& e : s.entries) {
        std::snprintf(buf, sizeof buf, "%.15f", e.value);
        os << buf << '\t' << e.multiplicity << '\t' << (e.family ? family_name(*e.family) : "-") << '\n';
    }
    return os.str();
}

std::string invariants_to_json(const InvariantReport& r, TransformParams p) {
    json j;
    j["k"] = p.k;
    j["n"] = p.n;
    j["N"] = big_to_json(r.num_vertices);
    j["E"] = big_to_json(r.num_edges);
    j["kemeny"] = r.kemeny;
    j["kirchhoff"] = r.kirchhoff;
    j["tau"] = {{"exact", r.tau_exact ? json(r.tau_exact->str()) : json(nullptr)}, {"log10", r.tau_log10}};
    j["method"] = std::string(method_name(r.method));
    return j.dump(2) + "\n";
}

std::string invariants_to_text(const InvariantReport& r, TransformParams p) {
    std::ostringstream os;
    os << "k          " << p.k << '\n'
       << "n          " << p.n << '\n'
       << "N          " << r.num_vertices << '\n'
       << "E          " << r.num_edges << '\n'
       << "method     " << method_name(r.method) << '\n'
       << "kemeny     " << format_double(r.kemeny) << '\n'
       << "kirchhoff  " << format_double(r.kirchhoff) << '\n';
    if (r.tau_factored) os << "tau        " << *r.tau_factored << '\n';
    if (r.tau_exact) os << "tau exact  " << r.tau_exact->str() << '\n';
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", r.tau_log10);
    os << "tau log10  " << buf << '\n';
    return os.str();
}

} // namespace hexlap
