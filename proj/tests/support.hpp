#pragma once

#include "hexlap/graph.hpp"
#include "hexlap/spectrum.hpp"

#include <string>
#include <vector>

namespace testing {

inline hexlap::Graph named(const std::string& id) {
    using hexlap::GraphKind;
    const std::size_t m = std::stoul(id.substr(1));
    switch (id[0]) {
    case 'C': return hexlap::generate(GraphKind::Cycle, m);
    case 'P': return hexlap::generate(GraphKind::Path, m);
    default: return hexlap::generate(GraphKind::Complete, m);
    }
}

inline const std::vector<std::string>& small_graphs() {
    static const std::vector<std::string> ids{"K2", "P3", "C5", "C6", "K4"};
    return ids;
}

inline hexlap::Spectrum spectrum_of(std::vector<std::pair<double, std::uint64_t>> values, hexlap::GraphMeta meta) {
    std::vector<hexlap::SpectrumEntry> raw;
    for (auto [v, m] : values) raw.push_back({v, m, std::nullopt});
    return hexlap::assemble_spectrum(std::move(raw), meta);
}

inline double trace(const hexlap::Spectrum& s) {
    double t = 0.0;
    for (const auto& e : s.entries) t += e.value * static_cast<double>(e.multiplicity);
    return t;
}

} // namespace testing
