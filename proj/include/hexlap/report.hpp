#pragma once

#include "hexlap/hex_transform.hpp"
#include "hexlap/invariants.hpp"
#include "hexlap/spectrum.hpp"

#include <string>

namespace hexlap {

// {"k","n","N","E","bipartite","entries":[{"value","multiplicity","family"}]}
std::string spectrum_to_json(const Spectrum& s, TransformParams p);
std::string spectrum_to_text(const Spectrum& s, TransformParams p);

// {"k","n","N","E","kemeny","kirchhoff","tau":{"exact","log10"},"method"}
std::string invariants_to_json(const InvariantReport& r, TransformParams p);
std::string invariants_to_text(const InvariantReport& r, TransformParams p);

// Shortest decimal that round-trips, as nlohmann/json prints it.
std::string format_double(double v);

} // namespace hexlap
