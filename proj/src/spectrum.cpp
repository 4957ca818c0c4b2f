#include "hexlap/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace hexlap {

std::string_view family_name(Family f) {
    switch (f) {
    case Family::CubicImage: return "cubic-image";
    case Family::QuinticImage: return "quintic-image";
    case Family::Zero: return "zero";
    case Family::Two: return "two";
    case Family::HalfPair: return "half-pair";
    case Family::PhiPair: return "phi-pair";
    case Family::PsiPair: return "psi-pair";
    case Family::Sigma0Extra: return "sigma0-extra";
    case Family::Sigma2Extra: return "sigma2-extra";
    }
    return "unknown";
}

Spectrum assemble_spectrum(std::vector<SpectrumEntry> raw, GraphMeta meta, double tol) {
    std::stable_sort(raw.begin(), raw.end(),
                     [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.value < b.value; });
    Spectrum s;
    s.meta = meta;
    for (const auto& e : raw) {
        if (e.multiplicity == 0) continue;
        s.total_dim += e.multiplicity;
        if (!s.entries.empty() && std::abs(e.value - s.entries.back().value) <= tol) {
            auto& head = s.entries.back();
            head.multiplicity += e.multiplicity;
            if (head.family != e.family) head.family.reset();
            continue;
        }
        s.entries.push_back(e);
    }
    return s;
}

std::vector<double> expand(const Spectrum& s) {
    std::vector<double> out;
    out.reserve(s.total_dim);
    for (const auto& e : s.entries) out.insert(out.end(), e.multiplicity, e.value);
    return out;
}

namespace {

std::size_t unmatched(const Spectrum& a, const Spectrum& b, double tol) {
    std::size_t count = 0;
    for (const auto& ea : a.entries) {
        const bool found = std::any_of(b.entries.begin(), b.entries.end(), [&](const SpectrumEntry& eb) {
            return std::abs(ea.value - eb.value) < tol && ea.multiplicity == eb.multiplicity;
        });
        if (!found) ++count;
    }
    return count;
}

} // namespace

MatchReport compare_spectra(const Spectrum& a, const Spectrum& b, double tol) {
    MatchReport r;
    const auto xa = expand(a);
    const auto xb = expand(b);
    r.same_dimension = xa.size() == xb.size();
    const std::size_t common = std::min(xa.size(), xb.size());
    for (std::size_t i = 0; i < common; ++i) {
        r.max_discrepancy = std::max(r.max_discrepancy, std::abs(xa[i] - xb[i]));
    }
    r.multiplicity_mismatches = unmatched(a, b, tol) + unmatched(b, a, tol);
    r.pass = r.same_dimension && r.max_discrepancy < tol;
    return r;
}

} // namespace hexlap
