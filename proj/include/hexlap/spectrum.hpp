#pragma once

#include "hexlap/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace hexlap {

/// Which branch of the spectral recursion produced an eigenvalue.
enum class Family {
    CubicImage,   // root of the cubic at some sigma in (0,2), k = 1
    QuinticImage, // root of the quintic at some sigma in (0,2), k >= 2
    Zero,
    Two,
    HalfPair,     // 1/2 and 3/2
    PhiPair,      // (5 +- sqrt 5)/4
    PsiPair,      // (3 +- sqrt 5)/4
    Sigma0Extra,  // (5k+3 +- sqrt(5k^2+6k+5)) / (4(k+1))
    Sigma2Extra,  // (3k+5 +- sqrt(5k^2+6k+5)) / (4(k+1))
};

std::string_view family_name(Family f);

struct SpectrumEntry {
    double value = 0.0;
    std::uint64_t multiplicity = 0;
    std::optional<Family> family;
};

/// Eigenvalue multiset of a normalized Laplacian, grouped by value.
///
/// Entries are sorted ascending and pairwise further apart than
/// kMergeTolerance; multiplicities sum to total_dim.
struct Spectrum {
    std::vector<SpectrumEntry> entries;
    std::uint64_t total_dim = 0;
    GraphMeta meta;
};

inline constexpr double kMergeTolerance = 1e-7;

/// Sorts and groups raw entries. Values closer than `tol` to the running
/// group head are merged; a merged entry keeps its family tag only when all
/// contributors agree.
Spectrum assemble_spectrum(std::vector<SpectrumEntry> raw, GraphMeta meta, double tol = kMergeTolerance);

std::vector<double> expand(const Spectrum& s);

struct MatchReport {
    bool pass = false;
    bool same_dimension = false;
    double max_discrepancy = 0.0;
    // Entries of either side with no counterpart of equal multiplicity
    // within tolerance on the other side.
    std::size_t multiplicity_mismatches = 0;
};

/// Pairs the sorted expanded eigenvalue lists position by position. Passes
/// iff dimensions agree and every paired difference is below `tol`.
MatchReport compare_spectra(const Spectrum& a, const Spectrum& b, double tol);

} // namespace hexlap
