#include "hexlap/iterative_spectrum.hpp"

#include "hexlap/error.hpp"
#include "hexlap/spectral_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hexlap {

namespace {

constexpr double kLower = 0.0;
constexpr double kUpper = 2.0;
constexpr std::size_t kCoarseGrid = 1000;
constexpr std::size_t kFineGrid = 100000;
// Distance at which a level-(n-1) eigenvalue is identified with 0 or 2.
constexpr double kEndpointTolerance = 1e-7;
constexpr double kRangeSlack = 1e-9;

double sqrt5() { return std::sqrt(5.0); }

double disc(unsigned k) {
    const double kd = k;
    return std::sqrt(5.0 * kd * kd + 6.0 * kd + 5.0);
}

double derivative(std::span<const double> c, double x) {
    double acc = 0.0;
    for (std::size_t i = c.size() - 1; i >= 1; --i) acc = acc * x + static_cast<double>(i) * c[i];
    return acc;
}

double refine(std::span<const double> c, double a, double b) {
    double fa = evaluate_polynomial(c, a);
    for (int it = 0; it < 200 && b - a > 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(a));
         ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = evaluate_polynomial(c, mid);
        if (fm == 0.0) return mid;
        if ((fa < 0.0) == (fm < 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    double x = 0.5 * (a + b);
    for (int it = 0; it < 3; ++it) {
        const double fx = evaluate_polynomial(c, x);
        const double dfx = derivative(c, x);
        if (fx == 0.0 || dfx == 0.0) break;
        const double next = x - fx / dfx;
        if (next < a || next > b) break;
        if (std::abs(evaluate_polynomial(c, next)) >= std::abs(fx)) break;
        x = next;
    }
    return x;
}

std::vector<double> scan(std::span<const double> c, std::size_t grid) {
    std::vector<double> roots;
    const double h = (kUpper - kLower) / static_cast<double>(grid);
    double xa = kLower;
    double fa = evaluate_polynomial(c, xa);
    for (std::size_t i = 1; i <= grid; ++i) {
        const double xb = i == grid ? kUpper : kLower + h * static_cast<double>(i);
        const double fb = evaluate_polynomial(c, xb);
        if (fa == 0.0) {
            roots.push_back(xa);
        } else if (fb != 0.0 && (fa < 0.0) != (fb < 0.0)) {
            roots.push_back(refine(c, xa, xb));
        }
        xa = xb;
        fa = fb;
    }
    if (fa == 0.0) roots.push_back(xa);
    return roots;
}

void check_sigma(double sigma) {
    if (!(sigma >= kLower - kRangeSlack && sigma <= kUpper + kRangeSlack)) {
        throw NumericalError("sigma " + std::to_string(sigma) + " is outside the eigenvalue range [0,2]");
    }
}

std::uint64_t checked_count(std::int64_t v, const char* what) {
    if (v < 0) {
        throw NumericalError(std::string("negative multiplicity for ") + what +
                             "; graph metadata is inconsistent");
    }
    return static_cast<std::uint64_t>(v);
}

} // namespace

std::array<double, 4> cubic_coefficients(double sigma) {
    return {-sigma, 5.0 + 4.0 * sigma, -(10.0 + 2.0 * sigma), 4.0};
}

std::array<double, 6> quintic_coefficients(double sigma, unsigned k) {
    const double kd = k;
    return {
        -sigma * (kd + 5.0),
        25.0 * kd + 5.0 + 40.0 * sigma,
        -(100.0 * kd + 40.0 + 84.0 * sigma),
        140.0 * kd + 84.0 + 64.0 * sigma,
        -(80.0 * kd + 64.0 + 16.0 * sigma),
        16.0 * kd + 16.0,
    };
}

double evaluate_polynomial(std::span<const double> c, double x) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<double> isolate_roots(std::span<const double> c, std::size_t expected) {
    auto roots = scan(c, kCoarseGrid);
    if (roots.size() != expected) roots = scan(c, kFineGrid);
    if (roots.size() != expected) {
        throw NumericalError("found " + std::to_string(roots.size()) + " roots in [0,2], expected " +
                             std::to_string(expected));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

RootSet cubic_roots(double sigma) {
    check_sigma(sigma);
    const auto c = cubic_coefficients(sigma);
    return RootSet{isolate_roots(c, 3)};
}

RootSet quintic_roots(double sigma, unsigned k) {
    check_sigma(sigma);
    if (k < 1) throw InputError(InputError::Kind::BadParameter, "k must be at least 1");
    const auto c = quintic_coefficients(sigma, k);
    return RootSet{isolate_roots(c, 5)};
}

double FixedValues::phi_minus() noexcept { return (5.0 - sqrt5()) / 4.0; }
double FixedValues::phi_plus() noexcept { return (5.0 + sqrt5()) / 4.0; }
double FixedValues::psi_minus() noexcept { return (3.0 - sqrt5()) / 4.0; }
double FixedValues::psi_plus() noexcept { return (3.0 + sqrt5()) / 4.0; }
double FixedValues::sigma0_minus(unsigned k) noexcept { return (5.0 * k + 3.0 - disc(k)) / (4.0 * (k + 1.0)); }
double FixedValues::sigma0_plus(unsigned k) noexcept { return (5.0 * k + 3.0 + disc(k)) / (4.0 * (k + 1.0)); }
double FixedValues::sigma2_minus(unsigned k) noexcept { return (3.0 * k + 5.0 - disc(k)) / (4.0 * (k + 1.0)); }
double FixedValues::sigma2_plus(unsigned k) noexcept { return (3.0 * k + 5.0 + disc(k)) / (4.0 * (k + 1.0)); }

Spectrum step_spectrum(const Spectrum& prev, unsigned k) {
    if (k < 1) throw InputError(InputError::Kind::BadParameter, "k must be at least 1");
    const GraphMeta& meta = prev.meta;

    std::uint64_t total = 0;
    for (const auto& e : prev.entries) total += e.multiplicity;
    if (total != prev.total_dim || total != meta.num_vertices) {
        throw NumericalError("spectrum has total multiplicity " + std::to_string(total) + " but the graph has " +
                             std::to_string(meta.num_vertices) + " vertices");
    }

    std::uint64_t zero_mult = 0;
    std::uint64_t two_mult = 0;
    std::vector<SpectrumEntry> raw;
    for (const auto& e : prev.entries) {
        check_sigma(e.value);
        if (std::abs(e.value) <= kEndpointTolerance) {
            zero_mult += e.multiplicity;
            continue;
        }
        if (std::abs(e.value - 2.0) <= kEndpointTolerance) {
            two_mult += e.multiplicity;
            continue;
        }
        const RootSet rs = k == 1 ? cubic_roots(e.value) : quintic_roots(e.value, k);
        const Family tag = k == 1 ? Family::CubicImage : Family::QuinticImage;
        for (double r : rs.roots) raw.push_back(SpectrumEntry{r, e.multiplicity, tag});
    }
    if (zero_mult != 1) {
        throw NumericalError("eigenvalue 0 has multiplicity " + std::to_string(zero_mult) +
                             "; expected 1 for a connected graph");
    }
    if (two_mult > 0 && !meta.bipartite) {
        throw NumericalError("eigenvalue 2 present but the graph is flagged non-bipartite");
    }
    if (meta.bipartite && two_mult != 1) {
        throw NumericalError("bipartite graph must have eigenvalue 2 with multiplicity 1, found " +
                             std::to_string(two_mult));
    }

    const GraphSize next = size_after(meta.num_vertices, meta.num_edges, k, 1);
    if (next.num_vertices > std::numeric_limits<std::uint64_t>::max() / 8) {
        throw NumericalError("graph order overflows 64-bit multiplicity bookkeeping");
    }

    const auto N = static_cast<std::int64_t>(meta.num_vertices);
    const auto E = static_cast<std::int64_t>(meta.num_edges);
    const auto kk = static_cast<std::int64_t>(k);
    const std::int64_t bip = meta.bipartite ? 1 : 0;

    raw.push_back(SpectrumEntry{0.0, 1, Family::Zero});
    if (meta.bipartite) raw.push_back(SpectrumEntry{2.0, 1, Family::Two});

    const std::uint64_t phi = checked_count(kk * E - N + 1, "the (5+-sqrt5)/4 pair");
    const std::uint64_t psi = checked_count(kk * E - N + bip, "the (3+-sqrt5)/4 pair");
    raw.push_back(SpectrumEntry{FixedValues::phi_minus(), phi, Family::PhiPair});
    raw.push_back(SpectrumEntry{FixedValues::phi_plus(), phi, Family::PhiPair});
    raw.push_back(SpectrumEntry{FixedValues::psi_minus(), psi, Family::PsiPair});
    raw.push_back(SpectrumEntry{FixedValues::psi_plus(), psi, Family::PsiPair});

    if (k == 1) {
        raw.push_back(SpectrumEntry{0.5, meta.num_vertices, Family::HalfPair});
        raw.push_back(SpectrumEntry{1.5, meta.num_vertices, Family::HalfPair});
    } else {
        raw.push_back(SpectrumEntry{FixedValues::sigma0_minus(k), 1, Family::Sigma0Extra});
        raw.push_back(SpectrumEntry{FixedValues::sigma0_plus(k), 1, Family::Sigma0Extra});
        if (meta.bipartite) {
            raw.push_back(SpectrumEntry{FixedValues::sigma2_minus(k), 1, Family::Sigma2Extra});
            raw.push_back(SpectrumEntry{FixedValues::sigma2_plus(k), 1, Family::Sigma2Extra});
        }
    }

    GraphMeta out_meta{next.num_vertices.convert_to<std::uint64_t>(), next.num_edges.convert_to<std::uint64_t>(),
                       meta.bipartite};
    Spectrum out = assemble_spectrum(std::move(raw), out_meta);
    if (out.total_dim != out_meta.num_vertices) {
        throw NumericalError("recursion produced " + std::to_string(out.total_dim) + " eigenvalues for a graph of order " +
                             std::to_string(out_meta.num_vertices));
    }
    return out;
}

Spectrum spectrum_n(const Graph& g, TransformParams p) {
    if (p.k < 1) throw InputError(InputError::Kind::BadParameter, "k must be at least 1");
    require_connected_with_edges(g);
    Spectrum s = spectrum_oracle(g);
    for (unsigned i = 0; i < p.n; ++i) s = step_spectrum(s, p.k);
    return s;
}

} // namespace hexlap
