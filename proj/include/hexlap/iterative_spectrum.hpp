#pragma once

#include "hexlap/graph.hpp"
#include "hexlap/hex_transform.hpp"
#include "hexlap/spectrum.hpp"

#include <array>
#include <span>
#include <vector>

namespace hexlap {

/// Real roots of a recursion polynomial at one sigma, ascending.
struct RootSet {
    std::vector<double> roots;
};

// Coefficients in ascending powers of lambda.
std::array<double, 4> cubic_coefficients(double sigma);
std::array<double, 6> quintic_coefficients(double sigma, unsigned k);

double evaluate_polynomial(std::span<const double> ascending, double x);

/// Roots of 4x^3 - (10+2s)x^2 + (5+4s)x - s on [0,2]. These are the
/// eigenvalues at level n descending from eigenvalue s at level n-1 when k=1.
RootSet cubic_roots(double sigma);

/// Roots of the degree-5 recursion polynomial for general k. Also valid for
/// k = 1, where it factors as 8(x-1/2)(x-3/2) times the cubic.
RootSet quintic_roots(double sigma, unsigned k);

/// Isolates exactly `expected` real roots of `ascending` in [0,2]: sign
/// changes on a uniform grid, bisection, then a Newton polish that must stay
/// inside its bracket. Retries on a finer grid before throwing NumericalError.
std::vector<double> isolate_roots(std::span<const double> ascending, std::size_t expected);

// Closed radicals for the eigenvalues that do not depend on sigma.
struct FixedValues {
    static double phi_minus() noexcept;
    static double phi_plus() noexcept;
    static double psi_minus() noexcept;
    static double psi_plus() noexcept;
    static double sigma0_minus(unsigned k) noexcept;
    static double sigma0_plus(unsigned k) noexcept;
    static double sigma2_minus(unsigned k) noexcept;
    static double sigma2_plus(unsigned k) noexcept;
};

/// Maps the spectrum of H^k_{n-1}(G) to that of H^k_n(G) without building the
/// graph. Every eigenvalue s outside {0, 2} contributes its cubic (k = 1) or
/// quintic (k >= 2) roots with s's multiplicity; the remaining mass comes from
/// the sigma-independent families, whose multiplicities depend only on N, E, k
/// and bipartiteness. The images of 0 and 2 are already part of those
/// families and are not added again.
///
/// Throws NumericalError when `prev` is structurally inconsistent: total
/// multiplicity different from N, values outside [0,2], a zero eigenvalue
/// that is missing or repeated, or an eigenvalue 2 that disagrees with the
/// bipartite flag.
Spectrum step_spectrum(const Spectrum& prev, unsigned k);

/// Spectrum of H^k_n(g): dense oracle on g, then n recursion steps.
Spectrum spectrum_n(const Graph& g, TransformParams p);

} // namespace hexlap
