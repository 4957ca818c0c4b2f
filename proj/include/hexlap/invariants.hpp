#pragma once

#include "hexlap/bignum.hpp"
#include "hexlap/graph.hpp"
#include "hexlap/hex_transform.hpp"
#include "hexlap/spectrum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hexlap {

/// Exact product  prod(base_i ^ exponent_i) * cofactor.
///
/// Spanning-tree counts of iterated graphs reach hundreds of digits after two
/// steps; keeping them factored lets callers take logarithms or compare
/// without expanding.
struct BigExponentProduct {
    struct Factor {
        unsigned base = 0;
        BigInt exponent;
    };
    std::vector<Factor> factors;
    BigInt cofactor = 1;

    // Throws DomainError when the expansion would exceed `max_digits`.
    BigInt value(std::size_t max_digits = 100000) const;
    double log10() const;
    std::string to_string() const; // e.g. "5^8 * 6^35 * 6"
};

enum class InvariantMethod { Spectrum, ClosedForm, Oracle };

std::string_view method_name(InvariantMethod m);

struct InvariantReport {
    double kemeny = 0.0;
    double kirchhoff = 0.0;
    std::optional<BigInt> tau_exact;
    std::optional<std::string> tau_factored;
    double tau_log10 = 0.0;
    BigInt num_vertices;
    BigInt num_edges;
    InvariantMethod method = InvariantMethod::ClosedForm;
};

// --- from spectra -----------------------------------------------------------

/// Sum of 1/lambda over the nonzero eigenvalues. Throws NumericalError when
/// the zero eigenvalue is missing or not simple.
double kemeny_from_spectrum(const Spectrum& s);

double kirchhoff_from_kemeny(const BigInt& num_edges, double kemeny);

/// log10 tau = log10 prod(d_i) + sum log10(lambda_i) - log10(2E).
double tau_log10_from_spectrum(const Spectrum& s, double degrees_product_log10);

double degree_product_log10(const Graph& g);

/// log10 of the degree product of H^k_n(g), from g alone: an original vertex
/// has degree (k+1)^n d(v); a vertex created at step j has degree
/// 2 (k+1)^(n-j).
double degree_product_log10_iterated(const Graph& g, TransformParams p);

// --- closed forms, k = 1 ----------------------------------------------------
// All take the base-graph values (K(G), Kf'(G), tau(G)) and sizes N0, E0.
// Coefficients are exact rationals; only the seed enters as a double.

double kemeny_step_k1(double k_prev, const BigInt& n0, const BigInt& e0, unsigned n);
double kemeny_closed_k1(double k0, const BigInt& n0, const BigInt& e0, unsigned n);
double kirchhoff_step_k1(double kf_prev, const BigInt& n0, const BigInt& e0, unsigned n);
double kirchhoff_closed_k1(double kf0, const BigInt& n0, const BigInt& e0, unsigned n);

// Exponents (of 5, of 6) for one step from level n-1 to level n.
std::pair<Rational, Rational> tau_step_exponents_k1(const BigInt& n0, const BigInt& e0, unsigned n);
BigExponentProduct tau_closed_k1(const BigInt& tau0, const BigInt& n0, const BigInt& e0, unsigned n);

// --- closed forms, general k ------------------------------------------------

struct MuEta {
    Rational mu;
    Rational eta;
};

MuEta mu_eta(unsigned k, unsigned n);

/// sum_{i<n} (5k+1)^i
BigInt xi(unsigned k, unsigned n);

// The *_generic forms evaluate the general-k expressions for any k >= 1; the
// plain forms dispatch k = 1 to the k = 1 expressions.
double kemeny_closed_generic(double k0, const BigInt& n0, const BigInt& e0, unsigned k, unsigned n);
double kirchhoff_closed_generic(double kf0, const BigInt& n0, const BigInt& e0, unsigned k, unsigned n);
BigExponentProduct tau_closed_generic(const BigInt& tau0, const BigInt& n0, const BigInt& e0, unsigned k, unsigned n);

double kemeny_closed_k(double k0, const BigInt& n0, const BigInt& e0, unsigned k, unsigned n);
double kirchhoff_closed_k(double kf0, const BigInt& n0, const BigInt& e0, unsigned k, unsigned n);
BigExponentProduct tau_closed_k(const BigInt& tau0, const BigInt& n0, const BigInt& e0, unsigned k, unsigned n);

double kemeny_step_k(double k_prev, const BigInt& n0, const BigInt& e0, unsigned k, unsigned n);
double kirchhoff_step_k(double kf_prev, const BigInt& n0, const BigInt& e0, unsigned k, unsigned n);
// Exponents (of k+5, of 5) for one step from level n-1 to level n.
std::pair<Rational, Rational> tau_step_exponents_k(const BigInt& n0, const BigInt& e0, unsigned k, unsigned n);

// --- exact variants -----------------------------------------------------------
// Same formulas with a rational seed and a rational result; used where
// printed references carry more digits than a double holds.

Rational kemeny_step_k1_exact(const Rational& k_prev, const BigInt& n0, const BigInt& e0, unsigned n);
Rational kemeny_closed_k1_exact(const Rational& k0, const BigInt& n0, const BigInt& e0, unsigned n);
Rational kirchhoff_step_k1_exact(const Rational& kf_prev, const BigInt& n0, const BigInt& e0, unsigned n);
Rational kirchhoff_closed_k1_exact(const Rational& kf0, const BigInt& n0, const BigInt& e0, unsigned n);
Rational kemeny_closed_generic_exact(const Rational& k0, const BigInt& n0, const BigInt& e0, unsigned k, unsigned n);
Rational kirchhoff_closed_generic_exact(const Rational& kf0, const BigInt& n0, const BigInt& e0, unsigned k,
                                        unsigned n);
Rational kemeny_step_k_exact(const Rational& k_prev, const BigInt& n0, const BigInt& e0, unsigned k, unsigned n);
Rational kirchhoff_step_k_exact(const Rational& kf_prev, const BigInt& n0, const BigInt& e0, unsigned k, unsigned n);
Rational kemeny_closed_k_exact(const Rational& k0, const BigInt& n0, const BigInt& e0, unsigned k, unsigned n);
Rational kirchhoff_closed_k_exact(const Rational& kf0, const BigInt& n0, const BigInt& e0, unsigned k, unsigned n);

// --- end to end ---------------------------------------------------------------

/// Kemeny, Kirchhoff and tau for H^k_n(g).
///
/// ClosedForm seeds the closed forms with the oracle values of g; Spectrum
/// runs the spectral recursion and reports tau as log10 only; Oracle builds
/// the graph and uses the dense eigensolver and the Matrix-Tree theorem.
InvariantReport compute_invariants(const Graph& g, TransformParams p, InvariantMethod method,
                                   std::uint64_t vertex_budget = kDefaultVertexBudget);

} // namespace hexlap
