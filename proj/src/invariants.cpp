#include "hexlap/invariants.hpp"

#include "hexlap/error.hpp"
#include "hexlap/iterative_spectrum.hpp"
#include "hexlap/spectral_oracle.hpp"

#include <cmath>
#include <sstream>

namespace hexlap {

namespace {

constexpr double kZeroTolerance = 1e-7;

// base^e for possibly negative e.
Rational rpow(const Rational& base, int e) {
    if (e >= 0) return pow_rat(base, static_cast<unsigned>(e));
    return 1 / pow_rat(base, static_cast<unsigned>(-e));
}

Rational rat(long long num, long long den = 1) { return Rational(num) / Rational(den); }

BigInt integral_exponent(const Rational& r, const char* what) {
    if (boost::multiprecision::denominator(r) != 1) {
        throw DomainError(std::string("exponent of ") + what + " is not an integer: " + r.str());
    }
    if (r < 0) throw DomainError(std::string("exponent of ") + what + " is negative: " + r.str());
    return boost::multiprecision::numerator(r);
}

BigExponentProduct make_product(unsigned base_a, const Rational& exp_a, unsigned base_b, const Rational& exp_b,
                                const BigInt& tau0) {
    BigExponentProduct p;
    p.factors.push_back({base_a, integral_exponent(exp_a, std::to_string(base_a).c_str())});
    p.factors.push_back({base_b, integral_exponent(exp_b, std::to_string(base_b).c_str())});
    p.cofactor = tau0;
    return p;
}

void require_k(unsigned k) {
    if (k < 1) throw InputError(InputError::Kind::BadParameter, "k must be at least 1");
}

} // namespace

// ---------------------------------------------------------------------------
// BigExponentProduct

BigInt BigExponentProduct::value(std::size_t max_digits) const {
    if (log10() > static_cast<double>(max_digits)) {
        throw DomainError("product has more than " + std::to_string(max_digits) + " digits");
    }
    BigInt v = cofactor;
    for (const auto& f : factors) v *= pow_big(BigInt(f.base), f.exponent.convert_to<unsigned>());
    return v;
}

double BigExponentProduct::log10() const {
    double acc = log10_big(cofactor);
    for (const auto& f : factors) acc += f.exponent.convert_to<double>() * std::log10(static_cast<double>(f.base));
    return acc;
}

std::string BigExponentProduct::to_string() const {
    std::ostringstream os;
    for (const auto& f : factors) os << f.base << '^' << f.exponent << " * ";
    os << cofactor;
    return os.str();
}

std::string_view method_name(InvariantMethod m) {
    switch (m) {
    case InvariantMethod::Spectrum: return "spectrum";
    case InvariantMethod::ClosedForm: return "closed-form";
    case InvariantMethod::Oracle: return "oracle";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// Spectral evaluation

double kemeny_from_spectrum(const Spectrum& s) {
    std::uint64_t zeros = 0;
    double sum = 0.0;
    for (const auto& e : s.entries) {
        if (std::abs(e.value) <= kZeroTolerance) {
            zeros += e.multiplicity;
            continue;
        }
        sum += static_cast<double>(e.multiplicity) / e.value;
    }
    if (zeros != 1) {
        throw NumericalError("Kemeny's constant needs a simple zero eigenvalue; found multiplicity " +
                             std::to_string(zeros));
    }
    return sum;
}

double kirchhoff_from_kemeny(const BigInt& num_edges, double kemeny) {
    return 2.0 * num_edges.convert_to<double>() * kemeny;
}

double tau_log10_from_spectrum(const Spectrum& s, double degrees_product_log10) {
    std::uint64_t zeros = 0;
    double acc = degrees_product_log10 - std::log10(2.0 * static_cast<double>(s.meta.num_edges));
    for (const auto& e : s.entries) {
        if (std::abs(e.value) <= kZeroTolerance) {
            zeros += e.multiplicity;
            continue;
        }
        if (e.value < 0.0) throw NumericalError("negative eigenvalue in spanning-tree product");
        acc += static_cast<double>(e.multiplicity) * std::log10(e.value);
    }
    if (zeros != 1) {
        throw NumericalError("spanning-tree product needs a simple zero eigenvalue; found multiplicity " +
                             std::to_string(zeros));
    }
    return acc;
}

double degree_product_log10(const Graph& g) {
    double acc = 0.0;
    for (auto d : degrees(g)) acc += std::log10(static_cast<double>(d));
    return acc;
}

double degree_product_log10_iterated(const Graph& g, TransformParams p) {
    require_k(p.k);
    const double lk = std::log10(p.k + 1.0);
    double acc = degree_product_log10(g) + static_cast<double>(p.n) * static_cast<double>(g.num_vertices()) * lk;
    BigInt e = g.num_edges();
    for (unsigned j = 1; j <= p.n; ++j) {
        const double created = 4.0 * p.k * e.convert_to<double>();
        acc += created * (std::log10(2.0) + static_cast<double>(p.n - j) * lk);
        e *= 5 * p.k + 1;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// k = 1

Rational kemeny_step_k1_exact(const Rational& k_prev, const BigInt& n0, const BigInt& e0, unsigned n) {
    if (n < 1) throw InputError(InputError::Kind::BadParameter, "one-step recursion needs n >= 1");
    const Rational rest = -rat(4, 3) * Rational(n0) +
                          (rat(104, 15) * pow_rat(6, n - 1) + rat(16, 15)) * Rational(e0) - 2;
    return 5 * k_prev + rest;
}

Rational kemeny_closed_k1_exact(const Rational& k0, const BigInt& n0, const BigInt& e0, unsigned n) {
    const Rational five_n = pow_rat(5, n);
    const Rational rest = -rat(1, 3) * (five_n - 1) * Rational(n0) +
                          rat(104, 3) * (pow_rat(rat(6, 5), n) - 1) * rpow(5, static_cast<int>(n) - 1) * Rational(e0) +
                          rat(4, 15) * (five_n - 1) * Rational(e0) - rat(1, 2) * (five_n - 1);
    return five_n * k0 + rest;
}

Rational kirchhoff_step_k1_exact(const Rational& kf_prev, const BigInt& n0, const BigInt& e0, unsigned n) {
    if (n < 1) throw InputError(InputError::Kind::BadParameter, "one-step recursion needs n >= 1");
    const Rational N(n0), E(e0);
    const Rational six = pow_rat(6, n - 1);
    const Rational rest =
        -16 * six * E * N + (rat(416, 5) * six * six + rat(64, 5) * six) * E * E - 24 * six * E;
    return 30 * kf_prev + rest;
}

Rational kirchhoff_closed_k1_exact(const Rational& kf0, const BigInt& n0, const BigInt& e0, unsigned n) {
    const Rational N(n0), E(e0);
    const Rational six = rpow(6, static_cast<int>(n) - 1);
    const Rational five_n1 = pow_rat(5, n) - 1;
    const Rational rest = -4 * six * five_n1 * E * N + rat(16, 5) * six * five_n1 * E * E +
                          416 * rpow(30, static_cast<int>(n) - 1) * (pow_rat(rat(6, 5), n) - 1) * E * E -
                          6 * six * five_n1 * E;
    return pow_rat(30, n) * kf0 + rest;
}

std::pair<Rational, Rational> tau_step_exponents_k1(const BigInt& n0, const BigInt& e0, unsigned n) {
    if (n < 1) throw InputError(InputError::Kind::BadParameter, "one-step recursion needs n >= 1");
    const Rational N(n0), E(e0);
    const Rational six = pow_rat(6, n - 1);
    return {(rat(1, 5) * six + rat(4, 5)) * E - N + 1, N + rat(4, 5) * (six - 1) * E - 1};
}

BigExponentProduct tau_closed_k1(const BigInt& tau0, const BigInt& n0, const BigInt& e0, unsigned n) {
    const Rational N(n0), E(e0), nn(n);
    const Rational six_n1 = pow_rat(6, n) - 1;
    const Rational exp5 = nn * (rat(4, 5) * E - N + 1) + rat(1, 25) * six_n1 * E;
    const Rational exp6 = nn * (N - rat(4, 5) * E - 1) + rat(4, 25) * six_n1 * E;
    return make_product(5, exp5, 6, exp6, tau0);
}

// ---------------------------------------------------------------------------
// General k

MuEta mu_eta(unsigned k, unsigned n) {
    require_k(k);
    const Rational kr(k);
    return MuEta{
        (kr + 5) / (24 * kr) * (pow_rat(5 * (5 * kr + 1) / (kr + 5), n) - 1),
        -(kr + 5) / kr * (pow_rat(5 / (kr + 5), n) - 1),
    };
}

BigInt xi(unsigned k, unsigned n) {
    require_k(k);
    return (pow_big(BigInt(5 * k + 1), n) - 1) / (5 * k);
}

Rational kemeny_closed_generic_exact(const Rational& k0, const BigInt& n0, const BigInt& e0, unsigned k, unsigned n) {
    require_k(k);
    const auto [mu, eta] = mu_eta(k, n);
    const Rational kr(k), N(n0), E(e0);
    const Rational q = 5 * kr + 1;
    const Rational ratio = (25 * kr + 5) / (kr + 5);
    const Rational rest =
        (8 * kr * (5 * kr + 21) * eta / (5 * (kr + 5)) * rpow(q, static_cast<int>(n) - 1) +
         32 * kr * mu / (5 * (kr + 5))) * E -
        8 * kr * mu / (kr + 5) * N + 4 * (5 * kr * kr - 23 * kr) * mu / ((kr + 5) * q);
    return pow_rat(ratio, n) * k0 + rest;
}

Rational kemeny_step_k_exact(const Rational& k_prev, const BigInt& n0, const BigInt& e0, unsigned k, unsigned n) {
    require_k(k);
    if (n < 1) throw InputError(InputError::Kind::BadParameter, "one-step recursion needs n >= 1");
    const Rational kr(k), N(n0), E(e0);
    const Rational q = 5 * kr + 1;
    const Rational rest = (8 * kr * (5 * kr + 21) / (5 * (kr + 5)) * pow_rat(q, n - 1) + 32 * kr / (5 * (kr + 5))) * E -
                          8 * kr / (kr + 5) * N + 4 * (5 * kr * kr - 23 * kr) / ((kr + 5) * q);
    return (25 * kr + 5) / (kr + 5) * k_prev + rest;
}

Rational kirchhoff_closed_generic_exact(const Rational& kf0, const BigInt& n0, const BigInt& e0, unsigned k, unsigned n) {
    require_k(k);
    const auto [mu, eta] = mu_eta(k, n);
    const Rational kr(k), N(n0), E(e0);
    const Rational q = 5 * kr + 1;
    const Rational ratio = 5 * q * q / (kr + 5);
    const Rational rest =
        -16 * kr * pow_rat(q, n) * mu / (kr + 5) * E * N +
        (64 * kr * mu / (5 * (kr + 5)) * pow_rat(q, n) +
         16 * kr * (5 * kr + 21) * eta / (5 * (kr + 5)) * rpow(q, 2 * static_cast<int>(n) - 1)) * E * E +
        8 * (5 * kr * kr - 23 * kr) * mu / (kr + 5) * rpow(q, static_cast<int>(n) - 1) * E;
    return pow_rat(ratio, n) * kf0 + rest;
}

Rational kirchhoff_step_k_exact(const Rational& kf_prev, const BigInt& n0, const BigInt& e0, unsigned k, unsigned n) {
    require_k(k);
    if (n < 1) throw InputError(InputError::Kind::BadParameter, "one-step recursion needs n >= 1");
    const Rational kr(k), N(n0), E(e0);
    const Rational q = 5 * kr + 1;
    // The E0^2 coefficient carries a factor k on its (5k+1)^n term; without it
    // the step disagrees with the closed form and with Kf' = 2E K for k >= 2.
    const Rational rest = -16 * kr * pow_rat(q, n) / (kr + 5) * E * N +
                          (64 * kr / (5 * (kr + 5)) * pow_rat(q, n) +
                           16 * kr * (5 * kr + 21) / (5 * (kr + 5)) * pow_rat(q, 2 * n - 1)) * E * E +
                          8 * (5 * kr * kr - 23 * kr) / (kr + 5) * pow_rat(q, n - 1) * E;
    return 5 * q * q / (kr + 5) * kf_prev + rest;
}

std::pair<Rational, Rational> tau_step_exponents_k(const BigInt& n0, const BigInt& e0, unsigned k, unsigned n) {
    require_k(k);
    if (n < 1) throw InputError(InputError::Kind::BadParameter, "one-step recursion needs n >= 1");
    const Rational kr(k), N(n0), E(e0);
    const Rational qn1 = pow_rat(5 * kr + 1, n - 1);
    return {N + rat(4, 5) * (qn1 - 1) * E - 1, ((5 * kr - 4) / 5 * qn1 + rat(4, 5)) * E - N + 1};
}

BigExponentProduct tau_closed_generic(const BigInt& tau0, const BigInt& n0, const BigInt& e0, unsigned k,
                                      unsigned n) {
    require_k(k);
    const Rational kr(k), N(n0), E(e0), nn(n);
    const Rational x(xi(k, n));
    const Rational exp_k5 = nn * (N - rat(4, 5) * E - 1) + rat(4, 5) * x * E;
    const Rational exp_5 = nn * (rat(4, 5) * E - N + 1) + (5 * kr - 4) / 5 * x * E;
    return make_product(k + 5, exp_k5, 5, exp_5, tau0);
}

Rational kemeny_closed_k_exact(const Rational& k0, const BigInt& n0, const BigInt& e0, unsigned k, unsigned n) {
    return k == 1 ? kemeny_closed_k1_exact(k0, n0, e0, n) : kemeny_closed_generic_exact(k0, n0, e0, k, n);
}

Rational kirchhoff_closed_k_exact(const Rational& kf0, const BigInt& n0, const BigInt& e0, unsigned k, unsigned n) {
    return k == 1 ? kirchhoff_closed_k1_exact(kf0, n0, e0, n) : kirchhoff_closed_generic_exact(kf0, n0, e0, k, n);
}

BigExponentProduct tau_closed_k(const BigInt& tau0, const BigInt& n0, const BigInt& e0, unsigned k, unsigned n) {
    return k == 1 ? tau_closed_k1(tau0, n0, e0, n) : tau_closed_generic(tau0, n0, e0, k, n);
}

// Double-precision entry points. The seed converts to a rational exactly, so
// the only rounding is the final conversion.

double kemeny_step_k1(double k_prev, const BigInt& n0, const BigInt& e0, unsigned n) {
    return to_double(kemeny_step_k1_exact(Rational(k_prev), n0, e0, n));
}
double kemeny_closed_k1(double k0, const BigInt& n0, const BigInt& e0, unsigned n) {
    return to_double(kemeny_closed_k1_exact(Rational(k0), n0, e0, n));
}
double kirchhoff_step_k1(double kf_prev, const BigInt& n0, const BigInt& e0, unsigned n) {
    return to_double(kirchhoff_step_k1_exact(Rational(kf_prev), n0, e0, n));
}
double kirchhoff_closed_k1(double kf0, const BigInt& n0, const BigInt& e0, unsigned n) {
    return to_double(kirchhoff_closed_k1_exact(Rational(kf0), n0, e0, n));
}
double kemeny_closed_generic(double k0, const BigInt& n0, const BigInt& e0, unsigned k, unsigned n) {
    return to_double(kemeny_closed_generic_exact(Rational(k0), n0, e0, k, n));
}
double kirchhoff_closed_generic(double kf0, const BigInt& n0, const BigInt& e0, unsigned k, unsigned n) {
    return to_double(kirchhoff_closed_generic_exact(Rational(kf0), n0, e0, k, n));
}
double kemeny_step_k(double k_prev, const BigInt& n0, const BigInt& e0, unsigned k, unsigned n) {
    return to_double(kemeny_step_k_exact(Rational(k_prev), n0, e0, k, n));
}
double kirchhoff_step_k(double kf_prev, const BigInt& n0, const BigInt& e0, unsigned k, unsigned n) {
    return to_double(kirchhoff_step_k_exact(Rational(kf_prev), n0, e0, k, n));
}
double kemeny_closed_k(double k0, const BigInt& n0, const BigInt& e0, unsigned k, unsigned n) {
    return to_double(kemeny_closed_k_exact(Rational(k0), n0, e0, k, n));
}
double kirchhoff_closed_k(double kf0, const BigInt& n0, const BigInt& e0, unsigned k, unsigned n) {
    return to_double(kirchhoff_closed_k_exact(Rational(kf0), n0, e0, k, n));
}

// ---------------------------------------------------------------------------

InvariantReport compute_invariants(const Graph& g, TransformParams p, InvariantMethod method,
                                   std::uint64_t vertex_budget) {
    require_k(p.k);
    require_connected_with_edges(g);
    const BigInt n0 = g.num_vertices();
    const BigInt e0 = g.num_edges();
    const GraphSize size = size_after(n0, e0, p.k, p.n);

    InvariantReport r;
    r.method = method;
    r.num_vertices = size.num_vertices;
    r.num_edges = size.num_edges;

    switch (method) {
    case InvariantMethod::ClosedForm: {
        const double k0 = kemeny_from_spectrum(spectrum_oracle(g));
        const double kf0 = kirchhoff_from_kemeny(e0, k0);
        const BigInt tau0 = spanning_trees_matrix_tree(g);
        r.kemeny = kemeny_closed_k(k0, n0, e0, p.k, p.n);
        r.kirchhoff = kirchhoff_closed_k(kf0, n0, e0, p.k, p.n);
        const BigExponentProduct tau = tau_closed_k(tau0, n0, e0, p.k, p.n);
        r.tau_log10 = tau.log10();
        r.tau_factored = tau.to_string();
        if (r.tau_log10 <= 100000.0) r.tau_exact = tau.value();
        break;
    }
    case InvariantMethod::Spectrum: {
        const Spectrum s = spectrum_n(g, p);
        r.kemeny = kemeny_from_spectrum(s);
        r.kirchhoff = kirchhoff_from_kemeny(size.num_edges, r.kemeny);
        r.tau_log10 = tau_log10_from_spectrum(s, degree_product_log10_iterated(g, p));
        break;
    }
    case InvariantMethod::Oracle: {
        const Graph h = hexagonal_iter(g, p, vertex_budget);
        const Spectrum s = spectrum_oracle(h);
        r.kemeny = kemeny_from_spectrum(s);
        r.kirchhoff = kirchhoff_from_kemeny(size.num_edges, r.kemeny);
        r.tau_exact = spanning_trees_matrix_tree(h);
        r.tau_log10 = log10_big(*r.tau_exact);
        break;
    }
    }
    return r;
}

} // namespace hexlap
