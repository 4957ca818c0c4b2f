#include "hexlap/error.hpp"
#include "hexlap/hex_transform.hpp"
#include "hexlap/invariants.hpp"
#include "hexlap/iterative_spectrum.hpp"
#include "hexlap/spectral_oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace hexlap;

namespace {

bool close_rel(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b)); }

const std::vector<std::string> kBases{"K2", "P3", "P6", "C5", "C6", "C7", "K4", "K5"};

struct Seeds {
    BigInt n0, e0;
    double kemeny, kirchhoff;
    BigInt tau;
};

Seeds seeds_of(const Graph& g) {
    const double k = kemeny_from_spectrum(spectrum_oracle(g));
    return {g.num_vertices(), g.num_edges(), k, 2.0 * g.num_edges() * k, spanning_trees_matrix_tree(g)};
}

// Sums the one-step exponents over n steps.
std::pair<BigInt, BigInt> exponents_from_steps(const Seeds& s, unsigned k, unsigned n) {
    Rational a_total = 0, b_total = 0;
    for (unsigned j = 1; j <= n; ++j) {
        const auto [a, b] = k == 1 ? tau_step_exponents_k1(s.n0, s.e0, j) : tau_step_exponents_k(s.n0, s.e0, k, j);
        REQUIRE(boost::multiprecision::denominator(a) == 1);
        REQUIRE(boost::multiprecision::denominator(b) == 1);
        a_total += a;
        b_total += b;
    }
    return {boost::multiprecision::numerator(a_total), boost::multiprecision::numerator(b_total)};
}

} // namespace

TEST_SUITE("invariants") {

TEST_CASE("Kemeny's constant from a spectrum") {
    const Spectrum c6 = spectrum_oracle(generate(GraphKind::Cycle, 6));
    CHECK(kemeny_from_spectrum(c6) == doctest::Approx(35.0 / 6.0).epsilon(1e-12));
    const Spectrum k2 = spectrum_oracle(generate(GraphKind::Complete, 2));
    CHECK(kemeny_from_spectrum(k2) == doctest::Approx(0.5));
    CHECK(kirchhoff_from_kemeny(6, 35.0 / 6.0) == doctest::Approx(70.0));
    CHECK_THROWS_AS(kemeny_from_spectrum(testing::spectrum_of({{0.0, 2}}, {})), NumericalError);
    CHECK_THROWS_AS(kemeny_from_spectrum(testing::spectrum_of({{1.0, 2}}, {})), NumericalError);
}

TEST_CASE("spanning trees from a spectrum") {
    for (const auto& id : kBases) {
        const Graph g = testing::named(id);
        const double expected = log10_big(spanning_trees_matrix_tree(g));
        CHECK(tau_log10_from_spectrum(spectrum_oracle(g), degree_product_log10(g)) ==
              doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("iterated degree product matches the constructed graph") {
    for (const auto& id : {"P3", "C5", "K4"}) {
        for (unsigned k = 1; k <= 3; ++k) {
            const Graph g = testing::named(id);
            const Graph h = hexagonal_iter(g, {k, 2});
            CHECK(degree_product_log10_iterated(g, {k, 2}) == doctest::Approx(degree_product_log10(h)).epsilon(1e-12));
        }
    }
}

TEST_CASE("closed forms reproduce known values for the 6-cycle") {
    const BigInt six = 6;
    CHECK(kemeny_closed_k1(35.0 / 6.0, six, six, 1) == doctest::Approx(403.0 / 6.0).epsilon(1e-14));
    CHECK(kemeny_closed_k1(35.0 / 6.0, six, six, 2) == doctest::Approx(3491.0 / 6.0).epsilon(1e-14));
    CHECK(kemeny_closed_k(35.0 / 6.0, six, six, 2, 1) == doctest::Approx(126.768398268).epsilon(1e-10));
    CHECK(tau_closed_k1(6, six, six, 1).value() == 233280);
    CHECK(tau_closed_k1(6, six, six, 2).value() == pow_big(BigInt(5), 8) * pow_big(BigInt(6), 35));
    CHECK(tau_closed_k(6, six, six, 2, 1).value() == BigInt("7878281250"));
    CHECK(tau_closed_k1(1, 3, 2, 1).value() == 36);
}

TEST_CASE("product representation") {
    const BigExponentProduct p = tau_closed_k1(6, 6, 6, 1);
    CHECK(p.to_string() == "5^1 * 6^5 * 6");
    CHECK(p.log10() == doctest::Approx(std::log10(233280.0)).epsilon(1e-14));
    const BigExponentProduct big = tau_closed_k(6, 6, 6, 2, 8);
    CHECK_THROWS_AS(big.value(1000), DomainError);
    CHECK(big.log10() > 1000);
}

TEST_CASE("mu, eta and xi") {
    const MuEta m0 = mu_eta(2, 0);
    CHECK(m0.mu == 0);
    CHECK(m0.eta == 0);
    // k = 2: mu_1 = 7/48 (5*11/7 - 1) = 1, eta_1 = -7/2 (5/7 - 1) = 1.
    const MuEta m1 = mu_eta(2, 1);
    CHECK(m1.mu == 1);
    CHECK(m1.eta == 1);
    for (unsigned k = 1; k <= 5; ++k) {
        CHECK(xi(k, 0) == 0);
        CHECK(xi(k, 1) == 1);
        CHECK(xi(k, 3) == 1 + (5 * k + 1) + (5 * k + 1) * (5 * k + 1));
    }
    CHECK_THROWS_AS(mu_eta(0, 1), InputError);
}

TEST_CASE("closed forms equal their one-step recursions") {
    for (const auto& id : kBases) {
        const Seeds s = seeds_of(testing::named(id));
        for (unsigned k = 1; k <= 5; ++k) {
            Rational kem = Rational(s.kemeny);
            Rational kf = Rational(s.kirchhoff);
            for (unsigned n = 1; n <= 6; ++n) {
                CAPTURE(id);
                CAPTURE(k);
                CAPTURE(n);
                kem = k == 1 ? kemeny_step_k1_exact(kem, s.n0, s.e0, n) : kemeny_step_k_exact(kem, s.n0, s.e0, k, n);
                kf = k == 1 ? kirchhoff_step_k1_exact(kf, s.n0, s.e0, n)
                            : kirchhoff_step_k_exact(kf, s.n0, s.e0, k, n);
                const double closed_k = kemeny_closed_k(s.kemeny, s.n0, s.e0, k, n);
                const double closed_kf = kirchhoff_closed_k(s.kirchhoff, s.n0, s.e0, k, n);
                CHECK(close_rel(to_double(kem), closed_k, 1e-9));
                CHECK(close_rel(to_double(kf), closed_kf, 1e-9));

                const GraphSize size = size_after(s.n0, s.e0, k, n);
                const double two_e = 2.0 * size.num_edges.convert_to<double>();
                CHECK(close_rel(closed_kf, two_e * closed_k, 1e-9));
            }
        }
    }
}

TEST_CASE("double entry points agree with the exact forms") {
    const Seeds s = seeds_of(testing::named("C5"));
    CHECK(kemeny_step_k1(s.kemeny, s.n0, s.e0, 1) == doctest::Approx(kemeny_closed_k1(s.kemeny, s.n0, s.e0, 1)));
    CHECK(kirchhoff_step_k1(s.kirchhoff, s.n0, s.e0, 1) ==
          doctest::Approx(kirchhoff_closed_k1(s.kirchhoff, s.n0, s.e0, 1)));
    CHECK(kemeny_step_k(s.kemeny, s.n0, s.e0, 3, 1) == doctest::Approx(kemeny_closed_k(s.kemeny, s.n0, s.e0, 3, 1)));
    CHECK(kirchhoff_step_k(s.kirchhoff, s.n0, s.e0, 3, 1) ==
          doctest::Approx(kirchhoff_closed_k(s.kirchhoff, s.n0, s.e0, 3, 1)));
}

TEST_CASE("general-k expressions at k = 1 coincide with the k = 1 forms") {
    for (const auto& id : kBases) {
        const Seeds s = seeds_of(testing::named(id));
        for (unsigned n = 0; n <= 6; ++n) {
            CHECK(close_rel(kemeny_closed_generic(s.kemeny, s.n0, s.e0, 1, n), kemeny_closed_k1(s.kemeny, s.n0, s.e0, n),
                            1e-12));
            CHECK(close_rel(kirchhoff_closed_generic(s.kirchhoff, s.n0, s.e0, 1, n),
                            kirchhoff_closed_k1(s.kirchhoff, s.n0, s.e0, n), 1e-12));
            const BigExponentProduct g = tau_closed_generic(s.tau, s.n0, s.e0, 1, n);
            const BigExponentProduct k1 = tau_closed_k1(s.tau, s.n0, s.e0, n);
            // Same bases, 6 and 5, listed in the opposite order.
            CHECK(g.factors[0].exponent == k1.factors[1].exponent);
            CHECK(g.factors[1].exponent == k1.factors[0].exponent);
        }
    }
}

TEST_CASE("spanning-tree exponents are non-negative integers and telescope") {
    for (const auto& id : kBases) {
        const Seeds s = seeds_of(testing::named(id));
        for (unsigned k = 1; k <= 5; ++k) {
            for (unsigned n = 0; n <= 6; ++n) {
                CAPTURE(id);
                CAPTURE(k);
                CAPTURE(n);
                const BigExponentProduct p = tau_closed_k(s.tau, s.n0, s.e0, k, n);
                REQUIRE(p.factors.size() == 2);
                for (const auto& f : p.factors) CHECK(f.exponent >= 0);
                const auto [a, b] = exponents_from_steps(s, k, n);
                CHECK(p.factors[0].exponent == a);
                CHECK(p.factors[1].exponent == b);
                CHECK(p.cofactor == s.tau);
            }
        }
    }
}

TEST_CASE("negative exponents are a domain error") {
    // E0 < N0 - 1 cannot come from a connected graph.
    CHECK_THROWS_AS(tau_closed_k1(1, 5, 1, 1), DomainError);
    CHECK_THROWS_AS(tau_closed_k(1, 5, 1, 2, 1), DomainError);
}

TEST_CASE("closed forms match the oracle on constructed graphs") {
    struct Case {
        const char* id;
        unsigned k, n;
    };
    for (const Case c : {Case{"C6", 1, 1}, Case{"C6", 1, 2}, Case{"C6", 2, 1}, Case{"P3", 1, 2}, Case{"P3", 3, 1},
                         Case{"K4", 1, 1}, Case{"K4", 2, 1}, Case{"C5", 1, 1}, Case{"K2", 2, 2}}) {
        CAPTURE(c.id);
        CAPTURE(c.k);
        CAPTURE(c.n);
        const Graph g = testing::named(c.id);
        const Seeds s = seeds_of(g);
        const Graph h = hexagonal_iter(g, {c.k, c.n});
        const double k_oracle = kemeny_from_spectrum(spectrum_oracle(h));
        CHECK(close_rel(kemeny_closed_k(s.kemeny, s.n0, s.e0, c.k, c.n), k_oracle, 1e-9));
        const double k_spec = kemeny_from_spectrum(spectrum_n(g, {c.k, c.n}));
        CHECK(close_rel(k_spec, k_oracle, 1e-8));
        if (h.num_vertices() <= 200) {
            CHECK(tau_closed_k(s.tau, s.n0, s.e0, c.k, c.n).value() == spanning_trees_matrix_tree(h));
        }
    }
}

TEST_CASE("compute_invariants: methods agree") {
    const Graph c6 = testing::named("C6");
    const InvariantReport closed = compute_invariants(c6, {1, 1}, InvariantMethod::ClosedForm);
    const InvariantReport spectral = compute_invariants(c6, {1, 1}, InvariantMethod::Spectrum);
    const InvariantReport oracle = compute_invariants(c6, {1, 1}, InvariantMethod::Oracle);
    CHECK(closed.num_vertices == 30);
    CHECK(closed.num_edges == 36);
    REQUIRE(closed.tau_exact);
    CHECK(*closed.tau_exact == 233280);
    REQUIRE(oracle.tau_exact);
    CHECK(*oracle.tau_exact == 233280);
    CHECK_FALSE(spectral.tau_exact.has_value());
    CHECK(spectral.tau_log10 == doctest::Approx(std::log10(233280.0)).epsilon(1e-9));
    CHECK(spectral.kemeny == doctest::Approx(closed.kemeny).epsilon(1e-9));
    CHECK(oracle.kemeny == doctest::Approx(closed.kemeny).epsilon(1e-9));
    CHECK(closed.kirchhoff == doctest::Approx(2 * 36 * closed.kemeny).epsilon(1e-12));
    CHECK(method_name(spectral.method) == "spectrum");
}

TEST_CASE("compute_invariants on K2 at n = 0") {
    const InvariantReport r = compute_invariants(testing::named("K2"), {1, 0}, InvariantMethod::ClosedForm);
    CHECK(r.kemeny == doctest::Approx(0.5));
    CHECK(r.kirchhoff == doctest::Approx(1.0));
    REQUIRE(r.tau_exact);
    CHECK(*r.tau_exact == 1);
}

TEST_CASE("closed-form invariants scale past the construction budget") {
    const InvariantReport r = compute_invariants(testing::named("C6"), {2, 8}, InvariantMethod::ClosedForm, 1000);
    CHECK(r.tau_log10 > 100);
    CHECK_THROWS_AS(compute_invariants(testing::named("C6"), {2, 8}, InvariantMethod::Oracle, 1000), BudgetError);
}

} // TEST_SUITE
