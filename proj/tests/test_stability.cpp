#include <doctest.h>

#include <cmath>
#include <random>

#include "dengue/errors.hpp"
#include "dengue/params.hpp"
#include "dengue/stability.hpp"
#include "support.hpp"

using namespace dengue;
using dengue::testing::random_params;
using dengue::testing::random_unit_Q0;

TEST_CASE("closed-form spectra match the dense solver at E0")
{
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> H(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const auto n = random_params(rng);
        const auto p = make_E0(H(rng));
        const auto cf = closed_form_spectrum(char_factors_homog(p, n));
        const auto dn = dense_spectrum(jacobian_homog(p, n));
        CHECK(spectrum_distance(cf.eigenvalues, dn.eigenvalues) < 1e-10);
    }
}

TEST_CASE("closed-form spectra match the dense solver at E1")
{
    std::mt19937_64 rng(102);
    std::uniform_real_distribution<double> H(0.05, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const auto n = random_unit_Q0(rng);
        const auto p = make_E1(n, H(rng), H(rng));
        const auto cf = closed_form_spectrum(char_factors_homog(p, n));
        const auto dn = dense_spectrum(jacobian_homog(p, n));
        CHECK(spectrum_distance(cf.eigenvalues, dn.eigenvalues) < 1e-10);
    }
}

TEST_CASE("mosquito plane spectrum matches the dense solver")
{
    std::mt19937_64 rng(103);
    for (int i = 0; i < 2000; ++i) {
        const auto ms = mosquito_jacobian_spectrum(random_params(rng));
        CHECK(ms.mismatch < 1e-10);
    }
}

TEST_CASE("E0: a positive eigenvalue exactly when Q0 > 1")
{
    std::mt19937_64 rng(104);
    for (int i = 0; i < 2000; ++i) {
        const auto n = random_params(rng);
        const double Q0 = basic_offspring(n);
        if (std::abs(Q0 - 1.0) < 1e-6) continue;
        const auto rep = classify(make_E0(1.0), n, Scope::Full6);
        if (Q0 > 1.0) {
            CHECK(rep.classification == Classification::Unstable);
            REQUIRE(rep.witness_eigenvalue);
            CHECK(rep.witness_eigenvalue->real() > 0.0);
        } else {
            // Every root of the mosquito factor is in the left half-plane.
            CHECK(rep.classification == Classification::Inconclusive);
            const auto P = char_factors_homog(make_E0(1.0), n).back();
            CHECK(routh_hurwitz_quadratic(P[1], P[0]));
        }
    }
}

TEST_CASE("E1: a positive eigenvalue exactly when R0 > 1")
{
    std::mt19937_64 rng(105);
    std::uniform_real_distribution<double> H(0.05, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const auto n = random_unit_Q0(rng);
        const auto p = make_E1(n, H(rng), H(rng));
        const double R0 = basic_reproduction(n, p.v_star, p.h_star).R0;
        if (std::abs(R0 - 1.0) < 1e-6) continue;
        const auto rep = classify(p, n, Scope::Full6);
        REQUIRE(rep.R0);
        CHECK(*rep.R0 == doctest::Approx(R0));
        if (R0 > 1.0) {
            CHECK(rep.classification == Classification::Unstable);
        } else {
            CHECK(rep.classification == Classification::Inconclusive);
        }
    }
}

TEST_CASE("mosquito plane classification follows Q0")
{
    auto n = nondimensionalize(preset("table3-30C"));
    CHECK(classify(make_Eprime(n, 0.0), n, Scope::Mosquito2).classification == Classification::Unstable);

    n.gamma = 1e-6;
    REQUIRE(basic_offspring(n) < 1.0);
    CHECK(classify(make_Eprime(n, 0.0), n, Scope::Mosquito2).classification ==
          Classification::AsymptoticallyStable);

    n.gamma = n.mu1 * n.mu2 / (1.0 - n.mu1);
    const auto rep = classify(make_Eprime(n, 0.5), n, Scope::Mosquito2);
    CHECK(rep.classification == Classification::Stable);
    CHECK(rep.notes.empty());
}

TEST_CASE("printed mosquito constant differs off the bifurcation")
{
    const auto n = nondimensionalize(preset("table3-30C"));
    const auto ms = mosquito_jacobian_spectrum(n, MosquitoConstant::AsPrinted);
    CHECK(ms.constant_direct != doctest::Approx(ms.constant_printed));
    CHECK(ms.mismatch > 1e-6);
    const auto rep = classify(make_Eprime(n, 0.0), n, Scope::Mosquito2);
    CHECK(rep.notes.size() == 1);
}

TEST_CASE("equilibrium sets")
{
    auto n = nondimensionalize(preset("table3-30C"));
    const auto sets = equilibria(n, ModelVariant::malthus2());
    CHECK(sets.contains(EquilibriumSet::E0));
    CHECK_FALSE(sets.contains(EquilibriumSet::E1));
    CHECK(sets.det_A == doctest::Approx(1.0 - sets.Q0));
    CHECK_THROWS_AS(equilibria(n, ModelVariant::saturated()), NotImplementedError);
    CHECK_THROWS_AS(make_E1(n, 1.0, 0.7), DomainError);

    n.gamma = n.mu1 * n.mu2 / (1.0 - n.mu1);
    CHECK(equilibria(n, ModelVariant::malthus2()).contains(EquilibriumSet::E1));
    const auto p = make_E1(n, 1.0, 0.7);
    CHECK(p.u_star == doctest::Approx(0.7 * n.gamma / (n.k * n.mu1)));
    CHECK_THROWS_AS(classify(p, n, Scope::Mosquito2), DomainError);
    CHECK_THROWS_AS(classify(make_Eprime(n, 0.7), n, Scope::Full6), DomainError);
}

TEST_CASE("report text")
{
    const auto n = nondimensionalize(preset("table3-30C"));
    const auto text = to_text(classify(make_E0(1.0), n, Scope::Full6));
    CHECK(text.find("classification: Unstable") != std::string::npos);
    CHECK(text.find("scope: full6") != std::string::npos);
    CHECK(text.find("eigenvalues:") != std::string::npos);
}

TEST_CASE("spectrum distance is a bottleneck matching")
{
    const Eigenvalues a{{1, 0}, {2, 0}, {3, 0}};
    const Eigenvalues b{{3.1, 0}, {1, 0}, {2, 0}};
    CHECK(spectrum_distance(a, b) == doctest::Approx(0.1));
    CHECK_THROWS_AS(spectrum_distance(a, Eigenvalues{{1, 0}}), DomainError);
}
