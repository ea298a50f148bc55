#include <doctest.h>

#include <cmath>
#include <random>

#include "dengue/errors.hpp"
#include "dengue/params.hpp"

using namespace dengue;
using doctest::Approx;

TEST_CASE("nondimensional values at 30 C match hand arithmetic")
{
    const auto n = nondimensionalize(preset("table3-30C"));
    CHECK(n.gamma == Approx(0.02).epsilon(1e-12));
    CHECK(n.mu1 == Approx(0.0028571).epsilon(1e-4));
    CHECK(n.mu2 == Approx(0.0055556).epsilon(1e-4));
    CHECK(n.sigma == Approx(0.0142857).epsilon(1e-4));
    CHECK(n.k == Approx(0.25));
    CHECK(n.beta1 == Approx(0.0495).epsilon(1e-12));
    CHECK(n.beta2 == Approx(0.00625).epsilon(1e-12));
    CHECK(n.nu == Approx(0.070711).epsilon(1e-5));
}

TEST_CASE("nondimensional values at 15 C match hand arithmetic")
{
    const auto n = nondimensionalize(preset("table3-15C"));
    CHECK(n.gamma == Approx(0.0125).epsilon(1e-3));
    CHECK(n.mu1 == Approx(0.025015).epsilon(1e-4));
    CHECK(n.mu2 == Approx(0.013158).epsilon(1e-4));
    CHECK(n.nu == Approx(0.181370).epsilon(1e-5));
}

TEST_CASE("zero wind gives nu = 0")
{
    auto d = preset("table3-30C");
    d.nu2_bar = 0.0;
    CHECK(nondimensionalize(d).nu == 0.0);
}

TEST_CASE("speed scale")
{
    const auto d30 = preset("table3-30C");
    CHECK(speed_scale(d30) == Approx(0.353553).epsilon(1e-6));
    CHECK(km_per_day_to_km_per_year(speed_scale(d30)) == Approx(129.047).epsilon(1e-5));
    const auto d15 = preset("table3-15C");
    CHECK(speed_scale(d15) == Approx(0.137840).epsilon(1e-5));
    CHECK(km_per_day_to_km_per_year(speed_scale(d15)) == Approx(50.312).epsilon(1e-4));
    DimensionalParams unit = d30;
    unit.D_bar = 1.0;
    unit.r0_bar = 1.0;
    CHECK(speed_scale(unit) == 1.0);
}

TEST_CASE("Q0 of the presets within 0.5%")
{
    CHECK(basic_offspring(nondimensionalize(preset("table3-30C"))) == Approx(273.91).epsilon(5e-3));
    CHECK(basic_offspring(nondimensionalize(preset("table3-15C"))) == Approx(19.45).epsilon(5e-3));
}

TEST_CASE("R0 of the presets within 0.5%")
{
    const auto r30 = basic_reproduction(nondimensionalize(preset("table3-30C")), 0.7, 1.0);
    CHECK(r30.u_star == Approx(19.6).epsilon(1e-12));
    CHECK(r30.R0 == Approx(148.46).epsilon(5e-3));
    CHECK(basic_reproduction(nondimensionalize(preset("table3-15C")), 0.7, 1.0).R0 == Approx(7.97).epsilon(5e-3));
    CHECK(basic_reproduction(nondimensionalize(preset("table3-30C")), 0.0, 1.0).R0 == 0.0);
}

TEST_CASE("mu2 for unit Q0")
{
    const auto d = preset("table3-15C");
    CHECK(mu2_for_unit_Q0(d) == Approx(0.7409).epsilon(1e-3));
    auto forced = d;
    forced.mu2_bar = mu2_for_unit_Q0(d);
    CHECK(std::abs(basic_offspring(nondimensionalize(forced)) - 1.0) < 1e-12);

    auto edge = d;
    edge.mu1_bar = edge.r0_bar;
    CHECK_THROWS_AS(mu2_for_unit_Q0(edge), NoSolutionError);
}

TEST_CASE("Q0 = 1 at the bifurcation value")
{
    NondimParams n;
    n.mu1 = 0.1;
    n.mu2 = 0.3;
    n.gamma = n.mu1 * n.mu2 / (1.0 - n.mu1);  // gamma = mu1 (gamma + mu2)
    n.k = 1.0;
    n.sigma = 1.0;
    CHECK(basic_offspring(n) == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("Q_eps")
{
    const auto n = nondimensionalize(preset("table3-30C"));
    CHECK(basic_offspring_eps(n, 0.0) == basic_offspring(n));
    CHECK(basic_offspring_eps(n, 0.0) == Approx(273.91).epsilon(5e-3));
    NondimParams pole;
    pole.gamma = 1.0;
    pole.k = 1.0;
    pole.mu1 = 0.5;
    pole.mu2 = 2.0;
    CHECK_THROWS_AS(basic_offspring_eps(pole, 0.5), DomainError);
}

TEST_CASE("invalid inputs")
{
    auto d = preset("table3-30C");
    d.r0_bar = 0.0;
    CHECK_THROWS_AS(nondimensionalize(d), DomainError);
    d = preset("table3-30C");
    d.D_bar = -1.0;
    CHECK_THROWS_AS(nondimensionalize(d), DomainError);
    CHECK_THROWS_AS(preset("table3-20C"), ConfigError);
    const auto n = nondimensionalize(preset("table3-30C"));
    CHECK_THROWS_AS(basic_reproduction(n, -0.1, 1.0), DomainError);
    CHECK_THROWS_AS(basic_reproduction(n, 0.7, 1.5), DomainError);
}

TEST_CASE("round trip of the dimensional and nondimensional Q0 on random draws")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(0.01, 2.0);
    for (int i = 0; i < 1000; ++i) {
        DimensionalParams d;
        d.D_bar = U(rng);
        d.nu2_bar = U(rng);
        d.r0_bar = U(rng);
        d.k1 = 10 * U(rng);
        d.k2 = 10 * U(rng);
        d.gamma_bar = U(rng);
        d.mu1_bar = U(rng);
        d.mu2_bar = U(rng);
        d.beta1_bar = U(rng);
        d.beta2_bar = U(rng);
        d.sigma_bar = U(rng);
        d.N_bar = 100 * U(rng);
        const double a = basic_offspring(nondimensionalize(d));
        const double b = basic_offspring(d);
        CHECK(std::abs(a - b) <= 1e-12 * std::abs(b));

        auto f = d;
        if (f.r0_bar > f.mu1_bar) {
            f.mu2_bar = mu2_for_unit_Q0(f);
            CHECK(std::abs(basic_offspring(nondimensionalize(f)) - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("R0 is linear in v* and h*")
{
    const auto n = nondimensionalize(preset("table3-30C"));
    const double r = basic_reproduction(n, 0.3, 0.4).R0;
    CHECK(std::abs(basic_reproduction(n, 0.6, 0.4).R0 - 2 * r) <= 1e-12 * r);
    CHECK(std::abs(basic_reproduction(n, 0.3, 0.8).R0 - 2 * r) <= 1e-12 * r);
}
