#include <doctest.h>

#include <cmath>
#include <random>

#include "dengue/errors.hpp"
#include "dengue/params.hpp"
#include "dengue/wavespeed.hpp"
#include "support.hpp"

using namespace dengue;
using doctest::Approx;

namespace {

const double kWind = km_per_year_to_km_per_day(18.25);

DimensionalParams at30(double wind)
{
    auto d = preset("table3-30C");
    d.nu2_bar = wind;
    return d;
}

DimensionalParams at15_forced(double wind)
{
    auto d = preset("table3-15C");
    d.mu2_bar = mu2_for_unit_Q0(d);
    d.nu2_bar = wind;
    return d;
}

}  // namespace

TEST_CASE("mosquito invasion speed at 30 C")
{
    const auto wind = min_wave_speed(at30(kWind), FrontKind::MosquitoInvasion);
    REQUIRE(wind.c_bar_year);
    CHECK(*wind.c_bar_year == Approx(89.67).epsilon(0.01));
    CHECK(std::round(wind.c_min * 100) / 100 == Approx(0.69));

    const auto still = min_wave_speed(at30(0.0), FrontKind::MosquitoInvasion);
    CHECK(*still.c_bar_year == Approx(75.46).epsilon(0.01));
    CHECK(still.c_min == Approx(0.5847).epsilon(1e-3));
}

TEST_CASE("dengue dispersion speed at 15 C")
{
    const auto d = preset("table3-15C");
    CHECK(mu2_for_unit_Q0(d) == Approx(0.74).epsilon(0.01));
    CHECK(*min_wave_speed(at15_forced(0.0), FrontKind::DengueDispersion).c_bar_year == Approx(24.08).epsilon(0.01));
    CHECK(*min_wave_speed(at15_forced(kWind), FrontKind::DengueDispersion).c_bar_year ==
          Approx(38.72).epsilon(0.01));
}

TEST_CASE("v* sweep reproduces the published lists")
{
    const double still[] = {4.6026, 12.7056, 16.4107, 18.9825, 20.9895, 22.6519, 24.0797, 25.3367, 26.463, 27.4859};
    const double windy[] = {19.3765, 27.5711, 31.2148, 33.7331, 35.6967, 37.3231, 38.7206, 39.9514, 41.055, 42.0577};
    std::vector<double> v;
    for (int i = 1; i <= 10; ++i) v.push_back(0.1 * i);
    const auto rows = sweep_vstar(at15_forced(0.0), v, {0.0, kWind});
    REQUIRE(rows.size() == 10);
    for (std::size_t i = 0; i < 10; ++i) {
        REQUIRE(rows[i].c_bar_year[0]);
        REQUIRE(rows[i].c_bar_year[1]);
        CHECK(*rows[i].c_bar_year[0] == Approx(still[i]).epsilon(0.01));
        CHECK(*rows[i].c_bar_year[1] == Approx(windy[i]).epsilon(0.01));
    }
    const auto csv = sweep_csv(rows);
    CHECK(csv.rfind("v_star,c_min_nowind_km_per_year,c_min_wind_km_per_year\n", 0) == 0);
    CHECK(csv.find("0.7,24.0797,38.7206") != std::string::npos);
}

TEST_CASE("sweep rejects bad input and reports missing fronts")
{
    CHECK_THROWS_AS(sweep_vstar(at15_forced(0.0), {0.0}, {0.0}), DomainError);
    const auto rows = sweep_vstar(at15_forced(0.0), {1e-6}, {0.0, kWind});
    CHECK_FALSE(rows[0].c_bar_year[0].has_value());
    CHECK(sweep_csv(rows).find("no-front") != std::string::npos);
    CHECK_THROWS_AS(sweep_csv({SweepRow{0.5, {1.0}}}), DomainError);
}

TEST_CASE("tangency at the minimum speed")
{
    std::mt19937_64 rng(201);
    for (int i = 0; i < 500; ++i) {
        const auto n = testing::random_params(rng);
        for (auto kind : {FrontKind::MosquitoInvasion, FrontKind::DengueDispersion}) {
            const auto f = linear_front(n, kind, 0.7, 1.0);
            if (!f.has_front()) continue;
            const auto r = min_wave_speed(f, kind);
            const auto P = cubic_phat(f, r.c_min);
            CHECK(std::abs(P(-r.m_star)) < 1e-8);
            CHECK(std::abs(P.derivative(-r.m_star)) < 1e-8);
            // Below c_min the cubic loses its negative double root: P(-m) keeps one sign near m*.
            const auto below = cubic_phat(f, r.c_min * (1 - 1e-3));
            const auto above = cubic_phat(f, r.c_min * (1 + 1e-3));
            int neg_below = 0, neg_above = 0;
            for (const auto& z : below.poly().roots())
                if (z.real() < 0 && std::abs(z.imag()) < 1e-12) ++neg_below;
            for (const auto& z : above.poly().roots())
                if (z.real() < 0 && std::abs(z.imag()) < 1e-12) ++neg_above;
            CHECK(neg_above == 2);
            CHECK(neg_below == 0);
        }
    }
}

TEST_CASE("dispersion root is a cubic root at -m")
{
    std::mt19937_64 rng(202);
    std::uniform_real_distribution<double> M(0.05, 3.0);
    for (int i = 0; i < 1000; ++i) {
        const auto n = testing::random_params(rng);
        const auto f = linear_front(n, FrontKind::MosquitoInvasion);
        if (!f.has_front()) continue;
        const double m = M(rng);
        const double c = dispersion_speed(m, f);
        const auto P = cubic_phat(f, c);
        const double scale = 1.0 + std::abs(P.a2) * m * m + std::abs(P.a1) * m + std::abs(P.a0) + m * m * m;
        CHECK(std::abs(P(-m)) / scale < 1e-10);
    }
}

TEST_CASE("speed grows with v* and wind and is bounded by the curve")
{
    auto n = nondimensionalize(at15_forced(0.0));
    double prev = 0.0;
    for (double v = 0.1; v <= 1.0; v += 0.1) {
        const double c = min_wave_speed(n, FrontKind::DengueDispersion, v, 1.0).c_min;
        CHECK(c > prev);
        prev = c;
    }
    const auto f = linear_front(n, FrontKind::DengueDispersion);
    const auto r = min_wave_speed(f, FrontKind::DengueDispersion);
    for (const auto& pt : dispersion_curve(f, 1e-3, 10.0, 200)) CHECK(pt.c >= r.c_min - 1e-12);

    auto windy = n;
    windy.nu = 0.1;
    CHECK(min_wave_speed(windy, FrontKind::DengueDispersion).c_min > r.c_min);
}

TEST_CASE("dimensional speed is the scale times the nondimensional speed")
{
    const auto d = at30(kWind);
    const auto r = min_wave_speed(d, FrontKind::MosquitoInvasion);
    CHECK(*r.c_bar_day == Approx(r.c_min * speed_scale(d)).epsilon(1e-14));
    CHECK(*r.c_bar_year == Approx(*r.c_bar_day * 365.0).epsilon(1e-14));
    CHECK_FALSE(min_wave_speed(nondimensionalize(d), FrontKind::MosquitoInvasion).c_bar_year);
}

TEST_CASE("no front when the linear growth is absent")
{
    auto n = nondimensionalize(at30(0.0));
    n.gamma = 1e-6;
    CHECK_THROWS_AS(min_wave_speed(n, FrontKind::MosquitoInvasion), NoFrontError);
    CHECK_THROWS_AS(dispersion_speed(1.0, n, FrontKind::MosquitoInvasion), NoFrontError);
    CHECK_THROWS_AS(dispersion_speed(-1.0, linear_front(nondimensionalize(at30(0.0)), FrontKind::MosquitoInvasion)),
                    DomainError);
    CHECK_THROWS_AS(parse_front_kind("zika"), ConfigError);
}

TEST_CASE("wave Jacobians: closed-form spectra against the dense solver")
{
    std::mt19937_64 rng(203);
    std::uniform_real_distribution<double> C(0.1, 3.0), H(0.05, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const auto n0 = testing::random_params(rng);
        const double c = C(rng);
        const auto p0 = make_Ehat0(H(rng));
        const auto J0 = wave_jacobian(p0, n0, c);
        CHECK(J0.col(5).isZero(0.0));
        CHECK(J0.col(7).isZero(0.0));
        CHECK(spectrum_distance(closed_form_spectrum(wave_char_factors(p0, n0, c)).eigenvalues,
                                dense_spectrum(J0).eigenvalues) < 1e-10);

        const auto n1 = testing::random_unit_Q0(rng);
        const auto p1 = make_Ehat1(n1, H(rng), H(rng));
        CHECK(spectrum_distance(closed_form_spectrum(wave_char_factors(p1, n1, c)).eigenvalues,
                                dense_spectrum(wave_jacobian(p1, n1, c)).eigenvalues) < 1e-10);
    }
}

TEST_CASE("the aquatic-free factor at Ehat0 has real roots of both signs")
{
    std::mt19937_64 rng(204);
    std::uniform_real_distribution<double> C(0.01, 5.0);
    for (int i = 0; i < 500; ++i) {
        const auto n = testing::random_params(rng);
        const double c = C(rng);
        const auto factors = wave_char_factors(make_Ehat0(1.0), n, c);
        const auto& P0 = factors[2];
        REQUIRE(P0.degree() == 2);
        const double disc = P0[1] * P0[1] - 4 * P0[0];
        CHECK(disc > 0.0);
        CHECK(P0[0] < 0.0);
    }
    const auto n = testing::random_params(rng);
    CHECK_THROWS_AS(wave_jacobian(make_Ehat0(1.0), n, -1.0), DomainError);
    CHECK_THROWS_AS(wave_jacobian(make_E0(1.0), n, 1.0), DomainError);
}
