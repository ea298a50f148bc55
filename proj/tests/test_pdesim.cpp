#include <doctest.h>

#include <cmath>

#include "dengue/errors.hpp"
#include "dengue/ode.hpp"
#include "dengue/params.hpp"
#include "dengue/pdesim.hpp"
#include "dengue/stability.hpp"

using namespace dengue;
using doctest::Approx;

namespace {

NondimParams at30(double wind = 0.0)
{
    auto d = preset("table3-30C");
    d.nu2_bar = wind;
    return nondimensionalize(d);
}

SimConfig small_config()
{
    SimConfig cfg;
    cfg.L = 80.0;
    cfg.N = 400;
    cfg.T = 60.0;
    return cfg;
}

}  // namespace

TEST_CASE("Dormand-Prince against exponential and harmonic solutions")
{
    auto expo = [](double, const std::array<double, 1>& y) { return std::array<double, 1>{-2.0 * y[0]}; };
    const auto s = dormand_prince<1>(expo, 0.0, {1.0}, {0.5, 1.0, 3.0}, OdeOptions{1e-12});
    REQUIRE(s.t.size() == 3);
    CHECK(s.t[1] == 1.0);
    CHECK(s.y[0][0] == Approx(std::exp(-1.0)).epsilon(1e-10));
    CHECK(s.y[2][0] == Approx(std::exp(-6.0)).epsilon(1e-10));

    auto osc = [](double, const std::array<double, 2>& y) { return std::array<double, 2>{y[1], -y[0]}; };
    const auto h = dormand_prince<2>(osc, 0.0, {1.0, 0.0}, {2 * M_PI}, OdeOptions{1e-12});
    CHECK(std::abs(h.y[0][0] - 1.0) < 1e-9);
    CHECK(std::abs(h.y[0][1]) < 1e-9);

    const auto back = dormand_prince<1>(expo, 1.0, {std::exp(-2.0)}, {0.0}, OdeOptions{1e-12});
    CHECK(back.y[0][0] == Approx(1.0).epsilon(1e-10));
}

TEST_CASE("Dormand-Prince failure modes")
{
    auto blowup = [](double, const std::array<double, 1>& y) { return std::array<double, 1>{y[0] * y[0]}; };
    CHECK_THROWS_AS(dormand_prince<1>(blowup, 0.0, {1.0}, {2.0}), StiffnessError);
    OdeOptions capped;
    capped.max_norm = 100.0;
    CHECK_THROWS_AS(dormand_prince<1>(blowup, 0.0, {1.0}, {2.0}, capped), DivergenceError);
    CHECK_THROWS_AS(dormand_prince<1>(blowup, 0.0, {1.0}, {0.5, 0.2}), DomainError);
}

TEST_CASE("equilibria stay put under the homogeneous integrator")
{
    const auto n = at30();
    const auto plateau = saturated_plateau(n);
    const auto d = homog_rhs(plateau, n, ModelVariant::saturated());
    CHECK(std::abs(d.u) < 1e-14);
    CHECK(std::abs(d.v) < 1e-14);
    const auto end = integrate_homog_at(plateau, n, ModelVariant::saturated(), {100.0}).back();
    CHECK(end.u == Approx(plateau.u).epsilon(1e-10));
    CHECK(end.v == Approx(plateau.v).epsilon(1e-10));

    const auto zero = integrate_homog_at({0, 0, 0, 1, 0, 0}, n, ModelVariant::malthus2(), {50.0}).back();
    CHECK(zero.M() == 0.0);
    CHECK(zero.h == 1.0);
}

TEST_CASE("Malthusian growth rate is the positive root of the mosquito polynomial")
{
    const auto n = at30();
    const auto P = char_factors_homog(make_E0(1.0), n).back();
    double rate = 0.0;
    for (const auto& z : P.roots()) rate = std::max(rate, z.real());
    REQUIRE(rate > 0.0);
    const auto s = integrate_homog_at({1e-3, 0, 1e-3, 1, 0, 0}, n, ModelVariant::malthus2(), {400.0, 500.0});
    const double measured = std::log(s[1].M() / s[0].M()) / 100.0;
    CHECK(measured == Approx(rate).epsilon(0.01));
}

TEST_CASE("mosquitoes die out when Q0 < 1")
{
    auto n = at30();
    n.gamma = 1e-6;
    REQUIRE(basic_offspring(n) < 1.0);
    const auto s = integrate_homog_at({1, 0, 1, 1, 0, 0}, n, ModelVariant::malthus2(), {2000.0}).back();
    CHECK(s.M() < 1e-2);
}

TEST_CASE("h + I + r stays on the simplex in the ODE")
{
    auto n = at30();
    n.beta1 = 0.5;
    n.beta2 = 0.5;
    const auto tr = integrate_homog({0.5, 0.1, 0.5, 0.9, 0.1, 0.0}, n, ModelVariant::saturated(), 200.0);
    for (const auto& s : tr.states) CHECK(std::abs(s.h + s.I + s.r - 1.0) <= 1e-8);
}

TEST_CASE("saturated plateau")
{
    const auto n = at30();
    const auto p = saturated_plateau(n);
    const double A = n.gamma + n.mu2;
    CHECK(p.u == Approx((n.gamma - n.mu1 * A) / (n.gamma + n.mu1 * n.k)));
    auto dead = n;
    dead.gamma = 1e-6;
    CHECK_THROWS_AS(saturated_plateau(dead), NoFrontError);
}

TEST_CASE("a small front simulation moves at roughly the linear spreading speed")
{
    const auto n = at30();
    auto cfg = small_config();
    const auto res = simulate_front(cfg, n, ModelVariant::saturated());
    REQUIRE(res.trace.status == FrontStatus::Measured);
    const double c = expected_front_speed(cfg, n, ModelVariant::saturated()).c_min;
    // Short runs approach c_min from below (pulled front); the bound is loose.
    CHECK(res.trace.speed > 0.8 * c);
    CHECK(res.trace.speed < 1.02 * c);
    CHECK(res.trace.r_squared > 0.99);
    CHECK(res.max_simplex_error <= 1e-8);
    CHECK(res.negative_samples == 0);
    CHECK(res.snapshots.size() == cfg.snapshots);
}

TEST_CASE("time schemes and grid refinement agree")
{
    const auto n = at30();
    auto cfg = small_config();
    cfg.T = 40.0;
    const double coarse = simulate_front(cfg, n, ModelVariant::saturated()).trace.speed;
    cfg.scheme = TimeScheme::RK2;
    const double heun = simulate_front(cfg, n, ModelVariant::saturated()).trace.speed;
    cfg.scheme = TimeScheme::Euler;
    cfg.N = 800;
    const double fine = simulate_front(cfg, n, ModelVariant::saturated()).trace.speed;
    CHECK(heun == Approx(coarse).epsilon(0.01));
    CHECK(fine == Approx(coarse).epsilon(0.02));
}

TEST_CASE("leftward fronts feel the wind against them")
{
    const auto n = at30(km_per_year_to_km_per_day(18.25));
    auto cfg = small_config();
    const double right = simulate_front(cfg, n, ModelVariant::saturated()).trace.speed;
    cfg.direction = Direction::Leftward;
    const double left = simulate_front(cfg, n, ModelVariant::saturated()).trace.speed;
    CHECK(left < right);
    CHECK(expected_front_speed(cfg, n, ModelVariant::saturated()).c_min < right);
}

TEST_CASE("no seed means no front")
{
    const auto n = at30();
    auto cfg = small_config();
    cfg.seed.amplitude = 0.0;
    const auto res = simulate_front(cfg, n, ModelVariant::saturated());
    CHECK(res.trace.status == FrontStatus::NoFront);
}

TEST_CASE("front reaching the boundary is a truncation error")
{
    const auto n = at30();
    auto cfg = small_config();
    cfg.L = 20.0;
    cfg.N = 100;
    CHECK_THROWS_AS(simulate_front(cfg, n, ModelVariant::saturated()), TruncationError);
}

TEST_CASE("configuration validation")
{
    const auto n = at30();
    auto cfg = small_config();
    cfg.dt = 1.0;
    CHECK_THROWS_AS(simulate_front(cfg, n, ModelVariant::saturated()), DomainError);
    cfg = small_config();
    cfg.theta = 1.5;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg = small_config();
    cfg.N = 3;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    auto dead = n;
    dead.gamma = 1e-6;
    CHECK_THROWS_AS(simulate_front(small_config(), dead, ModelVariant::saturated()), NoFrontError);
    CHECK(small_config().describe().find("L = 80") != std::string::npos);
}

TEST_CASE("outputs")
{
    FrontTrace tr;
    tr.t = {0.0, 1.0};
    tr.x = {2.0, 2.5};
    CHECK(trace_csv(tr) == "t,x_front\n0,2\n1,2.5\n");
    Snapshot s{0.0, GridFields::constant(5, 1.0, {1, 0, 0, 1, 0, 0})};
    const auto csv = snapshot_csv(s);
    CHECK(csv.rfind("x,u,w,v,h,I,r\n", 0) == 0);
    CHECK(csv.find("0.5,1,0,0,1,0,0\n") != std::string::npos);
}

TEST_CASE("profiles below the minimum speed oscillate around zero")
{
    // Below c_min the leading eigenvalues at the mosquito-free state are complex,
    // so a profile started on that plane changes sign.
    auto n = at30();
    const double c_min = min_wave_speed(n, FrontKind::MosquitoInvasion).c_min;
    const auto below = cubic_phat(n, 0.5 * c_min, FrontKind::MosquitoInvasion);
    bool complex = false;
    for (const auto& z : below.poly().roots()) complex = complex || std::abs(z.imag()) > 1e-8;
    CHECK(complex);
    const auto above = cubic_phat(n, 1.5 * c_min, FrontKind::MosquitoInvasion);
    for (const auto& z : above.poly().roots()) CHECK(std::abs(z.imag()) < 1e-12);

    WaveState start;
    start.Phi1 = 1e-6;
    start.c = 0.5 * c_min;
    const auto pts = integrate_profile_at(0.5 * c_min, n, start, {-1.0, -2.0});
    CHECK(pts.size() == 2);
    CHECK_THROWS_AS(integrate_profile(0.0, n, start, 1.0), DomainError);
}
