#include <doctest.h>

#include <cmath>
#include <random>

#include "dengue/dynamics.hpp"
#include "dengue/errors.hpp"
#include "dengue/stability.hpp"

using namespace dengue;
using doctest::Approx;

namespace {

NondimParams simple()
{
    NondimParams n;
    n.gamma = 0.5;
    n.mu1 = 0.1;
    n.mu2 = 0.2;
    n.mu3 = 0.05;
    n.sigma = 0.3;
    n.beta1 = 0.4;
    n.beta2 = 0.6;
    n.k = 2.0;
    n.nu = 0.25;
    return n;
}

}  // namespace

TEST_CASE("homogeneous reaction terms of the Malthusian model by hand")
{
    const auto n = simple();
    const HomogState s{1.0, 0.5, 2.0, 0.8, 0.1, 0.1};
    const auto d = homog_rhs(s, n, ModelVariant::malthus2());
    // du = γ/k v - μ1 u - β1 u I
    CHECK(d.u == Approx(0.25 * 2.0 - 0.1 - 0.04));
    // dw = -μ1 w + β1 u I
    CHECK(d.w == Approx(-0.05 + 0.04));
    // dv = k M - (μ2 + γ) v
    CHECK(d.v == Approx(3.0 - 1.4));
    // dh = (1 - h) μ3 - β2 h w
    CHECK(d.h == Approx(0.2 * 0.05 - 0.24));
    CHECK(d.I == Approx(0.24 - 0.35 * 0.1));
    CHECK(d.r == Approx(0.03 - 0.005));
}

TEST_CASE("homogeneous reaction terms of the saturated model by hand")
{
    const auto n = simple();
    const HomogState s{0.2, 0.1, 0.5, 1.0, 0.0, 0.0};
    const auto d = homog_rhs(s, n, ModelVariant::saturated());
    CHECK(d.u == Approx(0.25 * 0.5 * 0.7 - 0.02));
    CHECK(d.w == Approx(-0.01));
    CHECK(d.v == Approx(2.0 * 0.5 * 0.3 - 0.7 * 0.5));
    CHECK(d.h == Approx(-0.06));
}

TEST_CASE("epsilon = 1 adds the oviposition feedback")
{
    const auto n = simple();
    const HomogState s{1.0, 0.0, 1.0, 1.0, 0.0, 0.0};
    const auto d1 = homog_rhs(s, n, ModelVariant::malthus1());
    const auto d0 = homog_rhs(s, n, ModelVariant::malthus2());
    CHECK(d1.u - d0.u == Approx(n.gamma / n.k));
    CHECK(d1.v - d0.v == Approx(n.k));
    const auto df = homog_rhs(s, n, ModelVariant::family(1.0));
    CHECK(df.u == d1.u);
    CHECK(df.v == d1.v);
    CHECK_THROWS_AS(ModelVariant::saturated().family_epsilon(), DomainError);
}

TEST_CASE("variant names")
{
    CHECK(parse_variant("saturated").tag == Variant::Saturated);
    CHECK(parse_variant("family", 0.3).epsilon == 0.3);
    CHECK_THROWS_AS(parse_variant("logistic"), ConfigError);
}

TEST_CASE("closed-form homogeneous Jacobian agrees with finite differences")
{
    auto n = simple();
    n.mu3 = 0.0;
    for (const auto& p : {make_E0(0.6), make_E0(1.0)}) {
        const auto J = jacobian_homog(p, n);
        const auto s0 = p.homog_point().to_array();
        for (int j = 0; j < 6; ++j) {
            auto sp = s0, sm = s0;
            const double h = 1e-6;
            sp[j] += h;
            sm[j] -= h;
            const auto fp = homog_rhs(HomogState::from_array(sp), n, ModelVariant::malthus2()).to_array();
            const auto fm = homog_rhs(HomogState::from_array(sm), n, ModelVariant::malthus2()).to_array();
            for (int i = 0; i < 6; ++i) CHECK(J(i, j) == Approx((fp[i] - fm[i]) / (2 * h)).epsilon(1e-8));
        }
    }
}

TEST_CASE("h + I + r is conserved when mu3 = 0")
{
    auto n = simple();
    n.mu3 = 0.0;
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(0.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        const HomogState s{U(rng), U(rng), U(rng), U(rng), U(rng), U(rng)};
        for (auto m : {ModelVariant::saturated(), ModelVariant::malthus1(), ModelVariant::malthus2()}) {
            const auto d = homog_rhs(s, n, m);
            CHECK(std::abs(d.h + d.I + d.r) < 1e-15);
        }
    }
}

TEST_CASE("pde_rhs on constant fields equals the reaction terms")
{
    const auto n = simple();
    const HomogState s{0.3, 0.2, 0.7, 0.9, 0.05, 0.05};
    const auto f = GridFields::constant(16, 0.1, s);
    GridFields out;
    pde_rhs(f, n, ModelVariant::malthus2(), out);
    const auto expect = homog_rhs(s, n, ModelVariant::malthus2());
    for (std::size_t i = 0; i < 16; ++i) {
        CHECK(out.u[i] == Approx(expect.u).epsilon(1e-13));
        CHECK(out.w[i] == Approx(expect.w).epsilon(1e-13));
        CHECK(out.v[i] == Approx(expect.v).epsilon(1e-13));
    }
}

TEST_CASE("pde_rhs transport converges to the continuous operator")
{
    // u = 1 + 0.5 sin x: continuous transport is -0.5 sin x - 2ν 0.5 cos x.
    NondimParams n;
    n.k = 1.0;
    n.nu = 0.25;
    auto err_at = [&](std::size_t N) {
        const double L = 2.0 * M_PI;
        GridFields f(N, L / static_cast<double>(N));
        for (std::size_t i = 0; i < N; ++i) {
            f.u[i] = 1.0 + 0.5 * std::sin(f.x(i));
            f.w[i] = 0.0;
        }
        SpatialOptions opt;
        opt.boundary = Boundary::FixedValue;
        opt.left_value.u = 1.0 + 0.5 * std::sin(-0.5 * f.dx);
        opt.right_value.u = 1.0 + 0.5 * std::sin(L + 0.5 * f.dx);
        GridFields out;
        pde_rhs(f, n, ModelVariant::malthus2(), out, opt);
        double e = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double x = f.x(i);
            const double exact = -0.5 * std::sin(x) - n.two_nu() * 0.5 * std::cos(x);
            e = std::max(e, std::abs(out.u[i] - exact));
        }
        return e;
    };
    const double e1 = err_at(200), e2 = err_at(400);
    CHECK(e2 < e1);
    CHECK(e1 / e2 == Approx(2.0).epsilon(0.1));  // first-order upwind
}

TEST_CASE("pde_rhs with p = 1 uses face-averaged diffusivity")
{
    NondimParams n;
    n.k = 1.0;
    n.p = 1.0;
    GridFields f(8, 1.0);
    for (std::size_t i = 0; i < 8; ++i) {
        f.u[i] = 1.0 + static_cast<double>(i);
        f.w[i] = 0.0;
    }
    GridFields out;
    pde_rhs(f, n, ModelVariant::malthus2(), out);
    // Interior cell 3: faces M = 3.5 and 4.5, unit gradient.
    CHECK(out.u[3] == Approx(4.5 - 3.5));
    // Zero flux at the left wall.
    CHECK(out.u[0] == Approx(1.5));
}

TEST_CASE("pde_rhs reports negatives and rejects degenerate input")
{
    auto n = simple();
    auto f = GridFields::constant(8, 0.1, {0.3, 0.2, 0.7, 0.9, 0.05, 0.05});
    f.v[2] = -0.1;
    GridFields out;
    const auto diag = pde_rhs(f, n, ModelVariant::malthus2(), out);
    CHECK(diag.negative_count == 1);
    CHECK(diag.min_index == 2);
    CHECK(diag.min_value == -0.1);

    f.u[4] = -1.0;
    CHECK_THROWS_AS(pde_rhs(f, n, ModelVariant::malthus2(), out), DomainError);

    auto g = GridFields::constant(8, 0.1, {0.0, 0.0, 0.0, 1.0, 0.0, 0.0});
    n.p = -0.5;
    CHECK_THROWS_AS(pde_rhs(g, n, ModelVariant::malthus2(), out), DegenerateError);
    SpatialOptions reg;
    reg.regularize = true;
    CHECK_NOTHROW(pde_rhs(g, n, ModelVariant::malthus2(), out, reg));
    CHECK_THROWS_AS(pde_rhs(GridFields::constant(3, 0.1, {}), n, ModelVariant::malthus2(), out), DomainError);
}

TEST_CASE("traveling-wave equilibria are fixed points")
{
    auto n = simple();
    n.mu3 = 0.0;
    const auto p = make_Ehat0(0.7);
    const auto d = travelwave_rhs(p.wave_point(0.9), n);
    for (double x : d.to_array()) CHECK(std::abs(x) < 1e-15);

    // Ê1 needs Q0 = 1: γ = μ1(γ + μ2).
    n.gamma = n.mu1 * n.mu2 / (1.0 - n.mu1);
    const auto p1 = make_Ehat1(n, 0.8, 0.7);
    const auto d1 = travelwave_rhs(p1.wave_point(0.9), n);
    for (double x : d1.to_array()) CHECK(std::abs(x) < 1e-14);
    CHECK_THROWS_AS(travelwave_rhs(p.wave_point(0.0), n), DomainError);
}
