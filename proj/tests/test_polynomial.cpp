#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "dengue/polynomial.hpp"

using namespace dengue;

namespace {

// Bisection on a sign change: the oracle for real cubic roots.
double bisect(const Poly& p, double lo, double hi)
{
    double flo = p(lo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = p(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("cubic roots agree with a bisection oracle")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(-3.0, 3.0);
    for (int trial = 0; trial < 2000; ++trial) {
        std::array<double, 3> r{U(rng), U(rng), U(rng)};
        std::sort(r.begin(), r.end());
        if (r[1] - r[0] < 0.1 || r[2] - r[1] < 0.1) continue;
        const Poly p = Poly{-r[0], 1.0} * Poly{-r[1], 1.0} * Poly{-r[2], 1.0};
        const auto roots = cubic_roots(p[2], p[1], p[0]);
        std::vector<double> got;
        for (const auto& z : roots) got.push_back(z.real());
        std::sort(got.begin(), got.end());
        const double b0 = bisect(p, r[0] - 0.05, r[0] + 0.05);
        const double b1 = bisect(p, r[1] - 0.05, r[1] + 0.05);
        const double b2 = bisect(p, r[2] - 0.05, r[2] + 0.05);
        CHECK(std::abs(got[0] - b0) < 1e-11);
        CHECK(std::abs(got[1] - b1) < 1e-11);
        CHECK(std::abs(got[2] - b2) < 1e-11);
    }
}

TEST_CASE("cubic with a complex pair")
{
    // (λ - 2)(λ² + 2λ + 5): roots 2, -1 ± 2i
    const Poly p = Poly{-2.0, 1.0} * Poly{5.0, 2.0, 1.0};
    auto roots = p.roots();
    REQUIRE(roots.size() == 3);
    std::sort(roots.begin(), roots.end(), [](auto a, auto b) { return a.imag() < b.imag(); });
    CHECK(std::abs(roots[0] - std::complex<double>(-1, -2)) < 1e-13);
    CHECK(std::abs(roots[1] - std::complex<double>(2, 0)) < 1e-13);
    CHECK(std::abs(roots[2] - std::complex<double>(-1, 2)) < 1e-13);
}

TEST_CASE("quadratic roots use the cancellation-free form")
{
    const auto r = quadratic_roots(1e8, 1.0);  // roots ≈ -1e8 and -1e-8
    const double small = std::max(r[0].real(), r[1].real());
    CHECK(small == doctest::Approx(-1e-8).epsilon(1e-12));
}

TEST_CASE("Routh-Hurwitz for quadratics")
{
    CHECK_FALSE(routh_hurwitz_quadratic(1.0, 0.0));
    CHECK(routh_hurwitz_quadratic(1.0, 0.5));
    CHECK_FALSE(routh_hurwitz_quadratic(-1.0, 0.5));

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    for (int i = 0; i < 5000; ++i) {
        const double a1 = U(rng), a0 = U(rng);
        const auto r = quadratic_roots(a1, a0);
        const bool stable = r[0].real() < 0 && r[1].real() < 0;
        CHECK(routh_hurwitz_quadratic(a1, a0) == stable);
    }
}

TEST_CASE("polynomial arithmetic")
{
    const Poly p{1.0, 2.0, 3.0};
    CHECK(p(2.0) == 17.0);
    CHECK(p.derivative()(1.0) == 8.0);
    CHECK(Poly::monic({2.0, 3.0, 4.0})[3] == 1.0);
    CHECK(Poly::monic({2.0, 3.0, 4.0})[0] == 4.0);
    CHECK(product({Poly{1.0, 1.0}, Poly{-1.0, 1.0}})(3.0) == 8.0);
}
