#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dengue/errors.hpp"

namespace dengue {

struct OdeOptions {
    double tol = 1e-9;  ///< per-step error bound, scaled by max(1, |y|)
    double h_initial = 0.0;  ///< 0 picks a step from the local derivative
    double h_min_relative = 1e-13;  ///< underflow bound relative to the span
    std::size_t max_steps = 50'000'000;
    double max_norm = std::numeric_limits<double>::infinity();  ///< divergence guard
};

template <std::size_t N>
struct OdeSolution {
    std::vector<double> t;
    std::vector<std::array<double, N>> y;
    std::size_t accepted = 0;
    std::size_t rejected = 0;
};

namespace detail {

template <std::size_t N>
std::string describe(const std::array<double, N>& y)
{
    std::ostringstream os;
    os.precision(10);
    os << "(";
    for (std::size_t i = 0; i < N; ++i) os << (i ? ", " : "") << y[i];
    os << ")";
    return os.str();
}

template <std::size_t N>
double max_abs(const std::array<double, N>& y)
{
    double m = 0.0;
    for (double v : y) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace detail

struct NoObserver {
    template <class State>
    void operator()(double, const State&) const
    {
    }
};

/**
 * Dormand–Prince 5(4) with local extrapolation.
 *
 * Integrates y' = f(t, y) from t0 and reports the state at each of `t_out`
 * (monotone in the direction of integration, may run backwards). Steps are
 * shortened to land exactly on the output times; `on_step(t, y)` sees every
 * accepted step. Throws StiffnessError on
 * step-size underflow and DivergenceError when |y| exceeds max_norm.
 */
template <std::size_t N, class F, class Observer = NoObserver>
OdeSolution<N> dormand_prince(F&& f, double t0, std::array<double, N> y0, const std::vector<double>& t_out,
                              const OdeOptions& opt = {}, Observer&& on_step = {})
{
    using State = std::array<double, N>;
    if (!(opt.tol > 0.0)) throw DomainError("integration tolerance must be positive");
    OdeSolution<N> sol;
    if (t_out.empty()) return sol;

    const double t_end = t_out.back();
    const double dir = t_end >= t0 ? 1.0 : -1.0;
    for (std::size_t i = 0; i < t_out.size(); ++i) {
        const double prev = i == 0 ? t0 : t_out[i - 1];
        if (dir * (t_out[i] - prev) < 0.0) throw DomainError("output times must be monotone");
    }

    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                            b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                            e6 = 22.0 / 525, e7 = -1.0 / 40;

    const double span = std::max(std::abs(t_end - t0), 1e-300);
    const double h_min = opt.h_min_relative * std::max(span, std::abs(t0) + std::abs(t_end));

    double t = t0;
    State y = y0;
    State k1 = f(t, y);
    double h = opt.h_initial;
    if (h <= 0.0) {
        const double d = detail::max_abs(k1);
        const double scale = std::max(1.0, detail::max_abs(y));
        h = d > 0.0 ? 0.01 * std::pow(opt.tol, 0.2) * scale / d : 0.01 * span;
        h = std::min(h, span);
    }

    std::size_t next = 0;
    while (next < t_out.size() && t_out[next] == t0) {
        sol.t.push_back(t0);
        sol.y.push_back(y);
        ++next;
    }

    State tmp, k2, k3, k4, k5, k6, k7, y_new;
    while (next < t_out.size()) {
        if (sol.accepted + sol.rejected > opt.max_steps) {
            throw StiffnessError("step limit exceeded at t = " + std::to_string(t) + ", state " + detail::describe(y));
        }
        const double target = t_out[next];
        bool hits = false;
        double step = h;
        if (step >= std::abs(target - t)) {
            step = std::abs(target - t);
            hits = true;
        }
        const double hs = dir * step;

        for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + hs * a21 * k1[i];
        k2 = f(t + c2 * hs, tmp);
        for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + hs * (a31 * k1[i] + a32 * k2[i]);
        k3 = f(t + c3 * hs, tmp);
        for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + hs * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        k4 = f(t + c4 * hs, tmp);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + hs * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        k5 = f(t + c5 * hs, tmp);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + hs * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        k6 = f(t + hs, tmp);
        for (std::size_t i = 0; i < N; ++i)
            y_new[i] = y[i] + hs * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        k7 = f(t + hs, y_new);

        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double e =
                hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double sc = opt.tol * std::max({1.0, std::abs(y[i]), std::abs(y_new[i])});
            err = std::max(err, std::abs(e) / sc);
        }
        if (!std::isfinite(err)) err = 1e10;

        if (err <= 1.0) {
            t = hits ? target : t + hs;
            y = y_new;
            k1 = k7;
            ++sol.accepted;
            on_step(t, y);
            if (detail::max_abs(y) > opt.max_norm) {
                std::ostringstream os;
                os << "solution norm exceeded " << opt.max_norm << " at t = " << t << ", state "
                   << detail::describe(y);
                throw DivergenceError(os.str());
            }
            while (next < t_out.size() && t_out[next] == t) {
                sol.t.push_back(t);
                sol.y.push_back(y);
                ++next;
            }
            if (hits) continue;  // keep h: the shortened step says nothing about the scale
        } else {
            ++sol.rejected;
        }
        const double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        h = step * factor;
        if (h < h_min) {
            std::ostringstream os;
            os << "step size underflow (h = " << h << ") at t = " << t << ", state " << detail::describe(y);
            throw StiffnessError(os.str());
        }
    }
    return sol;
}

/// Dense trajectory: every accepted step from t0 to t1 is recorded.
template <std::size_t N, class F>
OdeSolution<N> dormand_prince_trajectory(F&& f, double t0, std::array<double, N> y0, double t1,
                                         const OdeOptions& opt = {})
{
    OdeSolution<N> out;
    out.t.push_back(t0);
    out.y.push_back(y0);
    auto end = dormand_prince(
        std::forward<F>(f), t0, y0, std::vector<double>{t1}, opt, [&](double t, const std::array<double, N>& y) {
            out.t.push_back(t);
            out.y.push_back(y);
        });
    out.accepted = end.accepted;
    out.rejected = end.rejected;
    return out;
}

}  // namespace dengue
