#include "dengue/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dengue/errors.hpp"

namespace dengue {

Poly::Poly(std::vector<double> ascending) : coef_(std::move(ascending))
{
    while (coef_.size() > 1 && coef_.back() == 0.0) coef_.pop_back();
    if (coef_.empty()) coef_.push_back(0.0);
}

Poly::Poly(std::initializer_list<double> ascending) : Poly(std::vector<double>(ascending)) {}

Poly Poly::monic(std::initializer_list<double> descending_tail)
{
    std::vector<double> c(descending_tail);
    std::reverse(c.begin(), c.end());
    c.push_back(1.0);
    return Poly(std::move(c));
}

double Poly::operator()(double x) const
{
    double acc = 0.0;
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> Poly::operator()(std::complex<double> x) const
{
    std::complex<double> acc = 0.0;
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const
{
    if (coef_.size() <= 1) return Poly{0.0};
    std::vector<double> d(coef_.size() - 1);
    for (std::size_t i = 1; i < coef_.size(); ++i) d[i - 1] = static_cast<double>(i) * coef_[i];
    return Poly(std::move(d));
}

Poly operator*(const Poly& a, const Poly& b)
{
    std::vector<double> c(a.coef_.size() + b.coef_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coef_.size(); ++i)
        for (std::size_t j = 0; j < b.coef_.size(); ++j) c[i + j] += a.coef_[i] * b.coef_[j];
    return Poly(std::move(c));
}

Poly product(const std::vector<Poly>& factors)
{
    Poly acc{1.0};
    for (const auto& f : factors) acc = acc * f;
    return acc;
}

namespace {

template <class T>
T polish(const Poly& p, const Poly& dp, T x)
{
    for (int it = 0; it < 8; ++it) {
        const T fx = p(x);
        const T dfx = dp(x);
        if (std::abs(dfx) == 0.0) break;
        const T step = fx / dfx;
        const T next = x - step;
        if (!(std::abs(p(next)) < std::abs(fx))) break;
        x = next;
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    return x;
}

}  // namespace

std::vector<std::complex<double>> quadratic_roots(double b, double c)
{
    const double disc = b * b - 4.0 * c;
    if (disc >= 0.0) {
        const double s = std::sqrt(disc);
        const double q = -0.5 * (b + std::copysign(s, b));
        if (q == 0.0) return {0.0, 0.0};
        return {q, c / q};
    }
    const double re = -0.5 * b;
    const double im = 0.5 * std::sqrt(-disc);
    return {{re, im}, {re, -im}};
}

std::vector<std::complex<double>> cubic_roots(double a2, double a1, double a0)
{
    const Poly p = Poly::monic({a2, a1, a0});
    const Poly dp = p.derivative();

    double real_root = 0.0;
    if (a0 == 0.0) {
        real_root = 0.0;
    } else {
        const double shift = a2 / 3.0;
        const double pp = a1 - a2 * a2 / 3.0;
        const double qq = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;
        const double D = qq * qq / 4.0 + pp * pp * pp / 27.0;
        double t;
        if (D < 0.0) {
            // Three real roots; take the one of largest magnitude for deflation.
            const double m = 2.0 * std::sqrt(-pp / 3.0);
            const double arg = std::clamp(3.0 * qq / (pp * m), -1.0, 1.0);
            const double theta = std::acos(arg) / 3.0;
            double best = 0.0;
            for (int k = 0; k < 3; ++k) {
                const double tk = m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0);
                if (std::abs(tk - shift) >= std::abs(best)) best = tk - shift;
            }
            t = best + shift;
        } else {
            const double s = std::sqrt(D);
            t = std::cbrt(-qq / 2.0 + s) + std::cbrt(-qq / 2.0 - s);
        }
        real_root = polish(p, dp, t - shift);
    }

    // Deflate: p(λ) = (λ - r)(λ² + b1 λ + b0).
    const double b1 = a2 + real_root;
    const double b0 = (std::abs(real_root) > 1.0 && real_root != 0.0) ? -a0 / real_root
                                                                        : a1 + real_root * b1;
    auto rest = quadratic_roots(b1, b0);
    std::vector<std::complex<double>> out{real_root};
    for (auto z : rest) {
        if (z.imag() == 0.0) {
            out.emplace_back(polish(p, dp, z.real()));
        } else {
            out.push_back(polish(p, dp, z));
        }
    }
    // Keep conjugate pairs exact after polishing.
    if (out[1].imag() != 0.0) out[2] = std::conj(out[1]);
    return out;
}

std::vector<std::complex<double>> Poly::roots() const
{
    const int deg = degree();
    const double lead = coef_.back();
    switch (deg) {
    case 0: return {};
    case 1: return {-coef_[0] / lead};
    case 2: {
        auto r = quadratic_roots(coef_[1] / lead, coef_[0] / lead);
        const Poly dp = derivative();
        for (auto& z : r) z = z.imag() == 0.0 ? std::complex<double>(polish(*this, dp, z.real())) : z;
        return r;
    }
    case 3: return cubic_roots(coef_[2] / lead, coef_[1] / lead, coef_[0] / lead);
    default: break;
    }
    throw NotImplementedError("closed-form roots are only available up to degree 3");
}

std::string Poly::to_string(const std::string& var) const
{
    std::ostringstream os;
    os.precision(10);
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const double c = coef_[static_cast<std::size_t>(i)];
        if (c == 0.0 && !(first && i == 0)) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        const double a = std::abs(c);
        if (i == 0 || a != 1.0) os << a;
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

bool routh_hurwitz_quadratic(double a1, double a0) { return a1 > 0.0 && a0 > 0.0; }

}  // namespace dengue
