#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

namespace dengue {

/// Real polynomial with coefficients stored in ascending powers.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<double> ascending);
    Poly(std::initializer_list<double> ascending);

    /// Monic polynomial from descending non-leading coefficients:
    /// monic({a2, a1, a0}) is λ³ + a2λ² + a1λ + a0.
    static Poly monic(std::initializer_list<double> descending_tail);

    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    double operator[](std::size_t i) const { return i < coef_.size() ? coef_[i] : 0.0; }
    const std::vector<double>& coefficients() const { return coef_; }

    double operator()(double x) const;
    std::complex<double> operator()(std::complex<double> x) const;
    Poly derivative() const;

    friend Poly operator*(const Poly& a, const Poly& b);

    /// Roots by closed formulas (degree <= 3), each Newton-polished.
    std::vector<std::complex<double>> roots() const;

    std::string to_string(const std::string& var = "λ") const;

private:
    std::vector<double> coef_;
};

std::vector<std::complex<double>> quadratic_roots(double b, double c);

/// λ³ + a2λ² + a1λ + a0: one real root by the trigonometric or Cardano
/// formula, deflation to a quadratic, then Newton polishing of all three.
std::vector<std::complex<double>> cubic_roots(double a2, double a1, double a0);

/// True iff every root of λ² + a1λ + a0 has negative real part.
bool routh_hurwitz_quadratic(double a1, double a0);

/// Product of all factors.
Poly product(const std::vector<Poly>& factors);

}  // namespace dengue
