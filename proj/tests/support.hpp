#pragma once

#include <random>

#include "dengue/params.hpp"

namespace dengue::testing {

/// Random positive nondimensional parameters, ε = 0, μ₃ = 0.
inline NondimParams random_params(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> U(0.01, 2.0);
    NondimParams n;
    n.gamma = U(rng);
    n.mu1 = U(rng);
    n.mu2 = U(rng);
    n.sigma = U(rng);
    n.beta1 = U(rng);
    n.beta2 = U(rng);
    n.k = U(rng);
    n.nu = 0.5 * U(rng);
    return n;
}

/// Same draw pushed onto Q₀ = 1 through γ = μ₁μ₂ / (1 - μ₁), μ₁ < 1.
inline NondimParams random_unit_Q0(std::mt19937_64& rng)
{
    NondimParams n = random_params(rng);
    std::uniform_real_distribution<double> M(0.01, 0.9);
    n.mu1 = M(rng);
    n.gamma = n.mu1 * n.mu2 / (1.0 - n.mu1);
    return n;
}

}  // namespace dengue::testing
