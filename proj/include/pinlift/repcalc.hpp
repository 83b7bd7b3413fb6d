#pragma once

#include "pinlift/involution.hpp"
#include "pinlift/rootsys.hpp"

namespace pinlift {

// (λ, α) >= 0 for every simple root α
bool is_dominant(const RootSystem& rs, const Vec& lam);

// Cartan pairings 2(λ,α)/(α,α) are nonnegative integers
bool is_integral_dominant(const RootSystem& rs, const Vec& lam);

// Weyl dimension formula
Int weyl_dim(const RootSystem& rs, const Vec& lam);

// eigenvalue of the Casimir element normalized by the dual Killing form:
// (λ, λ + 2δ)/c, equal to 1 for the adjoint representation
Rat casimir_trace(const RootSystem& rs, const Vec& lam);

// weight multiplicities of the irreducible with highest weight λ
struct WeightTable {
    std::vector<std::pair<Vec, long long>> dominant;  // one entry per dominant weight
    Int total_dim;                                    // Σ multiplicities over all weights
};

// Freudenthal recursion; weight enumeration is capped by the
// PINLIFT_FREUDENTHAL_CAP environment variable (default 1000000),
// std::runtime_error on overflow of the cap
WeightTable freudenthal_multiplicities(const RootSystem& rs, const Vec& lam);

// character at a diagonal sign matrix: Σ_μ m(μ) Π_i signs_i^{μ_i};
// requires an integral weight lattice (all μ_i integers)
Int char_at_diagonal(const RootSystem& rs, const WeightTable& table,
                     const std::vector<int>& signs);
Int char_at_diagonal(const RootSystem& rs, const Vec& lam, const std::vector<int>& signs);

// dominant representative of the weight τ(λ)
Vec tau_action(const RootSystem& rs, const DiagramInvolution& inv, const Vec& lam);

// τ(λ) == λ as weights (for A-family, modulo the all-ones vector)
bool tau_fixed(const RootSystem& rs, const DiagramInvolution& inv, const Vec& lam);

// dominant element of the Weyl orbit of v
Vec dominant_rep(const RootSystem& rs, Vec v);

}  // namespace pinlift
