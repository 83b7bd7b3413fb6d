#pragma once

#include "pinlift/involution.hpp"
#include "pinlift/rootsys.hpp"

namespace pinlift {

// image of a root system under x -> (x + τx)/2, expressed in coordinates of an
// orthogonal primitive basis of the τ-fixed part of the root span
struct FoldedSystem {
    CartanLabel source;  // label of the unfolded system
    CartanLabel label;   // folded type: D_n -> B_{n-1}, A_{2k-1} -> C_k, A_{2k} -> BC_k, E6 -> F4
    Mat basis;           // rows: basis of the fixed subspace, ambient coordinates
    Mat gram;            // Gram matrix of the basis (diagonal)
    Mat roots;           // folded roots in basis coordinates; contains both β and 2β for BC
    Mat positive;        // folded images of positive roots
    Mat positive_reduced;  // indivisible positive folded roots (one per direction)
    Vec rho_tau;           // half-sum of folded positive coroots w.r.t. the induced form
};

FoldedSystem fold(const RootSystem& rs, const DiagramInvolution& inv);

// the induced bilinear form on folded coordinates
Rat folded_form(const FoldedSystem& fs, const Vec& x, const Vec& y);

// orthogonal projection of a weight onto the fixed subspace, in basis
// coordinates; A-family weights are first projected to the sum-zero hyperplane
Vec restrict_weight(const RootSystem& rs, const FoldedSystem& fs, const Vec& lam);

// twisted character of V^λ at the canonical disconnected element:
//   Π over indivisible positive folded roots β of (β, μ+ρ^τ)/(β, ρ^τ)
// For D2 the folded system is too small to see both parameters and the value
// is taken from the ambient product (λ1-λ2+1)(λ1+λ2+1).
Rat twisted_char_g0(const RootSystem& rs, const DiagramInvolution& inv, const Vec& lam);

// the plain folded product without the D2 exception (used where the honest
// trace of the extended representation at the disconnected element is needed)
Rat twisted_char_folded(const RootSystem& rs, const DiagramInvolution& inv, const Vec& lam);

// reflection group of the folded system, as matrices in basis coordinates
// paired with their determinant signs; throws if the group exceeds 10^4 elements
std::vector<std::pair<Mat, int>> folded_weyl_elements(const FoldedSystem& fs);

// independent check of twisted_char_g0: ratio of the two alternating sums
//   Σ_w ε(w) exp(t (w(μ+ρ^τ), h)) / Σ_w ε(w) exp(t (w ρ^τ, h))
// evaluated as exact truncated power series in t (h regular, in basis
// coordinates). Converges to twisted_char_g0 as t -> 0.
Rat twisted_char_numeric(const RootSystem& rs, const DiagramInvolution& inv, const Vec& lam,
                         const Vec& h, const Rat& t);

}  // namespace pinlift
