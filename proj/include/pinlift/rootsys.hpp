#pragma once

#include <string>

#include "pinlift/linalg.hpp"

namespace pinlift {

enum class Family { A, B, C, D, BC, E6, F4, G2 };

std::string family_name(Family f);

struct CartanLabel {
    Family family;
    int rank;
    bool operator==(const CartanLabel&) const = default;
    std::string str() const;
};

// crystallographic root system in an explicit orthogonal ambient space
struct RootSystem {
    CartanLabel label;
    size_t ambient_dim = 0;
    Mat simple;    // simple roots
    Mat positive;  // all positive roots (includes both e_i and 2e_i for BC)
    Mat roots;     // positive ∪ -positive
    Vec delta;     // half-sum of positive roots
    Rat killing_c; // (θ, θ + 2δ) for θ the highest root; normalizes the dual Killing form
};

// A_n lives in n+1 coordinates (sum-zero hyperplane), E6 in the standard
// 8-coordinate realization, everything else in rank-many coordinates.
RootSystem build(Family f, int rank);
inline RootSystem build(CartanLabel l) { return build(l.family, l.rank); }

// positive root of maximal height
Vec highest_root(const RootSystem& rs);

// dual Killing form (μ1, μ2)/c; for A_n inputs are first projected to the
// sum-zero hyperplane so weights are treated modulo the all-ones vector
Rat killing_dual_pairing(const RootSystem& rs, const Vec& mu1, const Vec& mu2);

// identify an abstract root system from its root list; lengths and angles are
// taken with respect to the bilinear form x^T gram y
CartanLabel classify(const Mat& roots, const Mat& gram);

// equality of labels up to the exceptional isomorphisms
// (A1=B1=C1, B2=C2, A3=D3)
bool same_type(CartanLabel a, CartanLabel b);
CartanLabel canonical_label(CartanLabel l);

}  // namespace pinlift
