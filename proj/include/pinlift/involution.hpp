#pragma once

#include "pinlift/rootsys.hpp"

namespace pinlift {

// an order-2 ambient linear map permuting the simple roots according to a
// Dynkin diagram symmetry, acting as the identity on the orthocomplement of
// the root span
struct DiagramInvolution {
    Mat matrix;             // ambient action
    std::vector<int> perm;  // induced permutation of simple-root indices
};

// the nontrivial diagram involution where one exists:
//   A_n (n>=2): full reversal,  D_n: swap of the fork nodes,  E6: the flip.
// Throws std::invalid_argument for other families.
DiagramInvolution builtin_involution(const RootSystem& rs);

// general constructor from a permutation of the simple roots
DiagramInvolution make_involution(const RootSystem& rs, const std::vector<int>& perm);

}  // namespace pinlift
