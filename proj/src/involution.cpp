#include "pinlift/involution.hpp"

#include <algorithm>
#include <numeric>

namespace pinlift {

DiagramInvolution make_involution(const RootSystem& rs, const std::vector<int>& perm) {
    size_t r = rs.simple.size();
    if (perm.size() != r) throw std::invalid_argument("permutation size mismatch");
    Mat P = rs.simple;
    Mat Q;
    for (size_t i = 0; i < r; ++i) Q.push_back(rs.simple[perm[i]]);
    for (const auto& v : null_space(rs.simple)) {
        P.push_back(v);
        Q.push_back(v);
    }
    DiagramInvolution inv;
    inv.perm = perm;
    inv.matrix = transpose(mat_mul(inverse(P), Q));
    if (!mat_equal(mat_mul(inv.matrix, inv.matrix), identity_mat(rs.ambient_dim)))
        throw std::invalid_argument("permutation does not define an involution");
    return inv;
}

DiagramInvolution builtin_involution(const RootSystem& rs) {
    size_t r = rs.simple.size();
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    switch (rs.label.family) {
        case Family::A:
            if (r < 2) throw std::invalid_argument("A1 has no nontrivial diagram involution");
            std::reverse(perm.begin(), perm.end());
            break;
        case Family::D:
            std::swap(perm[r - 2], perm[r - 1]);
            break;
        case Family::E6:
            // simple roots ordered a1..a6: 1<->6, 3<->5
            std::swap(perm[0], perm[5]);
            std::swap(perm[2], perm[4]);
            break;
        default:
            throw std::invalid_argument(rs.label.str() + " has no nontrivial diagram involution");
    }
    return make_involution(rs, perm);
}

}  // namespace pinlift
