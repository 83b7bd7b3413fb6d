#pragma once

#include "pinlift/folding.hpp"
#include "pinlift/repcalc.hpp"

namespace pinlift {

enum class GroupKind { OEven, OOdd, SO, GLR, Generic };

struct GroupId {
    GroupKind kind = GroupKind::OEven;
    int n = 0;                          // matrix size for O(n)/SO(n)/GL(n,R)
    CartanLabel generic{Family::A, 1};  // for Generic (G^0 x| C2)
    Mat cochar;  // Generic only: cocharacter generators of pi_1(G^0); empty = simply connected
};

// root system of G^0 (D_{n/2}, B_{(n-1)/2}, or the generic label);
// O(2)/SO(2)/GL(1..2) have no root system and throw
RootSystem group_root_system(const GroupId& g);
// the outer involution defining the disconnected component (OEven, Generic)
DiagramInvolution group_involution(const GroupId& g);
size_t dim_g(const RootSystem& rs);

enum class RepKind { TypeI, TypeII, OddProduct, O2, ReducibleSum };

struct RepDescriptor {
    GroupId group;
    RepKind kind = RepKind::TypeII;
    Vec lam;             // highest weight of the G^0 constituent
    int sign = +1;       // TypeII: which summand of the induced representation
    bool rho_sgn = false;  // OddProduct: rho = sgn rather than trivial
    // O2: o2_n > 0 -> rho_n; o2_n == 0 -> det if o2_det, else trivial
    long o2_n = 0;
    bool o2_det = false;
    std::vector<RepDescriptor> parts;  // ReducibleSum components
    bool dual_pair = false;  // component stands for phi + phi^dual (non-orthogonal phi)
};

struct SpinVerdict {
    bool spinorial = false;
    Rat q = 0;  // the condition-1 parity quantity
    bool q_parity_ok = false;
    Int m = 0;  // multiplicity of -1 as eigenvalue of pi(g0) (resp. pi(-I))
    bool m_condition_ok = false;
    bool has_chi = false;
    Rat chi_g0 = 0;  // Type II twisted character value (signed)
    long q_mod2 = 0, m_mod4 = 0, diff_mod8 = 0;  // audit residues
    Int dim = 0;     // dimension of the full representation of G
};

// half the gcd of |nu|^2 = sum over all roots of <alpha,nu>^2
Rat p_nu(const RootSystem& sys, const Mat& cochar_generators);

// m = 0 or 3 (mod 4): the C2-side lifting condition
bool c2_spin(const Int& m);

Rat q_typeI(const GroupId& g, const Vec& lam);
Rat q_typeII(const GroupId& g, const Vec& lam);

Int m_minus_one(const RepDescriptor& rep);

SpinVerdict check_spinorial(const RepDescriptor& rep);

// adjoint representation of O(l), l >= 4
SpinVerdict adjoint_verdict(int l);

// character-value detection: both chi(1)-chi(d1) and chi(1)-chi(d2) in {0,6} mod 8
bool char_criterion(const Int& chi1, const Int& chi_d1, const Int& chi_d2);

struct CharTriple {
    Int chi1, chi_d1, chi_d2;
};
// (chi(1), chi(d1), chi(d2)) for an O(n) descriptor, d_i = diag(-1 x i, 1, ..., 1)
CharTriple char_values_for(const RepDescriptor& rep);

}  // namespace pinlift
