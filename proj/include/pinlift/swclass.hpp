#pragma once

#include "pinlift/spincheck.hpp"

namespace pinlift {

// H^1(O(n), F2) coefficient of w1(gamma^n)
struct SW1 {
    int c = 0;
};

// H^2(O(n), F2) coefficients in the basis {w2(gamma^n), e_cup}
struct SW2 {
    int a = 0, b = 0;
};

// restriction to D2 = <d1, d2> in the basis {alpha^2, beta^2, alpha beta}
struct SW2_D2 {
    int alpha2 = 0, beta2 = 0, alphabeta = 0;
};

SW1 w1(const RepDescriptor& rep);
SW2 w2(const RepDescriptor& rep);

// w2 of the restriction to D2 from the four character values at 1, d1, d2, d1*d2
SW2_D2 w2_via_D2(const Int& chi1, const Int& chi_d1, const Int& chi_d2, const Int& chi_d1d2);

// w2 + w1 cup w1 = 0, i.e. a = 0 and b + c = 0 in F2 (w1(gamma)^2 = e_cup)
bool obstruction_vanishes(const SW1& w1, const SW2& w2);

}  // namespace pinlift
