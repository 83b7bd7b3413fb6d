#include "pinlift/swclass.hpp"

namespace pinlift {

SW1 w1(const RepDescriptor& rep) {
    if (rep.kind == RepKind::OddProduct && !rep.rho_sgn) return {0};
    SpinVerdict v = check_spinorial(rep);
    return {(int)mod(v.m, 2)};
}

SW2 w2(const RepDescriptor& rep) {
    if (rep.kind == RepKind::O2) {
        // rho_n pulls back w2(gamma^2) n times around the circle; det and the
        // trivial character carry no degree-2 class
        if (rep.o2_n > 0) return {(int)(rep.o2_n % 2), 0};
        return {0, 0};
    }
    SpinVerdict v = check_spinorial(rep);
    // a = Q mod 2, b = C(m,2) mod 2 — the same exact quantities the criteria use
    Int binom = v.m * (v.m - 1) / 2;
    return {(int)mod(to_int(v.q), 2), (int)mod(binom, 2)};
}

SW2_D2 w2_via_D2(const Int& chi1, const Int& chi_d1, const Int& chi_d2, const Int& chi_d1d2) {
    auto g_half = [&](const Int& chid) {
        Int diff = chi1 - chid;
        if (mod(diff, 2) != 0)
            throw std::invalid_argument("character difference is odd; not involution data");
        Int g = diff / 2;
        if (g < 0) throw std::invalid_argument("negative eigenvalue multiplicity");
        // floor(g/2) mod 2
        return (int)mod(Int(g / 2), 2);
    };
    int gd1 = g_half(chi_d1), gd2 = g_half(chi_d2), gd12 = g_half(chi_d1d2);
    return {gd2, gd2, (gd12 + gd1 + gd2) % 2};
}

bool obstruction_vanishes(const SW1& w1, const SW2& w2) {
    return w2.a == 0 && (w2.b + w1.c) % 2 == 0;
}

}  // namespace pinlift
