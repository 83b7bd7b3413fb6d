#include "pinlift/rootsys.hpp"

#include <algorithm>
#include <map>

namespace pinlift {

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::BC: return "BC";
        case Family::E6: return "E6";
        case Family::F4: return "F4";
        case Family::G2: return "G2";
    }
    throw std::logic_error("bad family");
}

std::string CartanLabel::str() const {
    if (family == Family::E6 || family == Family::F4 || family == Family::G2)
        return family_name(family);
    return family_name(family) + std::to_string(rank);
}

namespace {

Vec unit(size_t dim, size_t i) {
    Vec v(dim, 0);
    v[i] = 1;
    return v;
}

Mat all_roots(Family f, int n) {
    Mat r;
    auto push_pm = [&r](const Vec& v) {
        r.push_back(v);
        r.push_back(negate(v));
    };
    switch (f) {
        case Family::A: {
            size_t d = n + 1;
            for (size_t i = 0; i < d; ++i)
                for (size_t j = i + 1; j < d; ++j) push_pm(unit(d, i) - unit(d, j));
            break;
        }
        case Family::B:
        case Family::C:
        case Family::D:
        case Family::BC: {
            size_t d = n;
            for (size_t i = 0; i < d; ++i)
                for (size_t j = i + 1; j < d; ++j) {
                    push_pm(unit(d, i) - unit(d, j));
                    push_pm(unit(d, i) + unit(d, j));
                }
            for (size_t i = 0; i < d; ++i) {
                if (f == Family::B || f == Family::BC) push_pm(unit(d, i));
                if (f == Family::C || f == Family::BC) push_pm(Rat(2) * unit(d, i));
            }
            break;
        }
        case Family::E6: {
            for (size_t i = 0; i < 5; ++i)
                for (size_t j = i + 1; j < 5; ++j) {
                    push_pm(unit(8, i) - unit(8, j));
                    push_pm(unit(8, i) + unit(8, j));
                }
            // ±(e8-e7-e6 + Σ ±e_i)/2 with an even number of minus signs among e_1..e_5
            for (int mask = 0; mask < 32; ++mask) {
                if (__builtin_popcount(mask) % 2 != 0) continue;
                Vec v(8, 0);
                for (size_t i = 0; i < 5; ++i) v[i] = (mask >> i) & 1 ? Rat(-1, 2) : Rat(1, 2);
                v[5] = Rat(-1, 2);
                v[6] = Rat(-1, 2);
                v[7] = Rat(1, 2);
                push_pm(v);
            }
            break;
        }
        case Family::F4: {
            for (size_t i = 0; i < 4; ++i) {
                push_pm(unit(4, i));
                for (size_t j = i + 1; j < 4; ++j) {
                    push_pm(unit(4, i) - unit(4, j));
                    push_pm(unit(4, i) + unit(4, j));
                }
            }
            for (int mask = 0; mask < 16; ++mask) {
                Vec v(4);
                for (size_t i = 0; i < 4; ++i) v[i] = (mask >> i) & 1 ? Rat(-1, 2) : Rat(1, 2);
                if (lex_positive(v)) push_pm(v);
            }
            break;
        }
        case Family::G2: {
            push_pm(unit(3, 0) - unit(3, 1));
            push_pm(unit(3, 1) - unit(3, 2));
            push_pm(unit(3, 0) - unit(3, 2));
            for (size_t i = 0; i < 3; ++i) {
                Vec v(3, -1);
                v[i] = 2;
                push_pm(v);
            }
            break;
        }
    }
    return r;
}

Mat simple_roots(Family f, int n) {
    Mat s;
    switch (f) {
        case Family::A: {
            size_t d = n + 1;
            for (size_t i = 0; i + 1 < d; ++i) s.push_back(unit(d, i) - unit(d, i + 1));
            break;
        }
        case Family::B:
        case Family::C:
        case Family::D:
        case Family::BC: {
            size_t d = n;
            for (size_t i = 0; i + 1 < d; ++i) s.push_back(unit(d, i) - unit(d, i + 1));
            if (f == Family::B || f == Family::BC) s.push_back(unit(d, d - 1));
            else if (f == Family::C) s.push_back(Rat(2) * unit(d, d - 1));
            else if (d >= 2) s.push_back(unit(d, d - 2) + unit(d, d - 1));
            break;
        }
        case Family::E6: {
            Vec a1(8, Rat(-1, 2));
            a1[0] = Rat(1, 2);
            a1[7] = Rat(1, 2);
            a1[5] = Rat(-1, 2);
            a1[6] = Rat(-1, 2);
            s.push_back(a1);
            s.push_back(unit(8, 0) + unit(8, 1));
            s.push_back(unit(8, 1) - unit(8, 0));
            s.push_back(unit(8, 2) - unit(8, 1));
            s.push_back(unit(8, 3) - unit(8, 2));
            s.push_back(unit(8, 4) - unit(8, 3));
            break;
        }
        case Family::F4: {
            s.push_back(unit(4, 1) - unit(4, 2));
            s.push_back(unit(4, 2) - unit(4, 3));
            s.push_back(unit(4, 3));
            Vec v(4, Rat(-1, 2));
            v[0] = Rat(1, 2);
            s.push_back(v);
            break;
        }
        case Family::G2: {
            s.push_back(unit(3, 0) - unit(3, 1));
            Vec v = {-2, 1, 1};
            s.push_back(v);
            break;
        }
    }
    return s;
}

bool valid_rank(Family f, int n) {
    switch (f) {
        case Family::A: return n >= 1;
        case Family::B: return n >= 1;
        case Family::C: return n >= 1;
        case Family::D: return n >= 2;
        case Family::BC: return n >= 1;
        case Family::E6: return n == 6;
        case Family::F4: return n == 4;
        case Family::G2: return n == 2;
    }
    return false;
}

}  // namespace

RootSystem build(Family f, int rank) {
    if (!valid_rank(f, rank)) throw std::invalid_argument("invalid rank for " + family_name(f));
    RootSystem rs;
    rs.label = {f, rank};
    rs.simple = simple_roots(f, rank);
    rs.roots = all_roots(f, rank);
    rs.ambient_dim = rs.roots[0].size();

    // a root is positive iff its expansion in the simple basis has positive
    // coefficient sum; E = (S S^T)^{-1} S recovers coefficients of vectors in span(S)
    const Mat& S = rs.simple;
    Mat E = mat_mul(inverse(mat_mul(S, transpose(S))), S);
    rs.delta = Vec(rs.ambient_dim, 0);
    for (const auto& a : rs.roots) {
        Rat h = 0;
        for (const auto& c : mat_apply(E, a)) h += c;
        if (h > 0) rs.positive.push_back(a);
    }
    std::sort(rs.positive.begin(), rs.positive.end(), lex_less);
    for (const auto& a : rs.positive) rs.delta = rs.delta + a;
    rs.delta = Rat(1, 2) * rs.delta;

    Vec theta = highest_root(rs);
    rs.killing_c = dot(theta, theta + Rat(2) * rs.delta);
    return rs;
}

Vec highest_root(const RootSystem& rs) {
    // θ is the positive root dominating all others; maximal (θ, δ) singles it out
    const Vec* best = nullptr;
    Rat best_h;
    for (const auto& a : rs.positive) {
        Rat h = dot(a, rs.delta);
        if (!best || h > best_h) {
            best = &a;
            best_h = h;
        }
    }
    return *best;
}

Rat killing_dual_pairing(const RootSystem& rs, const Vec& mu1, const Vec& mu2) {
    auto proj = [&](Vec v) {
        if (rs.label.family != Family::A) return v;
        Rat s = 0;
        for (const auto& x : v) s += x;
        s /= Rat((unsigned long)v.size());
        for (auto& x : v) x -= s;
        return v;
    };
    return dot(proj(mu1), proj(mu2)) / rs.killing_c;
}

CartanLabel classify(const Mat& roots, const Mat& gram) {
    if (roots.empty()) throw std::invalid_argument("classify: empty root list");
    auto form = [&](const Vec& a, const Vec& b) { return dot(a, mat_apply(gram, b)); };

    std::map<Vec, bool> haveroot;
    for (const auto& a : roots) haveroot[a] = true;
    bool nonreduced = false;
    for (const auto& a : roots)
        if (haveroot.count(Rat(2) * a)) nonreduced = true;

    Mat span = roots;
    int rank = (int)rref(span);

    Rat nmin, nmax;
    bool first = true;
    for (const auto& a : roots) {
        Rat n = form(a, a);
        if (first || n < nmin) nmin = n;
        if (first || n > nmax) nmax = n;
        first = false;
    }

    if (nonreduced) return {Family::BC, rank};

    size_t N = roots.size();
    Rat ratio = nmax / nmin;
    if (ratio == 1) {
        if (rank == 6 && N == 72) return {Family::E6, 6};
        if (N == (size_t)rank * (rank + 1)) return {Family::A, rank};
        if (N == (size_t)2 * rank * (rank - 1)) return canonical_label({Family::D, rank});
        throw std::logic_error("classify: unrecognized simply-laced system");
    }
    if (ratio == 2) {
        if (rank == 4 && N == 48) return {Family::F4, 4};
        if (rank == 1) return {Family::A, 1};
        if (rank == 2) return {Family::C, 2};
        // B_n has 2n long roots of each sign pair beyond the short ones;
        // count roots of maximal length: B_n -> 2n(n-1), C_n -> 2n
        size_t nlong = 0;
        for (const auto& a : roots)
            if (form(a, a) == nmax) ++nlong;
        if (nlong == (size_t)2 * rank) return {Family::C, rank};
        return {Family::B, rank};
    }
    if (ratio == 3 && rank == 2) return {Family::G2, 2};
    throw std::logic_error("classify: unrecognized root system");
}

CartanLabel canonical_label(CartanLabel l) {
    if (l.rank == 1 && (l.family == Family::B || l.family == Family::C || l.family == Family::D))
        return {Family::A, 1};
    if (l.rank == 2 && l.family == Family::B) return {Family::C, 2};
    if (l.rank == 3 && l.family == Family::D) return {Family::A, 3};
    return l;
}

bool same_type(CartanLabel a, CartanLabel b) { return canonical_label(a) == canonical_label(b); }

}  // namespace pinlift
