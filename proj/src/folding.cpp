#include "pinlift/folding.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pinlift/repcalc.hpp"

namespace pinlift {

namespace {

CartanLabel folded_label(CartanLabel src) {
    switch (src.family) {
        case Family::D: return {Family::B, src.rank - 1};
        case Family::A:
            if (src.rank % 2 == 1) return {Family::C, (src.rank + 1) / 2};
            return {Family::BC, src.rank / 2};
        case Family::E6: return {Family::F4, 4};
        default: throw std::invalid_argument("no folding for " + src.str());
    }
}

Vec project_a(const RootSystem& rs, Vec v) {
    if (rs.label.family != Family::A) return v;
    Rat s = 0;
    for (const auto& x : v) s += x;
    s /= Rat((unsigned long)v.size());
    for (auto& x : v) x -= s;
    return v;
}

}  // namespace

FoldedSystem fold(const RootSystem& rs, const DiagramInvolution& inv) {
    FoldedSystem fs;
    fs.source = rs.label;
    fs.label = folded_label(rs.label);

    Mat proj;
    for (const auto& a : rs.roots) {
        Vec p = Rat(1, 2) * (a + mat_apply(inv.matrix, a));
        if (!is_zero(p)) proj.push_back(p);
    }
    fs.basis = orthogonalize(row_space_basis(proj));
    fs.gram = mat_mul(fs.basis, transpose(fs.basis));
    Mat ginv = inverse(fs.gram);

    auto coords = [&](const Vec& p) { return mat_apply(ginv, mat_apply(fs.basis, p)); };

    std::set<Vec> all, pos;
    for (const auto& a : rs.roots) {
        Vec p = Rat(1, 2) * (a + mat_apply(inv.matrix, a));
        if (is_zero(p)) continue;
        Vec c = coords(p);
        all.insert(c);
        if (std::find(rs.positive.begin(), rs.positive.end(), a) != rs.positive.end())
            pos.insert(c);
    }
    fs.roots.assign(all.begin(), all.end());
    fs.positive.assign(pos.begin(), pos.end());
    for (const auto& c : fs.positive)
        if (!all.count(Rat(1, 2) * c)) fs.positive_reduced.push_back(c);

    fs.rho_tau = Vec(fs.basis.size(), 0);
    for (const auto& c : fs.positive)
        fs.rho_tau = fs.rho_tau + (1 / folded_form(fs, c, c)) * c;

    CartanLabel check = classify(fs.roots, fs.gram);
    if (!same_type(check, fs.label))
        throw std::logic_error("folded system classified as " + check.str() + ", expected " +
                               fs.label.str());
    return fs;
}

Rat folded_form(const FoldedSystem& fs, const Vec& x, const Vec& y) {
    return dot(x, mat_apply(fs.gram, y));
}

Vec restrict_weight(const RootSystem& rs, const FoldedSystem& fs, const Vec& lam) {
    Vec v = project_a(rs, lam);
    return mat_apply(inverse(fs.gram), mat_apply(fs.basis, v));
}

Rat twisted_char_g0(const RootSystem& rs, const DiagramInvolution& inv, const Vec& lam) {
    if (rs.label == CartanLabel{Family::D, 2}) {
        // the folded system B1 retains only one parameter; use the ambient product
        Vec l = dominant_rep(rs, lam);
        return (l[0] - l[1] + 1) * (l[0] + l[1] + 1);
    }
    return twisted_char_folded(rs, inv, lam);
}

Rat twisted_char_folded(const RootSystem& rs, const DiagramInvolution& inv, const Vec& lam) {
    FoldedSystem fs = fold(rs, inv);
    Vec mu = restrict_weight(rs, fs, dominant_rep(rs, lam));
    Vec num = mu + fs.rho_tau;
    Rat prod = 1;
    for (const auto& b : fs.positive_reduced)
        prod *= folded_form(fs, b, num) / folded_form(fs, b, fs.rho_tau);
    return prod;
}

std::vector<std::pair<Mat, int>> folded_weyl_elements(const FoldedSystem& fs) {
    size_t dim = fs.basis.size();
    std::vector<Mat> gens;
    for (const auto& b : fs.positive_reduced) {
        Mat m(dim, Vec(dim, 0));
        Rat nb = folded_form(fs, b, b);
        for (size_t j = 0; j < dim; ++j) {
            Vec e(dim, 0);
            e[j] = 1;
            Vec img = e - (2 * folded_form(fs, b, e) / nb) * b;
            for (size_t i = 0; i < dim; ++i) m[i][j] = img[i];
        }
        gens.push_back(m);
    }
    std::map<Mat, int> seen;
    std::vector<std::pair<Mat, int>> out{{identity_mat(dim), 1}};
    seen[out[0].first] = 1;
    for (size_t i = 0; i < out.size(); ++i) {
        auto [w, s] = out[i];
        for (const auto& g : gens) {
            Mat wg = mat_mul(g, w);
            if (seen.emplace(wg, -s).second) {
                if (out.size() >= 10000)
                    throw std::runtime_error("folded Weyl group exceeds element cap");
                out.emplace_back(wg, -s);
            }
        }
    }
    return out;
}

namespace {

// truncated ratio of Σ ε(w) exp(t·a_w) over the given exponent/sign lists
Rat series_ratio(const std::vector<std::pair<Rat, int>>& num_terms,
                 const std::vector<std::pair<Rat, int>>& den_terms, const Rat& t, size_t kmax) {
    Rat num = 0, den = 0, tk = 1, fact = 1;
    std::vector<Rat> npow(num_terms.size(), 1), dpow(den_terms.size(), 1);
    for (size_t k = 0; k <= kmax; ++k) {
        if (k > 0) {
            tk *= t;
            fact *= Rat((unsigned long)k);
            for (size_t i = 0; i < num_terms.size(); ++i) npow[i] *= num_terms[i].first;
            for (size_t i = 0; i < den_terms.size(); ++i) dpow[i] *= den_terms[i].first;
        }
        Rat ns = 0, ds = 0;
        for (size_t i = 0; i < num_terms.size(); ++i) ns += num_terms[i].second * npow[i];
        for (size_t i = 0; i < den_terms.size(); ++i) ds += den_terms[i].second * dpow[i];
        num += ns * tk / fact;
        den += ds * tk / fact;
    }
    if (den == 0) throw std::logic_error("vanishing Weyl denominator; h not regular?");
    return num / den;
}

}  // namespace

Rat twisted_char_numeric(const RootSystem& rs, const DiagramInvolution& inv, const Vec& lam,
                         const Vec& h, const Rat& t) {
    if (rs.label == CartanLabel{Family::D, 2}) {
        // ambient Weyl group of D2 = {1, swap, -swap, -1}; fixed line is e1
        Vec l = dominant_rep(rs, lam);
        Rat s = h.at(0);
        Rat m1 = l[0] + 1, m2 = l[1];
        std::vector<std::pair<Rat, int>> num = {
            {m1 * s, 1}, {m2 * s, -1}, {-m2 * s, -1}, {-m1 * s, 1}};
        std::vector<std::pair<Rat, int>> den = {{s, 1}, {Rat(0), -1}, {Rat(0), -1}, {-s, 1}};
        return series_ratio(num, den, t, 2 + 30);
    }
    FoldedSystem fs = fold(rs, inv);
    Vec mu = restrict_weight(rs, fs, dominant_rep(rs, lam));
    Vec mu1 = mu + fs.rho_tau;
    auto W = folded_weyl_elements(fs);
    std::vector<std::pair<Rat, int>> num, den;
    for (const auto& [w, sign] : W) {
        num.emplace_back(folded_form(fs, mat_apply(w, mu1), h), sign);
        den.emplace_back(folded_form(fs, mat_apply(w, fs.rho_tau), h), sign);
    }
    return series_ratio(num, den, t, fs.positive_reduced.size() + 30);
}

}  // namespace pinlift
