#include "pinlift/repcalc.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>

namespace pinlift {

bool is_dominant(const RootSystem& rs, const Vec& lam) {
    for (const auto& a : rs.simple)
        if (dot(lam, a) < 0) return false;
    return true;
}

bool is_integral_dominant(const RootSystem& rs, const Vec& lam) {
    for (const auto& a : rs.simple) {
        Rat c = 2 * dot(lam, a) / dot(a, a);
        if (c < 0 || !is_integer(c)) return false;
    }
    return true;
}

Int weyl_dim(const RootSystem& rs, const Vec& lam) {
    Rat num = 1, den = 1;
    for (const auto& a : rs.positive) {
        num *= dot(lam + rs.delta, a);
        den *= dot(rs.delta, a);
    }
    return to_int(num / den);
}

Rat casimir_trace(const RootSystem& rs, const Vec& lam) {
    return killing_dual_pairing(rs, lam, lam + Rat(2) * rs.delta);
}

Vec dominant_rep(const RootSystem& rs, Vec v) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (const auto& a : rs.simple) {
            Rat p = dot(v, a);
            if (p < 0) {
                v = v - (2 * p / dot(a, a)) * a;
                moved = true;
            }
        }
    }
    return v;
}

Vec tau_action(const RootSystem& rs, const DiagramInvolution& inv, const Vec& lam) {
    return dominant_rep(rs, mat_apply(inv.matrix, lam));
}

bool tau_fixed(const RootSystem& rs, const DiagramInvolution& inv, const Vec& lam) {
    Vec d = tau_action(rs, inv, lam) - dominant_rep(rs, lam);
    if (rs.label.family != Family::A) return is_zero(d);
    // A-family weights are defined modulo the all-ones vector
    for (size_t i = 1; i < d.size(); ++i)
        if (d[i] != d[0]) return false;
    return true;
}

namespace {

// Freudenthal's recursion runs in integers: coordinates are doubled so that
// half-integral weights and δ become integral lattice points.
using IVec = std::vector<long long>;

long long idot(const IVec& a, const IVec& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IVec iadd(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IVec to_ivec2(const Vec& v) {  // exact doubling
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Rat q = 2 * v[i];
        if (!is_integer(q)) throw std::invalid_argument("weight not half-integral: " + vec_str(v));
        r[i] = to_int(q).get_si();
    }
    return r;
}

Vec from_ivec2(const IVec& v) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i], 2);
    return r;
}

struct Engine {
    const RootSystem& rs;
    std::vector<IVec> simple, positive;
    IVec delta, lam;
    std::vector<long long> simple_norm;
    // integer expansion matrix: coefficients of x in the simple basis are (E x)/Eden
    std::vector<IVec> E;
    long long Eden = 1;
    size_t cap;

    explicit Engine(const RootSystem& r, const Vec& hw) : rs(r) {
        for (const auto& a : r.simple) simple.push_back(to_ivec2(a));
        for (const auto& a : r.positive) positive.push_back(to_ivec2(a));
        delta = to_ivec2(r.delta);
        lam = to_ivec2(hw);
        for (const auto& a : simple) simple_norm.push_back(idot(a, a));

        Mat S = rs.simple;
        Mat Eq = mat_mul(inverse(mat_mul(S, transpose(S))), S);
        Int den = 1;
        for (const auto& row : Eq)
            for (const auto& x : row)
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
        Eden = 2 * den.get_si();  // extra 2: E is for unscaled roots, inputs are doubled
        for (const auto& row : Eq) {
            IVec r2(row.size());
            for (size_t j = 0; j < row.size(); ++j) r2[j] = to_int(Rat(den) * row[j]).get_si();
            E.push_back(r2);
        }

        const char* env = std::getenv("PINLIFT_FREUDENTHAL_CAP");
        cap = env ? (size_t)std::strtoull(env, nullptr, 10) : 1000000;
    }

    IVec reflect(const IVec& v, size_t i) const {
        long long c = 2 * idot(v, simple[i]) / simple_norm[i];
        IVec r = v;
        for (size_t j = 0; j < v.size(); ++j) r[j] -= c * simple[i][j];
        return r;
    }

    IVec dominant(IVec v) const {
        bool moved = true;
        while (moved) {
            moved = false;
            for (size_t i = 0; i < simple.size(); ++i)
                if (idot(v, simple[i]) < 0) {
                    v = reflect(v, i);
                    moved = true;
                }
        }
        return v;
    }

    // λ - ν expands in the simple basis with nonnegative integer coefficients
    bool below_lambda(const IVec& nu) const {
        for (const auto& row : E) {
            long long c = idot(row, lam) - idot(row, nu);
            if (c < 0 || c % Eden != 0) return false;
        }
        return true;
    }

    long long delta_norm(const IVec& v) const {
        IVec w = iadd(v, delta);
        return idot(w, w);
    }

    // enumerate all weights of V^λ, reachable from λ by subtracting simple roots
    std::set<IVec> enumerate_weights() const {
        std::set<IVec> seen;
        std::deque<IVec> queue{lam};
        seen.insert(lam);
        while (!queue.empty()) {
            IVec v = queue.front();
            queue.pop_front();
            for (const auto& a : simple) {
                IVec w(v.size());
                for (size_t j = 0; j < v.size(); ++j) w[j] = v[j] - a[j];
                if (seen.count(w)) continue;
                IVec d = dominant(w);
                if (!below_lambda(d)) continue;
                if (seen.size() >= cap)
                    throw std::runtime_error("weight enumeration exceeds PINLIFT_FREUDENTHAL_CAP");
                seen.insert(w);
                queue.push_back(w);
            }
        }
        return seen;
    }

    std::map<IVec, long long> run() const {
        std::set<IVec> weights = enumerate_weights();
        std::vector<IVec> dom;
        for (const auto& w : weights)
            if (w == dominant(w)) dom.push_back(w);
        std::sort(dom.begin(), dom.end(), [&](const IVec& a, const IVec& b) {
            return delta_norm(a) > delta_norm(b);
        });
        std::map<IVec, long long> mult;
        long long top = delta_norm(lam);
        for (const auto& mu : dom) {
            if (mu == lam) {
                mult[mu] = 1;
                continue;
            }
            long long rhs = 0;
            for (const auto& a : positive) {
                IVec nu = mu;
                for (long long k = 1;; ++k) {
                    nu = iadd(nu, a);
                    if (!weights.count(nu)) break;
                    rhs += mult.at(dominant(nu)) * idot(nu, a);
                }
            }
            long long gap = top - delta_norm(mu);
            if (gap <= 0 || (2 * rhs) % gap != 0)
                throw std::logic_error("Freudenthal recursion failed");
            mult[mu] = 2 * rhs / gap;
        }
        return mult;
    }

    // Weyl orbit of a dominant weight
    std::vector<IVec> orbit(const IVec& start) const {
        std::set<IVec> seen{start};
        std::deque<IVec> queue{start};
        std::vector<IVec> out;
        while (!queue.empty()) {
            IVec v = queue.front();
            queue.pop_front();
            out.push_back(v);
            for (size_t i = 0; i < simple.size(); ++i) {
                IVec w = reflect(v, i);
                if (seen.insert(w).second) queue.push_back(w);
            }
        }
        return out;
    }
};

}  // namespace

WeightTable freudenthal_multiplicities(const RootSystem& rs, const Vec& lam) {
    if (!is_integral_dominant(rs, lam))
        throw std::invalid_argument("highest weight is not integral dominant: " + vec_str(lam));
    Engine eng(rs, lam);
    auto mult = eng.run();
    WeightTable t;
    t.total_dim = 0;
    for (const auto& [mu, m] : mult) {
        t.dominant.emplace_back(from_ivec2(mu), m);
        t.total_dim += Int((unsigned long)eng.orbit(mu).size()) * m;
    }
    return t;
}

Int char_at_diagonal(const RootSystem& rs, const WeightTable& table,
                     const std::vector<int>& signs) {
    if (signs.size() != rs.ambient_dim) throw std::invalid_argument("signs dimension mismatch");
    Engine eng(rs, table.dominant.empty() ? Vec(rs.ambient_dim, 0) : table.dominant[0].first);
    Int total = 0;
    for (const auto& [mu, m] : table.dominant) {
        for (const auto& w : eng.orbit(eng.dominant(to_ivec2(mu)))) {
            int sign = 1;
            for (size_t i = 0; i < w.size(); ++i) {
                if (w[i] % 2 != 0)
                    throw std::invalid_argument("non-integral weight in diagonal character");
                if (signs[i] < 0 && (w[i] / 2) % 2 != 0) sign = -sign;
            }
            total += sign * m;
        }
    }
    return total;
}

Int char_at_diagonal(const RootSystem& rs, const Vec& lam, const std::vector<int>& signs) {
    return char_at_diagonal(rs, freudenthal_multiplicities(rs, lam), signs);
}

}  // namespace pinlift
