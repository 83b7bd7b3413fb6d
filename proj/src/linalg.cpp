#include "pinlift/linalg.hpp"

#include <algorithm>

namespace pinlift {

Mat identity_mat(size_t n) {
    Mat m(n, Vec(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat transpose(const Mat& m) {
    if (m.empty()) return {};
    Mat t(m[0].size(), Vec(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

Vec mat_apply(const Mat& m, const Vec& v) {
    Vec r(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    Mat r(n, Vec(p, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (size_t c = 0; c < p; ++c) r[i][c] += a[i][j] * b[j][c];
        }
    return r;
}

bool mat_equal(const Mat& a, const Mat& b) { return a == b; }

size_t rref(Mat& m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size(), lead = 0, rank = 0;
    for (size_t r = 0; r < rows && lead < cols; ++r) {
        size_t i = r;
        while (i < rows && m[i][lead] == 0) ++i;
        if (i == rows) {
            ++lead;
            --r;
            continue;
        }
        std::swap(m[i], m[r]);
        Rat inv = 1 / m[r][lead];
        for (size_t c = 0; c < cols; ++c) m[r][c] *= inv;
        for (size_t j = 0; j < rows; ++j) {
            if (j == r || m[j][lead] == 0) continue;
            Rat f = m[j][lead];
            for (size_t c = 0; c < cols; ++c) m[j][c] -= f * m[r][c];
        }
        ++lead;
        ++rank;
    }
    m.resize(rank);
    return rank;
}

Vec solve(const Mat& a, const Vec& b) {
    size_t n = a.size();
    Mat aug(n, Vec(n + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n] = b[i];
    }
    if (rref(aug) != n) throw std::logic_error("singular system");
    Vec x(n);
    for (size_t i = 0; i < n; ++i) x[i] = aug[i][n];
    return x;
}

Mat inverse(const Mat& a) {
    size_t n = a.size();
    Mat aug(n, Vec(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    if (rref(aug) != n) throw std::logic_error("singular matrix");
    Mat inv(n, Vec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

namespace {
Vec primitive(Vec v) {
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& x : v) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
    }
    if (num_gcd == 0) return v;
    Rat f(den_lcm, num_gcd);
    f.canonicalize();
    Vec r = f * v;
    if (lex_positive(negate(r))) r = negate(r);
    return r;
}
}  // namespace

Mat row_space_basis(const Mat& rows) {
    Mat m = rows;
    rref(m);
    for (auto& r : m) r = primitive(r);
    return m;
}

Mat null_space(const Mat& a) {
    if (a.empty()) return {};
    Mat m = a;
    size_t cols = a[0].size();
    size_t rank = rref(m);
    std::vector<size_t> pivot_col(rank);
    std::vector<bool> is_pivot(cols, false);
    for (size_t r = 0; r < rank; ++r) {
        size_t c = 0;
        while (c < cols && m[r][c] == 0) ++c;
        pivot_col[r] = c;
        is_pivot[c] = true;
    }
    Mat basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols, 0);
        v[free] = 1;
        for (size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][free];
        basis.push_back(primitive(v));
    }
    return basis;
}

Mat orthogonalize(const Mat& rows) {
    Mat out;
    for (const auto& row : rows) {
        Vec v = row;
        for (const auto& u : out) {
            Rat c = dot(v, u) / dot(u, u);
            v = v - c * u;
        }
        if (is_zero(v)) throw std::logic_error("orthogonalize: dependent rows");
        out.push_back(primitive(v));
    }
    return out;
}

}  // namespace pinlift
