#include "welsch/linalg.hpp"

#include <utility>

namespace welsch {

Rat det(Mat m) {
    size_t n = m.size();
    Rat d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && sgn(m[p][c]) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        Rat inv = 1 / m[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (sgn(m[r][c]) == 0) continue;
            Rat f = m[r][c] * inv;
            for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return d;
}

std::vector<int> rref(Mat& m, int cols) {
    std::vector<int> piv;
    size_t row = 0;
    for (int c = 0; c < cols && row < m.size(); ++c) {
        size_t p = row;
        while (p < m.size() && sgn(m[p][c]) == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        Rat inv = 1 / m[row][c];
        for (int k = 0; k < cols; ++k) m[row][k] *= inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == row || sgn(m[r][c]) == 0) continue;
            Rat f = m[r][c];
            for (int k = 0; k < cols; ++k) m[r][k] -= f * m[row][k];
        }
        piv.push_back(c);
        ++row;
    }
    return piv;
}

int rank(Mat m) {
    if (m.empty()) return 0;
    return static_cast<int>(rref(m, static_cast<int>(m[0].size())).size());
}

Vec integer_primitive(Vec v) {
    Int den = 1, num = 0;
    for (auto& c : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    for (auto& c : v) {
        Int x = c.get_num() * (den / c.get_den());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_mpz_t());
    }
    if (num == 0) return v;
    Rat s(den, num);
    s.canonicalize();
    for (auto it = v.rbegin(); it != v.rend(); ++it)
        if (sgn(*it) != 0) {
            if (sgn(*it) < 0) s = -s;
            break;
        }
    for (auto& c : v) c *= s;
    return v;
}

std::vector<Vec> nullspace(const Mat& m0, int cols) {
    Mat m = m0;
    auto piv = rref(m, cols);
    std::vector<bool> is_piv(cols, false);
    for (int p : piv) is_piv[p] = true;
    std::vector<Vec> out;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        Vec v(cols);
        v[f] = 1;
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
        out.push_back(integer_primitive(std::move(v)));
    }
    return out;
}

Mat inverse(const Mat& a) {
    size_t n = a.size();
    Mat m(n, Vec(2 * n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && sgn(m[p][c]) == 0) ++p;
        if (p == n) return {};
        std::swap(m[p], m[c]);
        Rat inv = 1 / m[c][c];
        for (auto& x : m[c]) x *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == c || sgn(m[r][c]) == 0) continue;
            Rat f = m[r][c];
            for (size_t k = c; k < 2 * n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    Mat out(n, Vec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i][j] = m[i][n + j];
    return out;
}

}  // namespace welsch
