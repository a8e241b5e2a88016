#include "petit/gfmatrix.hpp"

namespace petit {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr) {
        std::int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    t %= p;
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

// returns pivot columns; m becomes reduced row echelon
std::vector<std::size_t> rref(GFMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t sel = row;
        while (sel < m.rows && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.a[sel * m.cols + j], m.a[row * m.cols + j]);
        std::uint32_t inv = inv_mod(m.at(row, col), m.p);
        for (std::size_t j = col; j < m.cols; ++j)
            m.at(row, j) = static_cast<std::uint32_t>(
                (static_cast<std::uint64_t>(m.at(row, j)) * inv) % m.p);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            std::uint32_t c = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j) {
                std::uint64_t sub = (static_cast<std::uint64_t>(c) * m.at(row, j)) % m.p;
                m.at(i, j) = static_cast<std::uint32_t>((m.at(i, j) + m.p - sub) % m.p);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t gf_rank(GFMatrix m) { return rref(m).size(); }

std::vector<std::vector<std::uint32_t>> gf_kernel(GFMatrix m) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<std::uint32_t> v(m.cols, 0);
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = (m.p - m.at(r, free_col) % m.p) % m.p;
        basis.push_back(std::move(v));
    }
    return basis;
}

bool gf_solve(GFMatrix m, std::vector<std::uint32_t> b, std::vector<std::uint32_t>& x) {
    // augment and reduce
    GFMatrix aug(m.p, m.rows, m.cols + 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j) % m.p;
        aug.at(i, m.cols) = b[i] % m.p;
    }
    auto pivots = rref(aug);
    x.assign(m.cols, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == m.cols) return false;  // inconsistent row
        x[pivots[r]] = aug.at(r, m.cols);
    }
    return true;
}

}  // namespace petit
