#ifndef PETIT_GFMATRIX_HPP
#define PETIT_GFMATRIX_HPP

#include <cstdint>
#include <vector>

namespace petit {

/// Dense matrix over F_p, row major.
struct GFMatrix {
    std::uint32_t p = 2;
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint32_t> a;

    GFMatrix() = default;
    GFMatrix(std::uint32_t p_, std::size_t r, std::size_t c)
        : p(p_), rows(r), cols(c), a(r * c, 0) {}
    std::uint32_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

std::size_t gf_rank(GFMatrix m);
/// Basis of {x : M x = 0}, reduced echelon convention, deterministic order.
std::vector<std::vector<std::uint32_t>> gf_kernel(GFMatrix m);
/// Solve M x = b; empty optional-like flag via bool return.
bool gf_solve(GFMatrix m, std::vector<std::uint32_t> b, std::vector<std::uint32_t>& x);

}  // namespace petit

#endif
