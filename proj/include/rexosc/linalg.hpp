#pragma once

#include <vector>

#include "rexosc/diff_operator.hpp"
#include "rexosc/poly.hpp"
#include "rexosc/quasi_rational.hpp"
#include "rexosc/ring.hpp"

namespace rexosc {

// Determinant of a square polynomial matrix.  Cofactor expansion below 5x5,
// fraction-free Bareiss elimination (exact divisions) from 5x5 up.
Poly det_poly(std::vector<std::vector<Poly>> m);

// Division-free determinant over any commutative Q-algebra, by dynamic
// programming over column subsets (Laplace expansion).  Fine up to ~12x12.
template <QAlgebra R>
R det_ring(const std::vector<std::vector<R>>& m, const R& one) {
    size_t n = m.size();
    R zero = scale(one, Scalar(0));
    if (n == 0) return one;
    if (n > 14) throw std::domain_error("det_ring: matrix too large");
    for (const auto& row : m)
        if (row.size() != n) throw std::logic_error("det_ring: matrix not square");
    // f[mask] = signed minor of the first popcount(mask) rows on columns in mask.
    std::vector<R> f(static_cast<size_t>(1) << n, zero);
    f[0] = one;
    for (size_t row = 0; row < n; ++row) {
        std::vector<R> g(f.size(), zero);
        for (size_t mask = 0; mask < f.size(); ++mask) {
            if (static_cast<size_t>(__builtin_popcountll(mask)) != row) continue;
            if (is_zero(f[mask])) continue;
            int parity = 0;
            for (size_t col = 0; col < n; ++col) {
                if (mask & (1ull << col)) {
                    ++parity;
                    continue;
                }
                if (!is_zero(m[row][col])) {
                    R term = f[mask] * m[row][col];
                    if ((row + parity) & 1) term = scale(term, Scalar(-1));
                    size_t next = mask | (1ull << col);
                    g[next] = g[next] + term;
                }
            }
        }
        f = std::move(g);
    }
    return f[f.size() - 1];
}

// Wronskian determinant of quasi-rational functions, in the given order.
// Gaussian weights factor out per function; the empty list gives 1.
QuasiRational wronskian(const std::vector<QuasiRational>& fs);

// Monic differential operator of order fs.size() whose kernel is spanned by
// fs: y -> Wr[fs..., y] / Wr[fs...].  Coefficients are read off as the
// cofactors of the y-column of the Wronskian matrix, computed by one
// fraction-free elimination; the top cofactor is Wr[fs...] itself, so the
// normalized operator is independent of the enumeration order of fs.
DiffOperator kernel_operator(const std::vector<QuasiRational>& fs);

}  // namespace rexosc
