#include "rexosc/linalg.hpp"

#include <algorithm>

namespace rexosc {

namespace {

Poly det_cofactor(const std::vector<std::vector<Poly>>& m, std::vector<size_t>& cols, size_t row) {
    size_t n = m.size();
    if (row == n) return Poly(Scalar(1));
    Poly acc;
    for (size_t k = 0; k < cols.size(); ++k) {
        size_t col = cols[k];
        if (m[row][col].is_zero()) continue;
        std::vector<size_t> rest;
        rest.reserve(cols.size() - 1);
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        Poly sub = det_cofactor(m, rest, row + 1);
        Poly term = m[row][col] * sub;
        if (k & 1) term = -term;
        acc += term;
    }
    return acc;
}

// Fraction-free forward elimination with row pivoting.  Returns the sign of
// the row permutation, or 0 if the leading n x n block is singular.  On
// success m[k][k] is the k-th leading principal minor (up to the sign) and
// the rows below the diagonal are zero in the first `ncols_eliminate` columns.
int bareiss_eliminate(std::vector<std::vector<Poly>>& m, size_t ncols_eliminate) {
    size_t nrows = m.size();
    int sign = 1;
    Poly prev{Scalar(1)};
    for (size_t k = 0; k + 1 < nrows && k < ncols_eliminate; ++k) {
        if (m[k][k].is_zero()) {
            size_t s = k + 1;
            while (s < nrows && m[s][k].is_zero()) ++s;
            if (s == nrows) return 0;
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < nrows; ++i) {
            for (size_t j = k + 1; j < m[i].size(); ++j) {
                Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = Poly::exact_div(num, prev);
            }
            m[i][k] = Poly();
        }
        prev = m[k][k];
    }
    if (nrows > 0 && nrows <= ncols_eliminate && m[nrows - 1][nrows - 1].is_zero()) return 0;
    return sign;
}

}  // namespace

Poly det_poly(std::vector<std::vector<Poly>> m) {
    size_t n = m.size();
    if (n == 0) return Poly(Scalar(1));
    for (const auto& row : m)
        if (row.size() != n) throw std::logic_error("det_poly: matrix not square");
    if (n < 5) {
        std::vector<size_t> cols(n);
        for (size_t i = 0; i < n; ++i) cols[i] = i;
        return det_cofactor(m, cols, 0);
    }
    int sign = bareiss_eliminate(m, n);
    if (sign == 0) return Poly();
    Poly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

namespace {

// Derivative table: rows are derivative orders 0..max_order, columns are the
// rational parts of the derivatives of each function (Gaussian weights are
// handled by the caller).
std::vector<std::vector<RationalFunction>> derivative_table(const std::vector<QuasiRational>& fs,
                                                            size_t max_order) {
    std::vector<std::vector<RationalFunction>> rows(max_order + 1,
                                                    std::vector<RationalFunction>(fs.size()));
    for (size_t i = 0; i < fs.size(); ++i) {
        QuasiRational d = fs[i];
        rows[0][i] = d.rat();
        for (size_t j = 1; j <= max_order; ++j) {
            d = d.derivative();
            rows[j][i] = d.rat();
        }
    }
    return rows;
}

// Clears a row of rational functions to primitive integer-coefficient
// polynomials; only an overall constant per row is dropped.
std::vector<Poly> clear_row(const std::vector<RationalFunction>& row, Poly* factor = nullptr) {
    Poly l{Scalar(1)};
    for (const auto& r : row)
        if (!r.is_zero()) l = lcm(l, r.den());
    std::vector<Poly> out(row.size());
    for (size_t i = 0; i < row.size(); ++i) {
        if (row[i].is_zero()) continue;
        out[i] = row[i].num() * Poly::exact_div(l, row[i].den());
    }
    if (factor) *factor = l;
    // Strip the common rational content to keep coefficients integral.
    mpz_class den = 1, num = 0;
    for (const auto& p : out)
        for (const auto& c : p.coeffs()) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
        }
    for (const auto& p : out)
        for (const auto& c : p.coeffs()) {
            mpz_class z = c.numerator() * (den / c.denominator());
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), z.get_mpz_t());
        }
    if (num != 0) {
        Scalar s = Scalar(den, num);
        if (factor) *factor = s * (*factor);
        for (auto& p : out) p = s * p;
    }
    return out;
}

}  // namespace

QuasiRational wronskian(const std::vector<QuasiRational>& fs) {
    if (fs.empty()) return QuasiRational(RationalFunction(Scalar(1)), 0);
    size_t n = fs.size();
    long gauss = 0;
    for (const auto& f : fs) {
        if (f.is_zero()) return QuasiRational();
        gauss += f.gauss();
    }
    auto rows = derivative_table(fs, n - 1);
    std::vector<std::vector<Poly>> m(n);
    Poly scale_factor{Scalar(1)};
    for (size_t j = 0; j < n; ++j) {
        Poly row_factor;
        m[j] = clear_row(rows[j], &row_factor);
        scale_factor = scale_factor * row_factor;
    }
    Poly det = det_poly(std::move(m));
    return QuasiRational(RationalFunction(det, scale_factor), gauss);
}

DiffOperator kernel_operator(const std::vector<QuasiRational>& fs) {
    size_t p = fs.size();
    if (p == 0) return DiffOperator::identity();
    for (const auto& f : fs)
        if (f.is_zero()) throw std::logic_error("kernel_operator: zero function in kernel basis");
    auto table = derivative_table(fs, p);
    // Rows are functions, columns are derivative orders 0..p; Gaussian row
    // factors drop out of the homogeneous system.
    std::vector<std::vector<Poly>> m(p);
    for (size_t i = 0; i < p; ++i) {
        std::vector<RationalFunction> row(p + 1);
        for (size_t j = 0; j <= p; ++j) row[j] = table[j][i];
        m[i] = clear_row(row);
    }
    if (bareiss_eliminate(m, p) == 0)
        throw std::logic_error("kernel_operator: functions are linearly dependent");
    // Null vector (y_0..y_{p-1}, det) by fraction-free back substitution:
    // column p holds the right-hand side -det * x_p with x_p = 1.
    Poly det = m[p - 1][p - 1];
    std::vector<Poly> y(p + 1);
    y[p] = det;
    for (size_t k = p; k-- > 0;) {
        Poly acc = det * (-m[k][p]);
        for (size_t j = k + 1; j < p; ++j) acc -= m[k][j] * y[j];
        y[k] = Poly::exact_div(acc, m[k][k]);
    }
    std::vector<RationalFunction> coeffs(p + 1);
    for (size_t j = 0; j <= p; ++j) coeffs[j] = RationalFunction(y[j], det);
    DiffOperator op{std::move(coeffs)};
    if (!op.is_monic()) throw std::logic_error("kernel_operator: normalization failed");
    return op;
}

}  // namespace rexosc
