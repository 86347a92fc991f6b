#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rexosc/quasi_rational.hpp"

namespace rexosc {

// Linear differential operator sum_j c_j(x) (d/dx)^j with rational-function
// coefficients.  Invariant: the top coefficient is nonzero (empty list is the
// zero operator).
class DiffOperator {
public:
    DiffOperator() = default;
    explicit DiffOperator(std::vector<RationalFunction> coeffs);

    static DiffOperator identity();
    static DiffOperator derivative(long order = 1);
    // Multiplication operator by a rational function.
    static DiffOperator mul(const RationalFunction& f);

    long order() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const;
    RationalFunction coeff(long j) const;
    const std::vector<RationalFunction>& coeffs() const { return c_; }

    QuasiRational apply(const QuasiRational& f) const;

    DiffOperator operator-() const;
    friend DiffOperator operator+(const DiffOperator& a, const DiffOperator& b);
    friend DiffOperator operator-(const DiffOperator& a, const DiffOperator& b);
    friend DiffOperator operator*(const Scalar& s, const DiffOperator& d);
    friend DiffOperator operator*(const RationalFunction& f, const DiffOperator& d);

    // Operator composition: (compose(a,b))(f) = a(b(f)).
    static DiffOperator compose(const DiffOperator& a, const DiffOperator& b);
    // p(D) for a scalar polynomial p, by Horner over composition.
    static DiffOperator poly_of(const Poly& p, const DiffOperator& d);

    friend bool operator==(const DiffOperator& a, const DiffOperator& b) { return a.c_ == b.c_; }
    friend bool operator!=(const DiffOperator& a, const DiffOperator& b) { return !(a == b); }

    std::string str(const std::string& var = "x") const;
    friend std::ostream& operator<<(std::ostream& os, const DiffOperator& d);

private:
    void trim();
    std::vector<RationalFunction> c_;  // c_[j] multiplies (d/dx)^j
};

}  // namespace rexosc
