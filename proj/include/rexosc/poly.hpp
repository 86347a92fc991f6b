#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rexosc/scalar.hpp"

namespace rexosc {

// Dense univariate polynomial over exact rationals.  Invariant: the
// coefficient vector carries no trailing zeros, so the zero polynomial is the
// empty vector and degree() reports -1 for it.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Scalar& c);
    explicit Poly(std::vector<Scalar> coeffs);

    static Poly x();
    static Poly monomial(long deg, const Scalar& c);
    // Builds (x - r1)(x - r2)... from the given roots.
    static Poly from_roots(const std::vector<Scalar>& roots);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Scalar coeff(long i) const;
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar lead() const;
    Scalar constant_term() const { return coeff(0); }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Scalar& s, const Poly& p);
    friend Poly operator*(const Poly& p, const Scalar& s) { return s * p; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const;
    Poly pow(long e) const;
    Poly monic() const;

    // Euclidean division; divisor must be nonzero.
    static std::pair<Poly, Poly> divrem(const Poly& num, const Poly& den);
    // Division known to be exact; throws std::logic_error on a nonzero remainder.
    static Poly exact_div(const Poly& num, const Poly& den);

    Scalar eval(const Scalar& x) const;
    double eval_d(double x) const;
    std::complex<double> eval_c(const std::complex<double>& x) const;

    std::string str(const std::string& var = "x") const;
    friend std::ostream& operator<<(std::ostream& os, const Poly& p);

private:
    void trim();
    std::vector<Scalar> c_;
};

// Monic gcd via the subresultant polynomial remainder sequence (keeps
// intermediate integer coefficients from swelling).
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);

inline Poly scale(const Poly& p, const Scalar& s) { return s * p; }
inline bool is_zero(const Poly& p) { return p.is_zero(); }

}  // namespace rexosc
