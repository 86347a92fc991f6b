#pragma once

#include <complex>
#include <iosfwd>
#include <string>

#include "rexosc/poly.hpp"

namespace rexosc {

// Quotient of polynomials kept in canonical form: gcd(num, den) = 1 and den
// monic, so equality is a plain component compare.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Scalar(1)) {}
    RationalFunction(const Scalar& c) : num_(c), den_(Scalar(1)) {}
    RationalFunction(const Poly& p) : num_(p), den_(Scalar(1)) {}
    RationalFunction(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    // Requires is_constant().
    Scalar constant_value() const;
    // Requires is_polynomial().
    Poly as_polynomial() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const Scalar& s, const RationalFunction& f);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction derivative() const;

    Scalar eval(const Scalar& x) const;
    double eval_d(double x) const;
    std::complex<double> eval_c(const std::complex<double>& x) const;

    std::string str(const std::string& var = "x") const;
    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

private:
    void reduce();
    Poly num_, den_;
};

inline RationalFunction scale(const RationalFunction& f, const Scalar& s) { return s * f; }
inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

}  // namespace rexosc
