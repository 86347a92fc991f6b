#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace rexosc {

// Exact rational scalar: a thin value wrapper around GMP's mpq_class that
// keeps every value canonical (reduced fraction, positive denominator).
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(long n) : v_(n) {}
    Scalar(int n) : v_(n) {}
    Scalar(long num, long den);
    explicit Scalar(const mpz_class& n) : v_(n) {}
    Scalar(const mpz_class& num, const mpz_class& den);

    // Parses "p" or "p/q".
    static Scalar from_string(const std::string& s);

    const mpq_class& raw() const { return v_; }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    double to_double() const { return v_.get_d(); }
    std::string str() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
    Scalar& operator/=(const Scalar& o);

    Scalar reciprocal() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(a.v_ + b.v_); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar(a.v_ - b.v_); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) { return Scalar(a.v_ * b.v_); }
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    explicit Scalar(const mpq_class& q) : v_(q) {}
    mpq_class v_;
};

Scalar pow(const Scalar& base, long e);
mpz_class factorial_z(long n);
Scalar factorial(long n);
mpz_class binomial_z(long n, long k);

// Hooks for the generic commutative-ring interface.
inline Scalar scale(const Scalar& a, const Scalar& s) { return a * s; }
inline bool is_zero(const Scalar& a) { return a.is_zero(); }

}  // namespace rexosc
