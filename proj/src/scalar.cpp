#include "rexosc/scalar.hpp"

#include <ostream>

namespace rexosc {

Scalar::Scalar(long num, long den) {
    if (den == 0) throw std::domain_error("Scalar: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Scalar::Scalar(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Scalar: zero denominator");
    v_ = mpq_class(num) / mpq_class(den);
}

Scalar Scalar::from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Scalar: cannot parse '" + s + "'");
    q.canonicalize();
    Scalar r;
    r.v_ = q;
    return r;
}

std::string Scalar::str() const { return v_.get_str(); }

Scalar Scalar::operator-() const { return Scalar(mpq_class(-v_)); }

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    v_ /= o.v_;
    return *this;
}

Scalar Scalar::reciprocal() const {
    if (is_zero()) throw std::domain_error("Scalar: reciprocal of zero");
    return Scalar(mpq_class(1) / v_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
    return Scalar(mpq_class(a.v_ / b.v_));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.v_; }

Scalar pow(const Scalar& base, long e) {
    if (e == 0) return Scalar(1);
    if (e < 0) return pow(base.reciprocal(), -e);
    Scalar acc(1), b = base;
    long n = e;
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

mpz_class factorial_z(long n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

Scalar factorial(long n) { return Scalar(factorial_z(n)); }

mpz_class binomial_z(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

}  // namespace rexosc
