#include "rexosc/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace rexosc {

Poly::Poly(const Scalar& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::x() { return monomial(1, Scalar(1)); }

Poly Poly::monomial(long deg, const Scalar& c) {
    Poly p;
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<size_t>(deg) + 1, Scalar(0));
    p.c_.back() = c;
    return p;
}

Poly Poly::from_roots(const std::vector<Scalar>& roots) {
    Poly p{Scalar(1)};
    for (const auto& r : roots) p = p * (Poly::x() - Poly(r));
    return p;
}

Scalar Poly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return Scalar(0);
    return c_[static_cast<size_t>(i)];
}

Scalar Poly::lead() const { return c_.empty() ? Scalar(0) : c_.back(); }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    r += b;
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    r -= b;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

Poly operator*(const Scalar& s, const Poly& p) {
    if (s.is_zero()) return Poly();
    Poly r = p;
    for (auto& c : r.c_) c *= s;
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    Poly r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = Scalar(static_cast<long>(i)) * c_[i];
    r.trim();
    return r;
}

Poly Poly::pow(long e) const {
    if (e < 0) throw std::domain_error("Poly::pow: negative exponent");
    Poly acc{Scalar(1)};
    Poly b = *this;
    long n = e;
    while (n > 0) {
        if (n & 1) acc = acc * b;
        b = b * b;
        n >>= 1;
    }
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return lead().reciprocal() * (*this);
}

std::pair<Poly, Poly> Poly::divrem(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("Poly::divrem: division by zero polynomial");
    Poly q, r = num;
    if (num.degree() < den.degree()) return {q, r};
    q.c_.assign(static_cast<size_t>(num.degree() - den.degree()) + 1, Scalar(0));
    Scalar inv_lead = den.lead().reciprocal();
    while (!r.is_zero() && r.degree() >= den.degree()) {
        long k = r.degree() - den.degree();
        Scalar f = r.lead() * inv_lead;
        q.c_[static_cast<size_t>(k)] = f;
        // r -= f * x^k * den
        for (long i = 0; i <= den.degree(); ++i) {
            r.c_[static_cast<size_t>(i + k)] -= f * den.c_[static_cast<size_t>(i)];
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly Poly::exact_div(const Poly& num, const Poly& den) {
    auto [q, r] = divrem(num, den);
    if (!r.is_zero()) throw std::logic_error("Poly::exact_div: nonzero remainder");
    return q;
}

Scalar Poly::eval(const Scalar& x) const {
    Scalar acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

double Poly::eval_d(double x) const {
    double acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].to_double();
    return acc;
}

std::complex<double> Poly::eval_c(const std::complex<double>& x) const {
    std::complex<double> acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].to_double();
    return acc;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        Scalar c = coeff(i);
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Scalar a = c.sign() < 0 ? -c : c;
        bool unit = a.is_one();
        if (i == 0) {
            os << a.str();
        } else {
            if (!unit) os << a.str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

namespace {

// Integer-polynomial helpers for the subresultant PRS.
using ZPoly = std::vector<mpz_class>;  // dense, no trailing zeros

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long zdeg(const ZPoly& p) { return static_cast<long>(p.size()) - 1; }

ZPoly zscale(const ZPoly& p, const mpz_class& s) {
    ZPoly r = p;
    for (auto& c : r) c *= s;
    return r;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, all in Z[x].
ZPoly zprem(ZPoly a, const ZPoly& b) {
    long db = zdeg(b);
    const mpz_class& lb = b.back();
    while (zdeg(a) >= db) {
        mpz_class f = a.back();
        long k = zdeg(a) - db;
        a = zscale(a, lb);
        for (long i = 0; i <= db; ++i) a[static_cast<size_t>(i + k)] -= f * b[static_cast<size_t>(i)];
        ztrim(a);
    }
    return a;
}

ZPoly zdiv_exact(const ZPoly& p, const mpz_class& d) {
    ZPoly r = p;
    for (auto& c : r) {
        mpz_class q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        c = q;
    }
    return r;
}

mpz_class zcontent(const ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

// Clears denominators and the content; only the gcd up to scaling matters.
ZPoly to_primitive_z(const Poly& p) {
    mpz_class den = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
    ZPoly z(p.coeffs().size());
    for (size_t i = 0; i < z.size(); ++i) {
        const Scalar& c = p.coeffs()[i];
        z[i] = c.numerator() * (den / c.denominator());
    }
    mpz_class g = zcontent(z);
    if (g != 0 && g != 1) z = zdiv_exact(z, g);
    return z;
}

Poly from_z(const ZPoly& z) {
    std::vector<Scalar> c(z.size());
    for (size_t i = 0; i < z.size(); ++i) c[i] = Scalar(z[i]);
    return Poly(std::move(c));
}

mpz_class zpow(const mpz_class& b, long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    ZPoly A = to_primitive_z(a);
    ZPoly B = to_primitive_z(b);
    if (zdeg(A) < zdeg(B)) std::swap(A, B);
    mpz_class g = 1, h = 1;
    while (true) {
        long delta = zdeg(A) - zdeg(B);
        ZPoly R = zprem(A, B);
        if (R.empty()) {
            mpz_class c = zcontent(B);
            if (c != 0 && c != 1) B = zdiv_exact(B, c);
            return from_z(B).monic();
        }
        if (zdeg(R) == 0) return Poly(Scalar(1));
        A = std::move(B);
        B = zdiv_exact(R, g * zpow(h, delta));
        g = A.back();
        // h = g^delta * h^(1-delta)
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            mpz_class num = zpow(g, delta);
            mpz_class den = zpow(h, delta - 1);
            h = num / den;
        }
    }
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    return Poly::exact_div(a * b, gcd(a, b)).monic();
}

}  // namespace rexosc
