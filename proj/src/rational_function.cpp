#include "rexosc/rational_function.hpp"

#include <ostream>

namespace rexosc {

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(Scalar(1));
        return;
    }
    if (den_.degree() > 0) {
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Poly::exact_div(num_, g);
            den_ = Poly::exact_div(den_, g);
        }
    }
    Scalar lead = den_.lead();
    if (!lead.is_one()) {
        Scalar inv = lead.reciprocal();
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

Scalar RationalFunction::constant_value() const {
    if (!is_constant()) throw std::logic_error("RationalFunction: not a constant");
    if (num_.is_zero()) return Scalar(0);
    return num_.coeff(0) / den_.coeff(0);
}

Poly RationalFunction::as_polynomial() const {
    if (!is_polynomial()) throw std::logic_error("RationalFunction: not a polynomial");
    return den_.coeff(0).reciprocal() * num_;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction operator*(const Scalar& s, const RationalFunction& f) {
    RationalFunction r = f;
    r.num_ = s * r.num_;
    if (s.is_zero()) r.den_ = Poly(Scalar(1));
    return r;
}

RationalFunction RationalFunction::derivative() const {
    if (is_polynomial()) return RationalFunction(as_polynomial().derivative());
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Scalar RationalFunction::eval(const Scalar& x) const {
    Scalar d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("RationalFunction: pole at evaluation point");
    return num_.eval(x) / d;
}

double RationalFunction::eval_d(double x) const { return num_.eval_d(x) / den_.eval_d(x); }

std::complex<double> RationalFunction::eval_c(const std::complex<double>& x) const {
    return num_.eval_c(x) / den_.eval_c(x);
}

std::string RationalFunction::str(const std::string& var) const {
    if (is_polynomial()) return as_polynomial().str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.str(); }

}  // namespace rexosc
