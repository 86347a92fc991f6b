#include "rexosc/quasi_rational.hpp"

#include <ostream>

namespace rexosc {

QuasiRational::QuasiRational(RationalFunction rat, long gauss) : rat_(std::move(rat)), gauss_(gauss) {
    if (rat_.is_zero()) gauss_ = 0;
}

QuasiRational QuasiRational::operator-() const { return QuasiRational(-rat_, gauss_); }

QuasiRational operator+(const QuasiRational& a, const QuasiRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.gauss_ != b.gauss_)
        throw std::logic_error("QuasiRational: sum of distinct Gaussian weights is not quasi-rational");
    return QuasiRational(a.rat_ + b.rat_, a.gauss_);
}

QuasiRational operator-(const QuasiRational& a, const QuasiRational& b) { return a + (-b); }

QuasiRational operator*(const QuasiRational& a, const QuasiRational& b) {
    return QuasiRational(a.rat_ * b.rat_, a.gauss_ + b.gauss_);
}

QuasiRational operator*(const Scalar& s, const QuasiRational& f) {
    return QuasiRational(s * f.rat_, f.gauss_);
}

QuasiRational operator*(const RationalFunction& r, const QuasiRational& f) {
    return QuasiRational(r * f.rat_, f.gauss_);
}

QuasiRational QuasiRational::derivative() const {
    if (is_zero()) return *this;
    RationalFunction gx(Scalar(gauss_) * Poly::x());
    return QuasiRational(rat_.derivative() + gx * rat_, gauss_);
}

Scalar QuasiRational::constant_ratio(const QuasiRational& a, const QuasiRational& b) {
    if (b.is_zero()) throw std::logic_error("QuasiRational: ratio against zero");
    if (a.is_zero()) return Scalar(0);
    if (a.gauss_ != b.gauss_) throw std::logic_error("QuasiRational: ratio across Gaussian weights");
    RationalFunction q = a.rat_ / b.rat_;
    if (!q.is_constant()) throw std::logic_error("QuasiRational: ratio is not constant");
    return q.constant_value();
}

std::string QuasiRational::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s = "(" + rat_.str(var) + ")";
    if (gauss_ != 0) {
        s += " * exp(";
        if (gauss_ == 1) {
            // nothing
        } else if (gauss_ == -1) {
            s += "-";
        } else {
            s += std::to_string(gauss_) + "*";
        }
        s += var + "^2/2)";
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const QuasiRational& f) { return os << f.str(); }

}  // namespace rexosc
