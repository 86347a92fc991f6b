#pragma once

#include <iosfwd>
#include <string>

#include "rexosc/rational_function.hpp"

namespace rexosc {

// A function r(x) * exp(g*x^2/2) with r rational and g an integer.  Closed
// under differentiation and multiplication; addition requires matching
// Gaussian weights (adding across weights leaves the class).
class QuasiRational {
public:
    QuasiRational() : rat_(), gauss_(0) {}
    explicit QuasiRational(RationalFunction rat, long gauss = 0);

    const RationalFunction& rat() const { return rat_; }
    long gauss() const { return gauss_; }
    bool is_zero() const { return rat_.is_zero(); }

    QuasiRational operator-() const;
    friend QuasiRational operator+(const QuasiRational& a, const QuasiRational& b);
    friend QuasiRational operator-(const QuasiRational& a, const QuasiRational& b);
    friend QuasiRational operator*(const QuasiRational& a, const QuasiRational& b);
    friend QuasiRational operator*(const Scalar& s, const QuasiRational& f);
    friend QuasiRational operator*(const RationalFunction& r, const QuasiRational& f);

    friend bool operator==(const QuasiRational& a, const QuasiRational& b) {
        return a.gauss_ == b.gauss_ && a.rat_ == b.rat_;
    }
    friend bool operator!=(const QuasiRational& a, const QuasiRational& b) { return !(a == b); }

    // (r e^{g x^2/2})' = (r' + g x r) e^{g x^2/2}
    QuasiRational derivative() const;

    // Exact ratio a/b when it is a constant; throws std::logic_error otherwise.
    static Scalar constant_ratio(const QuasiRational& a, const QuasiRational& b);

    std::string str(const std::string& var = "x") const;
    friend std::ostream& operator<<(std::ostream& os, const QuasiRational& f);

private:
    RationalFunction rat_;
    long gauss_;  // zero whenever rat_ is zero
};

inline QuasiRational scale(const QuasiRational& f, const Scalar& s) { return s * f; }
inline bool is_zero(const QuasiRational& f) { return f.is_zero(); }

}  // namespace rexosc
