#pragma once

#include <limits>
#include <stdexcept>
#include <vector>

#include "rexosc/ring.hpp"

namespace rexosc {

// Truncated Laurent series in z over a Q-algebra coefficient ring.
// Coefficients are stored for exponents lo .. lo+size-1; exponents between
// the stored range and tmax are zero, exponents above tmax are unknown.
// For exact Laurent polynomials use tmax = LaurentSeries::kExact.
template <QAlgebra R>
class LaurentSeries {
public:
    static constexpr long kExact = std::numeric_limits<long>::max() / 4;

    LaurentSeries() : lo_(0), tmax_(kExact) {}
    explicit LaurentSeries(const R& c, long exponent = 0, long tmax = kExact)
        : lo_(exponent), tmax_(tmax) {
        c_.push_back(c);
        normalize();
    }
    LaurentSeries(std::vector<R> coeffs, long lo, long tmax)
        : lo_(lo), tmax_(tmax), c_(std::move(coeffs)) {
        normalize();
    }

    bool is_zero() const { return c_.empty(); }
    long tmax() const { return tmax_; }
    // Lowest stored (nonzero) exponent; only meaningful when !is_zero().
    long low() const { return lo_; }
    long high() const { return lo_ + static_cast<long>(c_.size()) - 1; }

    // Coefficient of z^e; throws if e is beyond the truncation bound.
    R coefficient(long e) const {
        if (e > tmax_) throw std::logic_error("LaurentSeries: coefficient beyond truncation");
        if (e < lo_ || e > high()) return zero_like();
        return c_[static_cast<size_t>(e - lo_)];
    }

    LaurentSeries truncated(long new_tmax) const {
        LaurentSeries r = *this;
        if (new_tmax < r.tmax_) {
            r.tmax_ = new_tmax;
            if (!r.c_.empty() && r.high() > new_tmax) {
                long keep = new_tmax - r.lo_ + 1;
                if (keep <= 0)
                    r.c_.clear();
                else
                    r.c_.resize(static_cast<size_t>(keep));
            }
            r.normalize();
        }
        return r;
    }

    LaurentSeries operator-() const {
        LaurentSeries r = *this;
        for (auto& c : r.c_) c = scale(c, Scalar(-1));
        return r;
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        long tmax = std::min(a.tmax_, b.tmax_);
        if (a.is_zero()) return b.truncated(tmax);
        if (b.is_zero()) return a.truncated(tmax);
        long lo = std::min(a.lo_, b.lo_);
        long hi = std::min(std::max(a.high(), b.high()), tmax);
        if (hi < lo) return LaurentSeries(std::vector<R>{}, 0, tmax);
        std::vector<R> c(static_cast<size_t>(hi - lo + 1), a.zero_like());
        for (long e = lo; e <= hi; ++e) {
            R v = a.in_range(e) + b.in_range(e);
            c[static_cast<size_t>(e - lo)] = v;
        }
        return LaurentSeries(std::move(c), lo, tmax);
    }

    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        // Product coefficients are reliable through min(Ta + lo_b, Tb + lo_a).
        long tmax = std::min(a.tmax_, b.tmax_);
        if (a.is_zero() || b.is_zero()) return LaurentSeries(std::vector<R>{}, 0, tmax);
        if (a.tmax_ != kExact || b.tmax_ != kExact)
            tmax = std::min(sat_add(a.tmax_, b.lo_), sat_add(b.tmax_, a.lo_));
        long lo = a.lo_ + b.lo_;
        long hi = std::min(a.high() + b.high(), tmax);
        if (hi < lo) return LaurentSeries(std::vector<R>{}, 0, tmax);
        std::vector<R> c(static_cast<size_t>(hi - lo + 1), a.zero_like());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::ring_is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                long e = a.lo_ + static_cast<long>(i) + b.lo_ + static_cast<long>(j);
                if (e > hi) break;
                c[static_cast<size_t>(e - lo)] = c[static_cast<size_t>(e - lo)] + a.c_[i] * b.c_[j];
            }
        }
        return LaurentSeries(std::move(c), lo, tmax);
    }

    // Multiply by z^k.
    LaurentSeries shifted(long k) const {
        LaurentSeries r = *this;
        r.lo_ += k;
        if (r.tmax_ != kExact) r.tmax_ += k;
        return r;
    }

    // z d/dz: multiplies the coefficient of z^e by e.
    LaurentSeries z_ddz() const {
        LaurentSeries r = *this;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = scale(r.c_[i], Scalar(r.lo_ + static_cast<long>(i)));
        r.normalize();
        return r;
    }

    // Applies f to every coefficient (f must be R -> R linear for the result
    // to stay a valid series).
    template <class F>
    LaurentSeries map(F&& f) const {
        LaurentSeries r = *this;
        for (auto& c : r.c_) c = f(c);
        r.normalize();
        return r;
    }

    // Equality of all coefficients up to (and including) exponent `through`.
    friend bool agree_through(const LaurentSeries& a, const LaurentSeries& b, long through) {
        if (through > a.tmax_ || through > b.tmax_)
            throw std::logic_error("LaurentSeries: comparison beyond truncation");
        long lo = std::min(a.is_zero() ? through : a.lo_, b.is_zero() ? through : b.lo_);
        for (long e = lo; e <= through; ++e) {
            if (!detail::ring_is_zero(a.in_range(e) - b.in_range(e))) return false;
        }
        return true;
    }

private:
    static long sat_add(long a, long b) {
        if (a >= kExact || b >= kExact) return kExact;
        return a + b;
    }

    R zero_like() const { return c_.empty() ? scale(R{}, Scalar(0)) : scale(c_.front(), Scalar(0)); }

    R in_range(long e) const {
        if (c_.empty() || e < lo_ || e > high()) return zero_like();
        return c_[static_cast<size_t>(e - lo_)];
    }

    void normalize() {
        while (!c_.empty() && detail::ring_is_zero(c_.front())) {
            c_.erase(c_.begin());
            ++lo_;
        }
        while (!c_.empty() && detail::ring_is_zero(c_.back())) c_.pop_back();
        if (c_.empty()) lo_ = 0;
        if (!c_.empty() && high() > tmax_) throw std::logic_error("LaurentSeries: stored range exceeds tmax");
    }

    long lo_;
    long tmax_;
    std::vector<R> c_;
};

template <QAlgebra R>
LaurentSeries<R> scale(const LaurentSeries<R>& s, const Scalar& f) {
    return s.map([&](const R& c) { return scale(c, f); });
}

template <QAlgebra R>
bool is_zero(const LaurentSeries<R>& s) {
    return s.is_zero();
}

}  // namespace rexosc
