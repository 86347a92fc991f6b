#include "rexosc/diff_operator.hpp"

#include <ostream>
#include <sstream>

namespace rexosc {

DiffOperator::DiffOperator(std::vector<RationalFunction> coeffs) : c_(std::move(coeffs)) { trim(); }

void DiffOperator::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

DiffOperator DiffOperator::identity() { return DiffOperator({RationalFunction(Scalar(1))}); }

DiffOperator DiffOperator::derivative(long order) {
    std::vector<RationalFunction> c(static_cast<size_t>(order) + 1);
    c.back() = RationalFunction(Scalar(1));
    return DiffOperator(std::move(c));
}

DiffOperator DiffOperator::mul(const RationalFunction& f) { return DiffOperator({f}); }

bool DiffOperator::is_monic() const {
    return !c_.empty() && c_.back() == RationalFunction(Scalar(1));
}

RationalFunction DiffOperator::coeff(long j) const {
    if (j < 0 || j >= static_cast<long>(c_.size())) return RationalFunction();
    return c_[static_cast<size_t>(j)];
}

QuasiRational DiffOperator::apply(const QuasiRational& f) const {
    QuasiRational acc;
    QuasiRational der = f;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (j > 0) der = der.derivative();
        if (!c_[j].is_zero()) acc = acc + c_[j] * der;
    }
    return acc;
}

DiffOperator DiffOperator::operator-() const {
    DiffOperator r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

DiffOperator operator+(const DiffOperator& a, const DiffOperator& b) {
    std::vector<RationalFunction> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t j = 0; j < c.size(); ++j) c[j] = a.coeff(static_cast<long>(j)) + b.coeff(static_cast<long>(j));
    return DiffOperator(std::move(c));
}

DiffOperator operator-(const DiffOperator& a, const DiffOperator& b) { return a + (-b); }

DiffOperator operator*(const Scalar& s, const DiffOperator& d) {
    DiffOperator r = d;
    for (auto& c : r.c_) c = s * c;
    r.trim();
    return r;
}

DiffOperator operator*(const RationalFunction& f, const DiffOperator& d) {
    DiffOperator r = d;
    for (auto& c : r.c_) c = f * c;
    r.trim();
    return r;
}

DiffOperator DiffOperator::compose(const DiffOperator& a, const DiffOperator& b) {
    if (a.is_zero() || b.is_zero()) return DiffOperator();
    // cur = d^j o b, accumulated with a's coefficients.
    DiffOperator cur = b;
    DiffOperator acc = a.coeff(0) * b;
    for (long j = 1; j <= a.order(); ++j) {
        // d o cur: each term c(x) d^k becomes c'(x) d^k + c(x) d^{k+1}.
        std::vector<RationalFunction> next(cur.c_.size() + 1);
        for (size_t k = 0; k < cur.c_.size(); ++k) {
            next[k] += cur.c_[k].derivative();
            next[k + 1] += cur.c_[k];
        }
        cur = DiffOperator(std::move(next));
        acc = acc + a.coeff(j) * cur;
    }
    return acc;
}

DiffOperator DiffOperator::poly_of(const Poly& p, const DiffOperator& d) {
    DiffOperator acc;
    for (long k = p.degree(); k >= 0; --k) {
        acc = compose(acc, d);
        if (!p.coeff(k).is_zero()) acc = acc + p.coeff(k) * identity();
    }
    return acc;
}

std::string DiffOperator::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long j = order(); j >= 0; --j) {
        RationalFunction c = coeff(j);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c.str(var) << ")";
        if (j >= 1) {
            os << "*D";
            if (j > 1) os << "^" << j;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const DiffOperator& d) { return os << d.str(); }

}  // namespace rexosc
