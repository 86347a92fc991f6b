#include "rexosc/multi_poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace rexosc {

bool MultiPoly::MonomialOrder::operator()(const Exponents& a, const Exponents& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly::MultiPoly(const Scalar& c) {
    if (!c.is_zero()) terms_[{}] = c;
}

MultiPoly MultiPoly::var(int j) {
    if (j < 1) throw std::domain_error("MultiPoly::var: variables are 1-based");
    MultiPoly p;
    Exponents e(static_cast<size_t>(j), 0);
    e.back() = 1;
    p.terms_[e] = Scalar(1);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Scalar MultiPoly::constant_value() const {
    if (terms_.empty()) return Scalar(0);
    if (!is_constant()) throw std::logic_error("MultiPoly: not a constant");
    return terms_.begin()->second;
}

long MultiPoly::total_degree() const {
    long d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0L));
    return d;
}

int MultiPoly::nvars() const {
    size_t n = 0;
    for (const auto& [e, c] : terms_) n = std::max(n, e.size());
    return static_cast<int>(n);
}

void MultiPoly::trim(Exponents& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

void MultiPoly::add_term(const Exponents& e, const Scalar& c) {
    if (c.is_zero()) return;
    Exponents key = e;
    trim(key);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            MultiPoly::Exponents e(std::max(ea.size(), eb.size()), 0);
            for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly operator*(const Scalar& s, const MultiPoly& p) {
    if (s.is_zero()) return MultiPoly();
    MultiPoly r = p;
    for (auto& [e, c] : r.terms_) c *= s;
    return r;
}

MultiPoly MultiPoly::derivative(int j) const {
    if (j < 1) throw std::domain_error("MultiPoly::derivative: variables are 1-based");
    MultiPoly r;
    size_t v = static_cast<size_t>(j - 1);
    for (const auto& [e, c] : terms_) {
        if (v >= e.size() || e[v] == 0) continue;
        Exponents d = e;
        d[v] -= 1;
        r.add_term(d, Scalar(e[v]) * c);
    }
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Display highest-order terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Scalar a = c.sign() < 0 ? -c : c;
        bool printed = false;
        if (!a.is_one() || e.empty()) {
            os << a.str();
            printed = true;
        }
        for (size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (printed) os << "*";
            os << "t" << (v + 1);
            if (e[v] > 1) os << "^" << e[v];
            printed = true;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

}  // namespace rexosc
