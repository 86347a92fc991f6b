#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "rexosc/ring.hpp"
#include "rexosc/scalar.hpp"

namespace rexosc {

// Sparse multivariate polynomial over Scalar in variables t1, t2, ...
// Monomials are exponent vectors without trailing zeros, ordered by total
// degree then lexicographically; no zero coefficients are stored.
class MultiPoly {
public:
    using Exponents = std::vector<int>;

    struct MonomialOrder {
        bool operator()(const Exponents& a, const Exponents& b) const;
    };
    using TermMap = std::map<Exponents, Scalar, MonomialOrder>;

    MultiPoly() = default;
    explicit MultiPoly(const Scalar& c);

    // The variable t_j (1-based).
    static MultiPoly var(int j);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_value() const;
    const TermMap& terms() const { return terms_; }
    long total_degree() const;
    // Largest variable index appearing (0 for constants).
    int nvars() const;

    void add_term(const Exponents& e, const Scalar& c);

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Scalar& s, const MultiPoly& p);
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // d/dt_j (1-based).
    MultiPoly derivative(int j) const;

    // Evaluates with t_j = values[j-1] in any Q-algebra; `one` seeds the
    // multiplicative identity of R.  Variables beyond values.size() must not
    // occur.
    template <QAlgebra R>
    R eval(const std::vector<R>& values, const R& one) const {
        // Per-variable power tables, grown on demand.
        std::vector<std::vector<R>> powers(values.size());
        R acc = scale(one, Scalar(0));
        for (const auto& [e, c] : terms_) {
            R term = one;
            for (size_t v = 0; v < e.size(); ++v) {
                int k = e[v];
                if (k == 0) continue;
                if (v >= values.size()) throw std::logic_error("MultiPoly::eval: variable out of range");
                auto& tab = powers[v];
                if (tab.empty()) tab.push_back(values[v]);
                while (static_cast<int>(tab.size()) < k) tab.push_back(tab.back() * values[v]);
                term = term * tab[static_cast<size_t>(k - 1)];
            }
            acc = acc + scale(term, c);
        }
        return acc;
    }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

private:
    static void trim(Exponents& e);
    TermMap terms_;
};

inline MultiPoly scale(const MultiPoly& p, const Scalar& s) { return s * p; }
inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

}  // namespace rexosc
