#include "rexosc/extension.hpp"

#include <algorithm>

#include "rexosc/families.hpp"

namespace rexosc {

QuasiRational oscillator_eigenfunction(long n) {
    if (n >= 0) return QuasiRational(RationalFunction(hermite(n)), -1);
    return QuasiRational(RationalFunction(hermite(-n - 1, /*conjugate=*/true)), +1);
}

namespace {

// K_M split as (negatives in decreasing order, non-negatives in increasing
// order); this row order fixes the sign of H_M.
std::pair<std::vector<long>, std::vector<long>> split_index_set(const MayaDiagram& m) {
    std::vector<long> s, t;
    for (long k : m.index_set().elems()) (k < 0 ? s : t).push_back(k);
    std::sort(s.begin(), s.end(), std::greater<long>());
    return {std::move(s), std::move(t)};
}

Poly pseudo_wronskian_functions(const std::vector<long>& s, const std::vector<long>& t,
                                long sigma) {
    std::vector<QuasiRational> fs;
    fs.reserve(s.size() + t.size());
    for (long k : s) fs.push_back(oscillator_eigenfunction(k));
    for (long k : t) fs.push_back(oscillator_eigenfunction(k));
    QuasiRational w = wronskian(fs);
    // e^{sigma x^2/2} Wr[...] must be a weight-zero polynomial.
    if (w.gauss() + sigma != 0 && !w.is_zero())
        throw std::logic_error("pseudo_wronskian: Gaussian weight mismatch");
    if (!w.rat().is_polynomial())
        throw std::logic_error("pseudo_wronskian: non-polynomial Wronskian");
    return w.rat().as_polynomial();
}

Poly pseudo_wronskian_determinant(const std::vector<long>& s, const std::vector<long>& t) {
    size_t n = s.size() + t.size();
    if (n == 0) return Poly(Scalar(1));
    std::vector<std::vector<Poly>> m;
    m.reserve(n);
    for (long k : s) {
        std::vector<Poly> row;
        row.reserve(n);
        for (size_t j = 0; j < n; ++j) row.push_back(hermite(-k - 1 + static_cast<long>(j), true));
        m.push_back(std::move(row));
    }
    for (long k : t) {
        std::vector<Poly> row;
        row.reserve(n);
        Poly h = hermite(k);
        for (size_t j = 0; j < n; ++j) {
            row.push_back(h);
            h = h.derivative();
        }
        m.push_back(std::move(row));
    }
    return det_poly(std::move(m));
}

// 1 / (prod_{i<j} 2(s_j-s_i) prod_{i<j} 2(t_j-t_i)) with both halves
// enumerated ascending, times the (-1)^{pq} parity factor.
Scalar normalization_factor(const std::vector<long>& s, const std::vector<long>& t) {
    Scalar norm(1);
    std::vector<long> s_asc(s.rbegin(), s.rend());
    for (const auto& v : {s_asc, t})
        for (size_t i = 0; i < v.size(); ++i)
            for (size_t j = i + 1; j < v.size(); ++j) norm *= Scalar(2 * (v[j] - v[i]));
    if ((s.size() * t.size()) % 2 == 1) norm = -norm;
    return norm.reciprocal();
}

RationalFunction potential_from(const Poly& h, long sigma) {
    RationalFunction hh(h);
    RationalFunction log_d = RationalFunction(h.derivative()) / hh;
    RationalFunction log_dd = RationalFunction(h.derivative().derivative()) / hh;
    Poly x2 = Poly::monomial(2, Scalar(1));
    return RationalFunction(x2) + Scalar(2) * log_d * log_d - Scalar(2) * log_dd +
           RationalFunction(Scalar(2 * sigma));
}

}  // namespace

Poly pseudo_wronskian(const MayaDiagram& m) {
    auto [s, t] = split_index_set(m);
    Poly via_wronskian = pseudo_wronskian_functions(s, t, m.sigma());
    Poly via_determinant = pseudo_wronskian_determinant(s, t);
    if (via_wronskian != via_determinant)
        throw std::logic_error("pseudo_wronskian: Wronskian and determinant routes disagree");
    return via_wronskian;
}

Poly normalized_pseudo_wronskian(const MayaDiagram& m) {
    auto [s, t] = split_index_set(m);
    return normalization_factor(s, t) * pseudo_wronskian(m);
}

RationalFunction potential(const MayaDiagram& m) {
    return potential_from(normalized_pseudo_wronskian(m), m.sigma());
}

RationalExtension RationalExtension::build(const MayaDiagram& m) {
    RationalExtension ext;
    ext.maya = m;
    ext.h = pseudo_wronskian(m);
    auto [s, t] = split_index_set(m);
    ext.h_hat = normalization_factor(s, t) * ext.h;
    ext.u = potential_from(ext.h_hat, m.sigma());
    ext.t = DiffOperator({ext.u, RationalFunction(), RationalFunction(Scalar(-1))});
    return ext;
}

Poly eigenfunction_numerator(const MayaDiagram& m, long level) {
    return normalized_pseudo_wronskian(multi_flip(m, IndexSet{level}));
}

QuasiRational eigenfunction(const MayaDiagram& m, long level) {
    return eigenfunction(RationalExtension::build(m), level);
}

QuasiRational eigenfunction(const RationalExtension& ext, long level) {
    long eps = ext.maya.contains(level) ? +1 : -1;
    return QuasiRational(RationalFunction(eigenfunction_numerator(ext.maya, level), ext.h_hat),
                         eps);
}

namespace {

long sign_changes(const std::vector<Poly>& chain, const Scalar& x) {
    long changes = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = p.eval(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

}  // namespace

long sturm_root_count(const Poly& p, const Scalar& a, const Scalar& b) {
    if (p.is_zero()) throw std::domain_error("sturm_root_count: zero polynomial");
    if (!(a < b)) throw std::domain_error("sturm_root_count: empty interval");
    if (p.eval(a).is_zero() || p.eval(b).is_zero())
        throw std::domain_error("sturm_root_count: polynomial vanishes at an endpoint");
    // Square-free part so the chain counts distinct roots.
    Poly f = p;
    Poly g = gcd(f, f.derivative());
    if (g.degree() > 0) f = Poly::exact_div(f, g);
    std::vector<Poly> chain{f, f.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        auto [q, r] = Poly::divrem(chain[chain.size() - 2], chain.back());
        chain.push_back(-r);
    }
    if (chain.back().is_zero()) chain.pop_back();
    return sign_changes(chain, a) - sign_changes(chain, b);
}

}  // namespace rexosc
