#include "rexosc/coherent.hpp"

#include <cmath>

#include "rexosc/families.hpp"
#include "rexosc/ladder.hpp"

namespace rexosc {

namespace {

using cplx = std::complex<double>;

// Exact Laurent-polynomial prefactor of Psi^(lambda): coefficient of z^-k at
// index k.  Computed as det(B_{m_i+j}) over Laurent polynomials in z with
// polynomial-in-x coefficients, for the substitution t_1 = x - 1/z,
// t_2 = -1/4 - 1/(2 z^2), t_j = -1/(j z^j), divided by the same determinant
// at the base point (x, -1/4, 0, ...).
std::vector<RationalFunction> series_prefactor(const Partition& lambda) {
    long l = lambda.length();
    if (l == 0) return {RationalFunction(Scalar(1))};
    using LP = LaurentSeries<Poly>;
    long k_max = lambda.part(1) + l - 1;
    std::map<long, LP> t;
    t[1] = LP({Poly(Scalar(-1)), Poly::x()}, -1, LP::kExact);
    if (k_max >= 2) t[2] = LP({Poly(Scalar(-1, 2)), Poly(), Poly(Scalar(-1, 4))}, -2, LP::kExact);
    for (long j = 3; j <= k_max; ++j) t[j] = LP(Poly(Scalar(-1, j)), -j, LP::kExact);
    LP one(Poly(Scalar(1)), 0, LP::kExact);
    auto bell = bell_sequence(t, k_max, one);
    std::vector<std::vector<LP>> m(static_cast<size_t>(l), std::vector<LP>(static_cast<size_t>(l)));
    for (long i = 1; i <= l; ++i) {
        long mi = lambda.part(i) - i;
        for (long j = 1; j <= l; ++j) {
            long k = mi + j;
            m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                (k >= 0) ? bell[static_cast<size_t>(k)] : LP(Poly(), 0, LP::kExact);
        }
    }
    LP num = det_ring(m, one);
    Poly den = schur_hermite_point(lambda);
    if (num.is_zero() || num.high() != 0 || num.low() != -l)
        throw std::logic_error("generating_series: prefactor depth is not the partition length");
    std::vector<RationalFunction> out(static_cast<size_t>(l) + 1);
    for (long k = 0; k <= l; ++k) out[static_cast<size_t>(k)] = RationalFunction(num.coefficient(-k), den);
    if (out[0] != RationalFunction(Scalar(1)))
        throw std::logic_error("generating_series: prefactor does not start at 1");
    return out;
}

}  // namespace

LaurentSeries<QuasiRational> psi0_series(long trunc) {
    if (trunc < 0) throw std::domain_error("psi0_series: negative truncation");
    std::vector<QuasiRational> c;
    c.reserve(static_cast<size_t>(trunc) + 1);
    Scalar norm(1);
    for (long n = 0; n <= trunc; ++n) {
        if (n > 0) norm /= Scalar(2 * n);
        c.push_back(QuasiRational(norm * RationalFunction(hermite(n)), -1));
    }
    return LaurentSeries<QuasiRational>(std::move(c), 0, trunc);
}

GeneratingSeries generating_series(const Partition& lambda, long trunc) {
    if (lambda.weight() > 10) throw std::domain_error("generating_series: |lambda| above desk scale");
    long l = lambda.length();
    if (trunc < lambda.part(1) + l)
        throw std::domain_error("generating_series: truncation too small (need lambda_1 + length)");
    GeneratingSeries out;
    out.lambda = lambda;
    out.trunc = trunc;
    out.prefactor = series_prefactor(lambda);
    std::vector<QuasiRational> pc;
    pc.reserve(out.prefactor.size());
    for (size_t k = 0; k < out.prefactor.size(); ++k)
        pc.push_back(QuasiRational(out.prefactor[k], 0));
    std::reverse(pc.begin(), pc.end());  // exponents -l..0
    LaurentSeries<QuasiRational> pref(std::move(pc), -l, LaurentSeries<QuasiRational>::kExact);
    out.series = pref * psi0_series(trunc + l);
    if (out.series.tmax() < trunc) throw std::logic_error("generating_series: truncation shortfall");
    out.series = out.series.truncated(trunc);
    return out;
}

Scalar bound_state_coefficient(const MayaDiagram& m, long level) {
    if (m.contains(level))
        throw std::domain_error("bound_state_coefficient: level lies in M (virtual state)");
    long l = m.partition().length();
    Scalar prod(1);
    for (long mi : m.decreasing_members(l)) prod *= Scalar(level - mi);
    long shift = level - m.sigma();
    return prod / factorial(shift + l) * pow(Scalar(1, 2), shift);
}

namespace {

// Taylor jets (value and derivatives) in x at a point, complex coefficients.
using Jet = std::vector<cplx>;

Jet jet_mul(const Jet& a, const Jet& b) {
    size_t n = a.size();
    Jet r(n, cplx(0));
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i <= k; ++i)
            r[k] += static_cast<double>(binomial_z(static_cast<long>(k), static_cast<long>(i)).get_si()) *
                    a[i] * b[k - i];
    return r;
}

Jet jet_exp(const Jet& f) {
    size_t n = f.size();
    Jet g(n, cplx(0));
    g[0] = std::exp(f[0]);
    for (size_t k = 0; k + 1 < n; ++k) {
        // g^{(k+1)} = sum_i C(k,i) f^{(i+1)} g^{(k-i)}
        cplx acc(0);
        for (size_t i = 0; i <= k; ++i)
            acc += static_cast<double>(binomial_z(static_cast<long>(k), static_cast<long>(i)).get_si()) *
                   f[i + 1] * g[k - i];
        g[k + 1] = acc;
    }
    return g;
}

Jet jet_div(const Jet& num, const Jet& den) {
    size_t n = num.size();
    Jet r(n, cplx(0));
    for (size_t k = 0; k < n; ++k) {
        cplx acc = num[k];
        for (size_t i = 1; i <= k; ++i)
            acc -= static_cast<double>(binomial_z(static_cast<long>(k), static_cast<long>(i)).get_si()) *
                   den[i] * r[k - i];
        r[k] = acc / den[0];
    }
    return r;
}

Jet poly_jet(const Poly& p, double x, long order) {
    Jet r(static_cast<size_t>(order) + 1, cplx(0));
    Poly d = p;
    for (long j = 0; j <= order; ++j) {
        r[static_cast<size_t>(j)] = d.eval_d(x);
        d = d.derivative();
    }
    return r;
}

Jet rational_jet(const RationalFunction& f, double x, long order) {
    Jet den = poly_jet(f.den(), x, order);
    if (std::abs(den[0]) < 1e-12)
        throw std::domain_error("coherent evaluation: pole at a sample point");
    return jet_div(poly_jet(f.num(), x, order), den);
}

}  // namespace

CoherentState::CoherentState(const MayaDiagram& m, cplx alpha) : maya_(m), alpha_(alpha) {
    if (!m.partition().empty() && alpha == cplx(0))
        throw std::domain_error("CoherentState: zero amplitude with negative powers of z");
    prefactor_ = series_prefactor(m.partition());
    u_ = potential(m);
}

std::vector<cplx> CoherentState::x_jet(double x, double t, long order) const {
    cplx z = alpha_ * std::exp(cplx(0, -2.0 * t));
    // P(x,z) = sum_k pref_k(x) z^-k
    Jet p(static_cast<size_t>(order) + 1, cplx(0));
    cplx zpow(1);
    for (size_t k = 0; k < prefactor_.size(); ++k) {
        if (k > 0) zpow /= z;
        Jet pk = rational_jet(prefactor_[k], x, order);
        for (size_t j = 0; j < p.size(); ++j) p[j] += pk[j] * zpow;
    }
    // exponent -(x-z)^2/2 + z^2/4: jet (e, z-x, -1, 0, ...)
    Jet e(static_cast<size_t>(order) + 1, cplx(0));
    cplx dx = cplx(x) - z;
    e[0] = -0.5 * dx * dx + 0.25 * z * z;
    if (order >= 1) e[1] = -dx;
    if (order >= 2) e[2] = cplx(-1);
    Jet phi = jet_mul(p, jet_exp(e));
    cplx phase = std::exp(cplx(0, -(1.0 + 2.0 * static_cast<double>(maya_.sigma())) * t));
    for (auto& v : phi) v *= phase;
    return phi;
}

cplx CoherentState::value(double x, double t) const { return x_jet(x, t, 0)[0]; }

double CoherentState::potential_at(double x) const {
    double den = u_.den().eval_d(x);
    if (std::abs(den) < 1e-12) throw std::domain_error("coherent evaluation: pole on grid");
    return u_.num().eval_d(x) / den;
}

cplx coherent_eval(const MayaDiagram& m, cplx alpha, double x, double t) {
    return CoherentState(m, alpha).value(x, t);
}

cplx coherent_eval(const Partition& lambda, cplx alpha, double x, double t) {
    return coherent_eval(MayaDiagram::from_partition(lambda, 0), alpha, x, t);
}

cplx canonical_coherent(cplx alpha, double x, double t) {
    cplx z = alpha * std::exp(cplx(0, -2.0 * t));
    cplx d = cplx(x) - 0.5 * z;
    return std::exp(cplx(0, -t) + 0.5 * x * x - d * d);
}

double tdse_residual(const MayaDiagram& m, cplx alpha, const EvalGrid& grid) {
    if (grid.n_x < 8 || grid.n_t < 8) throw std::domain_error("tdse_residual: grid too coarse");
    CoherentState state(m, alpha);
    double hx = (grid.x_max - grid.x_min) / static_cast<double>(grid.n_x - 1);
    double ht = (grid.t_max - grid.t_min) / static_cast<double>(grid.n_t - 1);
    double worst = 0;
    std::vector<cplx> values(static_cast<size_t>(grid.n_t));
    for (long ix = 0; ix < grid.n_x; ++ix) {
        double x = grid.x_min + hx * static_cast<double>(ix);
        double u = state.potential_at(x);
        for (long it = 0; it < grid.n_t; ++it)
            values[static_cast<size_t>(it)] =
                state.value(x, grid.t_min + ht * static_cast<double>(it));
        for (long it = 2; it + 2 < grid.n_t; ++it) {
            double t = grid.t_min + ht * static_cast<double>(it);
            auto jet = state.x_jet(x, t, 2);
            cplx dphi_dt = (values[static_cast<size_t>(it - 2)] - 8.0 * values[static_cast<size_t>(it - 1)] +
                            8.0 * values[static_cast<size_t>(it + 1)] - values[static_cast<size_t>(it + 2)]) /
                           (12.0 * ht);
            cplx lhs = cplx(0, 1) * dphi_dt;
            cplx rhs = -jet[2] + u * jet[0];
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

double tdse_residual(const Partition& lambda, cplx alpha, const EvalGrid& grid) {
    return tdse_residual(MayaDiagram::from_partition(lambda, 0), alpha, grid);
}

double annihilator_eigen_residual(const MayaDiagram& m, long q, cplx alpha,
                                  const std::vector<std::pair<double, double>>& samples) {
    if (q < 1 || !is_q_core(m, q))
        throw std::domain_error("annihilator_eigen_residual: q is not a critical degree");
    Intertwiner ladder = ladder_operator(m, q);
    CoherentState state(m, alpha);
    double worst = 0;
    for (auto [x, t] : samples) {
        auto jet = state.x_jet(x, t, q);
        cplx lhs(0);
        for (long j = 0; j <= ladder.op.order(); ++j) {
            const RationalFunction& c = ladder.op.coeff(j);
            if (c.is_zero()) continue;
            double den = c.den().eval_d(x);
            if (std::abs(den) < 1e-12)
                throw std::domain_error("annihilator_eigen_residual: pole at a sample point");
            lhs += (c.num().eval_d(x) / den) * jet[static_cast<size_t>(j)];
        }
        cplx eig = std::pow(alpha, static_cast<double>(q)) *
                   std::exp(cplx(0, -2.0 * static_cast<double>(q) * t));
        worst = std::max(worst, std::abs(lhs - eig * jet[0]));
    }
    return worst;
}

double annihilator_eigen_residual(const Partition& lambda, long q, cplx alpha,
                                  const std::vector<std::pair<double, double>>& samples) {
    return annihilator_eigen_residual(MayaDiagram::from_partition(lambda, 0), q, alpha, samples);
}

}  // namespace rexosc
