#pragma once

#include <complex>
#include <utility>

#include "rexosc/extension.hpp"
#include "rexosc/laurent_series.hpp"

namespace rexosc {

// Generating function Psi^(lambda)(x,z) for the bound states of the rational
// extension, represented as an exact Laurent-polynomial prefactor in z^-1
// (rational-function coefficients in x) times the classical oscillator
// series Psi_0(x,z).
struct GeneratingSeries {
    Partition lambda;
    long trunc;
    // prefactor[k] is the coefficient of z^-k, k = 0..length(lambda).
    std::vector<RationalFunction> prefactor;
    // Full expansion: coefficient of z^m is psi_{M,m} times the bound-state
    // coefficient, for the canonical diagram M = M^(lambda).
    LaurentSeries<QuasiRational> series;
};

// Requires |lambda| <= 10 and trunc >= lambda_1 + length (throws
// std::domain_error "truncation too small" otherwise).
GeneratingSeries generating_series(const Partition& lambda, long trunc);

// Classical series sum_n psi_n(x) z^n / (2^n n!) through z^trunc.
LaurentSeries<QuasiRational> psi0_series(long trunc);

// Expansion coefficient of psi_{M,m} in Psi^(lambda):
// prod_{i=1..l}(m - m_i) / (m - sigma + l)! * (1/2)^(m - sigma).
// Requires m outside M (throws std::domain_error).
Scalar bound_state_coefficient(const MayaDiagram& m, long level);

// Time-dependent coherent state Phi(x,t;alpha)
//   = e^{-(1+2 sigma) i t} Psi^(lambda)(x, alpha e^{-2it}),
// evaluated in double precision with analytic x-derivatives.
class CoherentState {
public:
    CoherentState(const MayaDiagram& m, std::complex<double> alpha);

    const MayaDiagram& maya() const { return maya_; }
    std::complex<double> alpha() const { return alpha_; }

    std::complex<double> value(double x, double t) const;
    // Derivatives 0..order of Phi with respect to x at (x,t).
    std::vector<std::complex<double>> x_jet(double x, double t, long order) const;
    double potential_at(double x) const;

private:
    MayaDiagram maya_;
    std::complex<double> alpha_;
    std::vector<RationalFunction> prefactor_;
    RationalFunction u_;
};

std::complex<double> coherent_eval(const MayaDiagram& m, std::complex<double> alpha, double x,
                                   double t);
std::complex<double> coherent_eval(const Partition& lambda, std::complex<double> alpha, double x,
                                   double t);

// Canonical coherent state in closed form,
// exp(-it + x^2/2 - (x - alpha e^{-2it}/2)^2).
std::complex<double> canonical_coherent(std::complex<double> alpha, double x, double t);

struct EvalGrid {
    double x_min, x_max;
    long n_x;
    double t_min, t_max;
    long n_t;
};

// Max over interior grid points of |i dPhi/dt - (-Phi_xx + U Phi)| with a
// 4th-order central difference in t and analytic x-derivatives.
double tdse_residual(const MayaDiagram& m, std::complex<double> alpha, const EvalGrid& grid);
double tdse_residual(const Partition& lambda, std::complex<double> alpha, const EvalGrid& grid);

// Max over samples of |L_M^(q) Phi - alpha^q e^{-2iqt} Phi|; requires q to be
// a critical degree of the diagram.
double annihilator_eigen_residual(const MayaDiagram& m, long q, std::complex<double> alpha,
                                  const std::vector<std::pair<double, double>>& samples);
double annihilator_eigen_residual(const Partition& lambda, long q, std::complex<double> alpha,
                                  const std::vector<std::pair<double, double>>& samples);

}  // namespace rexosc
