#pragma once

#include "rexosc/combinatorics.hpp"
#include "rexosc/diff_operator.hpp"
#include "rexosc/linalg.hpp"

namespace rexosc {

// Quasi-rational oscillator eigenfunction psi_n: e^{-x^2/2} H_n for n >= 0,
// e^{+x^2/2} conj-H_{-n-1} for n < 0.
QuasiRational oscillator_eigenfunction(long n);

// Pseudo-Wronskian H_M, computed by both the quasi-rational Wronskian route
// and the Hermite/conjugate-Hermite determinant route; the two must agree.
Poly pseudo_wronskian(const MayaDiagram& m);

// Translation-invariant normalization of H_M.  Satisfies
// hat{H}_M = (2^N N!/d_lambda) S^(lambda)(x, -1/4, 0, ...).
Poly normalized_pseudo_wronskian(const MayaDiagram& m);

// U_M = x^2 + 2(H'/H)^2 - 2H''/H + 2 sigma_M, reduced to lowest terms.
RationalFunction potential(const MayaDiagram& m);

// A rational extension of the oscillator with its spectral data cached.
struct RationalExtension {
    MayaDiagram maya;
    Poly h;             // H_M
    Poly h_hat;         // normalized pseudo-Wronskian
    RationalFunction u;  // potential U_M
    DiffOperator t;     // Hamiltonian -d^2/dx^2 + U_M

    static RationalExtension build(const MayaDiagram& m);
};

// psi_{M,m} = e^{eps x^2/2} hat{H}_{f_m(M)} / hat{H}_M with eps = -1 for
// m outside M (bound/decaying) and +1 for m in M (virtual state).
QuasiRational eigenfunction(const MayaDiagram& m, long level);
QuasiRational eigenfunction(const RationalExtension& ext, long level);
// Numerator polynomial hat{H}_{f_m(M)} of psi_{M,m} before reduction.
Poly eigenfunction_numerator(const MayaDiagram& m, long level);

// Exact count of distinct real roots of p in the open interval (a, b) via
// Sturm chains; throws std::domain_error if p vanishes at an endpoint.
long sturm_root_count(const Poly& p, const Scalar& a, const Scalar& b);

}  // namespace rexosc
