#pragma once

#include "rexosc/extension.hpp"

namespace rexosc {

// Monic Wronskian intertwiner A_{M,K}: maps eigenfunctions of T_M to
// eigenfunctions of T_{f_K(M)} and annihilates psi_{M,k} for k in K.
struct Intertwiner {
    MayaDiagram source;
    IndexSet flips;
    MayaDiagram target;
    DiffOperator op;  // monic, order |K|
};

// A_{M,K} = Wr[psi_{M,k1},...,psi_{M,kp}, y] / Wr[psi_{M,k1},...,psi_{M,kp}],
// coefficients read off the y-column cofactors.
Intertwiner intertwiner(const MayaDiagram& m, const IndexSet& k);

// (M+n) symmetric-difference M, the flip set of the n-step ladder.
IndexSet ladder_index_set(const MayaDiagram& m, long n);

// L_M^(n) = A_{M, (M+n) sym-diff M}; shifts the energy by 2n.
Intertwiner ladder_operator(const MayaDiagram& m, long n);

// gamma_M^(q)(x) = prod_{k in (M+q) minus M} (x - k); requires M to be a
// q-core (throws std::domain_error otherwise).
Poly gamma_polynomial(const MayaDiagram& m, long q);

// Exact scalar C with L_M^(n) psi_{M,k} = C psi_{M,k-n}; requires k outside
// M.  Zero exactly when k-n lies in M; throws std::logic_error if the image
// fails to be a scalar multiple of psi_{M,k-n}.
Scalar ladder_coefficient(const MayaDiagram& m, long n, long k);

}  // namespace rexosc
