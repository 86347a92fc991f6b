#pragma once

#include <map>

#include "rexosc/combinatorics.hpp"
#include "rexosc/multi_poly.hpp"
#include "rexosc/poly.hpp"
#include "rexosc/ring.hpp"

namespace rexosc {

// Ordinary Bell polynomials B_0..B_kmax for the substitution t_j -> t[j]
// (absent entries are zero), over any commutative Q-algebra.  Computed by the
// recurrence k*B_k = sum_{j=1..k} j*t_j*B_{k-j} from the generating function
// exp(sum t_j z^j) = sum B_k z^k.
template <QAlgebra R>
std::vector<R> bell_sequence(const std::map<long, R>& t, long k_max, const R& one) {
    std::vector<R> b;
    b.reserve(static_cast<size_t>(k_max) + 1);
    b.push_back(one);
    for (long k = 1; k <= k_max; ++k) {
        R acc = scale(one, Scalar(0));
        for (const auto& [j, tj] : t) {
            if (j < 1 || j > k) continue;
            acc = acc + scale(tj * b[static_cast<size_t>(k - j)], Scalar(j));
        }
        b.push_back(scale(acc, Scalar(1, k)));
    }
    return b;
}

// Hermite polynomial H_n (or the conjugate family) by the three-term
// recurrence; the Rodrigues and Bell-specialization routes below are
// independent constructions of the same polynomials.
Poly hermite(long n, bool conjugate = false);
Poly hermite_rodrigues(long n, bool conjugate = false);
Poly hermite_bell(long n, bool conjugate = false);

// S^(lambda) as the determinant det(B_{m_i+j}) of shifted Bell polynomials,
// with m_i = lambda_i - i.
MultiPoly schur_polynomial(const Partition& lambda);
// Same determinant written as a Wronskian with respect to t_1.
MultiPoly schur_wronskian(const Partition& lambda);
// S^(lambda)(x, -1/4, 0, ...), the specialization carrying the Hermite
// pseudo-Wronskians.
Poly schur_hermite_point(const Partition& lambda);

// Value of the vertex operator X_m on the Schur basis: zero, or a signed
// Schur function.
struct SignedPartition {
    int sign = 0;  // +1, -1, or 0 for annihilation
    Partition partition;

    friend bool operator==(const SignedPartition& a, const SignedPartition& b) {
        if (a.sign != b.sign) return false;
        return a.sign == 0 || a.partition == b.partition;
    }
};

// X_m applied to S^(lambda): annihilates when m is a filled position of
// M^(lambda); otherwise inserts m with the parity sign
// (-1)^(number of filled positions above m).
SignedPartition vertex_insert(long m, const Partition& lambda);

}  // namespace rexosc
