#include "rexosc/families.hpp"

#include "rexosc/linalg.hpp"

namespace rexosc {

Poly hermite(long n, bool conjugate) {
    if (n < 0) throw std::domain_error("hermite: negative degree");
    // H_{n+1} = 2x H_n - 2n H_{n-1}; the conjugate family flips the sign of
    // the second term.
    Poly prev{Scalar(1)};
    if (n == 0) return prev;
    Poly cur = Poly::monomial(1, Scalar(2));
    Scalar s = conjugate ? Scalar(2) : Scalar(-2);
    for (long k = 1; k < n; ++k) {
        Poly next = Poly::monomial(1, Scalar(2)) * cur + (Scalar(k) * s) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly hermite_rodrigues(long n, bool conjugate) {
    if (n < 0) throw std::domain_error("hermite: negative degree");
    // H_n = (-1)^n e^{x^2} d^n e^{-x^2}: track the polynomial factor through
    // r -> r' - 2xr (or r' + 2xr for the conjugate family, with no sign).
    Poly r{Scalar(1)};
    Poly two_x = Poly::monomial(1, Scalar(conjugate ? 2 : -2));
    for (long k = 0; k < n; ++k) r = r.derivative() + two_x * r;
    return (!conjugate && n % 2 == 1) ? -r : r;
}

Poly hermite_bell(long n, bool conjugate) {
    if (n < 0) throw std::domain_error("hermite: negative degree");
    // H_n = n! 2^n B_n(x, -1/4, 0, ...); the conjugate family uses +1/4.
    std::map<long, Poly> t;
    t[1] = Poly::x();
    t[2] = Poly(Scalar(conjugate ? 1 : -1, 4));
    auto b = bell_sequence(t, n, Poly(Scalar(1)));
    return (factorial(n) * pow(Scalar(2), n)) * b[static_cast<size_t>(n)];
}

namespace {

// det(B_{m_i + j})_{i,j=1..l} over an arbitrary row provider; B_k = 0 for
// negative k.
MultiPoly schur_det(const Partition& lambda, const std::vector<MultiPoly>& bell) {
    long l = lambda.length();
    if (l == 0) return MultiPoly(Scalar(1));
    std::vector<std::vector<MultiPoly>> m(static_cast<size_t>(l),
                                          std::vector<MultiPoly>(static_cast<size_t>(l)));
    for (long i = 1; i <= l; ++i) {
        long mi = lambda.part(i) - i;
        for (long j = 1; j <= l; ++j) {
            long k = mi + j;
            if (k >= 0) m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                bell[static_cast<size_t>(k)];
        }
    }
    return det_ring(m, MultiPoly(Scalar(1)));
}

std::vector<MultiPoly> symbolic_bell(long k_max) {
    std::map<long, MultiPoly> t;
    for (long j = 1; j <= k_max; ++j) t[j] = MultiPoly::var(static_cast<int>(j));
    return bell_sequence(t, k_max, MultiPoly(Scalar(1)));
}

}  // namespace

MultiPoly schur_polynomial(const Partition& lambda) {
    long k_max = lambda.part(1) + lambda.length();
    return schur_det(lambda, symbolic_bell(k_max));
}

MultiPoly schur_wronskian(const Partition& lambda) {
    long l = lambda.length();
    if (l == 0) return MultiPoly(Scalar(1));
    long k_max = lambda.part(1) + l;
    auto bell = symbolic_bell(k_max);
    // Wr[B_{m_l + l}, ..., B_{m_1 + l}] with d/dt_1, using
    // d/dt_1 B_k = B_{k-1}.
    std::vector<std::vector<MultiPoly>> m(static_cast<size_t>(l),
                                          std::vector<MultiPoly>(static_cast<size_t>(l)));
    for (long row = 0; row < l; ++row) {
        for (long col = 0; col < l; ++col) {
            // Functions ordered B_{m_l+l} .. B_{m_1+l}; row = derivative order.
            long i = l - col;  // partition row index for this column
            long k = lambda.part(i) - i + l - row;
            if (k >= 0) m[static_cast<size_t>(row)][static_cast<size_t>(col)] =
                bell[static_cast<size_t>(k)];
        }
    }
    return det_ring(m, MultiPoly(Scalar(1)));
}

Poly schur_hermite_point(const Partition& lambda) {
    long l = lambda.length();
    if (l == 0) return Poly(Scalar(1));
    long k_max = lambda.part(1) + l;
    std::map<long, Poly> t;
    t[1] = Poly::x();
    t[2] = Poly(Scalar(-1, 4));
    auto bell = bell_sequence(t, k_max, Poly(Scalar(1)));
    std::vector<std::vector<Poly>> m(static_cast<size_t>(l),
                                     std::vector<Poly>(static_cast<size_t>(l)));
    for (long i = 1; i <= l; ++i) {
        long mi = lambda.part(i) - i;
        for (long j = 1; j <= l; ++j) {
            long k = mi + j;
            if (k >= 0) m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                bell[static_cast<size_t>(k)];
        }
    }
    return det_poly(std::move(m));
}

SignedPartition vertex_insert(long m, const Partition& lambda) {
    MayaDiagram maya = MayaDiagram::from_partition(lambda, 0);
    if (maya.contains(m)) return SignedPartition{0, Partition()};
    // Parity of the number of filled positions above m; an empty m is never
    // below the solid tail, so only the listed members can exceed it.
    long above = 0;
    for (long i = 1; i <= lambda.length(); ++i)
        if (lambda.part(i) - i > m) ++above;
    MayaDiagram flipped = multi_flip(maya, IndexSet{m});
    return SignedPartition{(above % 2 == 0) ? 1 : -1, flipped.partition()};
}

}  // namespace rexosc
