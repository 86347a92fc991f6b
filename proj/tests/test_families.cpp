#include <doctest.h>

#include <cmath>
#include <functional>

#include "rexosc/extension.hpp"
#include "rexosc/families.hpp"
#include "rexosc/laurent_series.hpp"

namespace {

using namespace rexosc;

std::vector<Partition> partitions_up_to(long n) {
    std::vector<Partition> out;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long remaining, long max_part) {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (long p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    for (long w = 0; w <= n; ++w) rec(w, w);
    return out;
}

// Multinomial-sum oracle for ordinary Bell polynomials:
// B_k = sum over multiplicity vectors mu with sum j*mu_j = k of
// prod t_j^{mu_j} / mu_j!.
MultiPoly bell_multinomial(long k) {
    MultiPoly acc;
    std::vector<long> mu(static_cast<size_t>(k) + 1, 0);
    std::function<void(long, long)> rec = [&](long j, long remaining) {
        if (remaining == 0 || j > k) {
            if (remaining != 0) return;
            MultiPoly term(Scalar(1));
            for (long v = 1; v <= k; ++v) {
                for (long rep = 0; rep < mu[static_cast<size_t>(v)]; ++rep)
                    term = term * MultiPoly::var(static_cast<int>(v));
                term = factorial(mu[static_cast<size_t>(v)]).reciprocal() * term;
            }
            acc += term;
            return;
        }
        for (long count = 0; count * j <= remaining; ++count) {
            mu[static_cast<size_t>(j)] = count;
            rec(j + 1, remaining - count * j);
        }
        mu[static_cast<size_t>(j)] = 0;
    };
    rec(1, k);
    return acc;
}

TEST_CASE("bell sequence: symbolic examples") {
    std::map<long, MultiPoly> t;
    t[1] = MultiPoly::var(1);
    t[2] = MultiPoly::var(2);
    auto b = bell_sequence(t, 2, MultiPoly(Scalar(1)));
    MultiPoly expected = Scalar(1, 2) * (MultiPoly::var(1) * MultiPoly::var(1)) + MultiPoly::var(2);
    CHECK(b[2] == expected);
    CHECK(b[0] == MultiPoly(Scalar(1)));

    // all t_j = 0
    std::map<long, Scalar> zero;
    auto bz = bell_sequence(zero, 4, Scalar(1));
    CHECK(bz[0] == Scalar(1));
    for (int k = 1; k <= 4; ++k) CHECK(bz[static_cast<size_t>(k)] == Scalar(0));

    // t1 = x, t2 = -1/4: 3! 2^3 B_3 = 8x^3 - 12x = H_3
    std::map<long, Poly> th;
    th[1] = Poly::x();
    th[2] = Poly(Scalar(-1, 4));
    auto bh = bell_sequence(th, 3, Poly(Scalar(1)));
    CHECK(bh[3] == Poly({Scalar(0), Scalar(-1, 4), Scalar(0), Scalar(1, 6)}));
    CHECK((factorial(3) * pow(Scalar(2), 3)) * bh[3] == hermite(3));
}

TEST_CASE("bell recurrence matches the multinomial sum for k <= 8") {
    std::map<long, MultiPoly> t;
    for (long j = 1; j <= 8; ++j) t[j] = MultiPoly::var(static_cast<int>(j));
    auto b = bell_sequence(t, 8, MultiPoly(Scalar(1)));
    for (long k = 0; k <= 8; ++k) CHECK(b[static_cast<size_t>(k)] == bell_multinomial(k));
}

TEST_CASE("hermite: frozen small cases") {
    CHECK(hermite(0) == Poly(Scalar(1)));
    CHECK(hermite(1) == Poly({Scalar(0), Scalar(2)}));
    CHECK(hermite(2) == Poly({Scalar(-2), Scalar(0), Scalar(4)}));
    CHECK(hermite(3) == Poly({Scalar(0), Scalar(-12), Scalar(0), Scalar(8)}));
    CHECK(hermite(2, true) == Poly({Scalar(2), Scalar(0), Scalar(4)}));
    CHECK(hermite(3, true) == Poly({Scalar(0), Scalar(12), Scalar(0), Scalar(8)}));
}

TEST_CASE("hermite conjugation: i^-n H_n(ix) route") {
    // conjugate coefficients are c_m * (-1)^((m-n)/2) with m = n mod 2
    for (long n = 0; n <= 12; ++n) {
        Poly h = hermite(n);
        std::vector<Scalar> c(static_cast<size_t>(n) + 1, Scalar(0));
        for (long m = n % 2; m <= n; m += 2) {
            Scalar v = h.coeff(m);
            if ((n - m) / 2 % 2 == 1) v = -v;
            c[static_cast<size_t>(m)] = v;
        }
        CHECK(hermite(n, true) == Poly(std::move(c)));
    }
}

TEST_CASE("hermite: three construction routes agree exactly for n <= 30") {
    for (long n = 0; n <= 30; ++n) {
        for (bool conj : {false, true}) {
            Poly a = hermite(n, conj);
            CHECK(a == hermite_rodrigues(n, conj));
            CHECK(a == hermite_bell(n, conj));
            CHECK(a.degree() == n);
        }
    }
}

TEST_CASE("hermite generating function: series of e^{xz - z^2/4} through z^12") {
    for (long n = 0; n <= 12; ++n) {
        // direct double-sum coefficient of z^n in e^{xz} e^{-z^2/4}
        Poly direct;
        for (long b = 0; 2 * b <= n; ++b) {
            long a = n - 2 * b;
            Scalar c = pow(Scalar(-1, 4), b) / (factorial(a) * factorial(b));
            direct += Poly::monomial(a, c);
        }
        Scalar norm = (pow(Scalar(2), n) * factorial(n)).reciprocal();
        CHECK(direct == norm * hermite(n));
    }
}

TEST_CASE("hermite orthogonality via Gauss-Hermite quadrature") {
    // nodes: roots of H_30 by interlacing bisection on exact polynomials
    const long n_nodes = 30;
    std::vector<Poly> hs;
    for (long k = 0; k <= n_nodes; ++k) hs.push_back(hermite(k));
    std::vector<double> roots;  // roots of H_k, grown iteratively
    for (long k = 1; k <= n_nodes; ++k) {
        std::vector<double> prev = roots;
        roots.clear();
        double bound = std::sqrt(2.0 * static_cast<double>(k) + 1.0) + 1.0;
        std::vector<double> edges{-bound};
        edges.insert(edges.end(), prev.begin(), prev.end());
        edges.push_back(bound);
        const Poly& h = hs[static_cast<size_t>(k)];
        for (size_t i = 0; i + 1 < edges.size(); ++i) {
            double lo = edges[i], hi = edges[i + 1];
            double flo = h.eval_d(lo);
            for (int it = 0; it < 200; ++it) {
                double mid = 0.5 * (lo + hi);
                double fm = h.eval_d(mid);
                if ((flo < 0) == (fm < 0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
    }
    REQUIRE(roots.size() == static_cast<size_t>(n_nodes));
    // weights 2^{n-1} n! sqrt(pi) / (n^2 H_{n-1}(x_i)^2)
    double sqrt_pi = std::sqrt(M_PI);
    double wnum = std::pow(2.0, n_nodes - 1) * factorial(n_nodes).to_double() * sqrt_pi /
                  (static_cast<double>(n_nodes) * static_cast<double>(n_nodes));
    std::vector<double> weights;
    for (double r : roots) {
        double hm = hs[n_nodes - 1].eval_d(r);
        weights.push_back(wnum / (hm * hm));
    }
    for (long m = 0; m <= 10; ++m) {
        for (long n = 0; n <= 10; ++n) {
            double integral = 0;
            for (size_t i = 0; i < roots.size(); ++i)
                integral += weights[i] * hs[static_cast<size_t>(m)].eval_d(roots[i]) *
                            hs[static_cast<size_t>(n)].eval_d(roots[i]);
            double exact = (m == n) ? sqrt_pi * std::pow(2.0, n) * factorial(n).to_double() : 0.0;
            double scale = sqrt_pi * std::pow(2.0, 0.5 * static_cast<double>(m + n)) *
                           std::sqrt(factorial(m).to_double() * factorial(n).to_double());
            CHECK(std::abs(integral - exact) / scale < 1e-10);
        }
    }
}

TEST_CASE("schur polynomial: worked examples") {
    MultiPoly t1 = MultiPoly::var(1), t2 = MultiPoly::var(2), t3 = MultiPoly::var(3);
    MultiPoly expected = Scalar(1, 12) * (t1 * t1 * t1 * t1) + t2 * t2 - t1 * t3;
    CHECK(schur_polynomial(Partition({2, 2})) == expected);
    CHECK(schur_polynomial(Partition()) == MultiPoly(Scalar(1)));
    CHECK(schur_polynomial(Partition({1})) == t1);
}

TEST_CASE("schur determinant equals the t1-Wronskian form for |lambda| <= 8") {
    for (const auto& lambda : partitions_up_to(8))
        CHECK(schur_polynomial(lambda) == schur_wronskian(lambda));
}

TEST_CASE("schur raising construction: insertion chain matches") {
    // S^(lambda) = X_{lambda_1} ... X_{lambda_l} 1 as signed basis elements
    for (const auto& lambda : partitions_up_to(7)) {
        SignedPartition state{1, Partition()};
        for (long i = lambda.length(); i >= 1; --i) {
            SignedPartition next = vertex_insert(lambda.part(i), state.partition);
            REQUIRE(next.sign != 0);
            state = SignedPartition{state.sign * next.sign, next.partition};
        }
        CHECK(state.sign == 1);
        CHECK(state.partition == lambda);
    }
}

TEST_CASE("vertex insert: worked examples") {
    for (long m = 0; m <= 5; ++m) {
        SignedPartition r = vertex_insert(m, Partition());
        CHECK(r.sign == 1);
        CHECK(r.partition == (m == 0 ? Partition() : Partition({m})));
    }
    CHECK(vertex_insert(-1, Partition()).sign == 0);
    CHECK(vertex_insert(2, Partition({2})).sign == 1);
}

TEST_CASE("vertex relation X_m X_n + X_{n-1} X_{m+1} = 0 on Schur basis, |lambda| <= 6") {
    auto apply2 = [](long outer, long inner, const Partition& lambda) -> SignedPartition {
        SignedPartition first = vertex_insert(inner, lambda);
        if (first.sign == 0) return first;
        SignedPartition second = vertex_insert(outer, first.partition);
        return SignedPartition{first.sign * second.sign, second.partition};
    };
    for (const auto& lambda : partitions_up_to(6)) {
        for (long m = -3; m <= 5; ++m) {
            for (long n = -3; n <= 5; ++n) {
                SignedPartition a = apply2(m, n, lambda);
                SignedPartition b = apply2(n - 1, m + 1, lambda);
                if (a.sign == 0) {
                    CHECK(b.sign == 0);
                } else {
                    REQUIRE(b.sign != 0);
                    CHECK(a.partition == b.partition);
                    CHECK(a.sign == -b.sign);
                }
            }
        }
    }
}

TEST_CASE("insertion expansion: vertex generating function acting on S^(lambda)") {
    // exp(sum t_k z^k) S^(lambda)(t_j - z^-j / j) must equal
    // sum over empty positions m of (sign) S^(m insert lambda) z^m.
    const long T = 10;
    using LS = LaurentSeries<MultiPoly>;
    MultiPoly one(Scalar(1));
    for (const auto& lambda : partitions_up_to(6)) {
        long n = std::max<long>(1, lambda.weight());
        MultiPoly s = schur_polynomial(lambda);
        int vars = std::max(s.nvars(), static_cast<int>(T + n));
        // substituted Schur polynomial: exact Laurent polynomial in z
        std::vector<LS> values;
        for (int j = 1; j <= vars; ++j) {
            LS tj(MultiPoly::var(j), 0, LS::kExact);
            LS shift(Scalar(-1, j) * one, -j, LS::kExact);
            values.push_back(tj + shift);
        }
        LS substituted = s.eval(values, LS(one, 0, LS::kExact));
        // exponential prefactor as Bell series, truncated high enough that the
        // product is reliable through z^T
        long depth = substituted.is_zero() ? 0 : -substituted.low();
        std::map<long, MultiPoly> t;
        for (long j = 1; j <= T + depth; ++j) t[j] = MultiPoly::var(static_cast<int>(j));
        auto bell = bell_sequence(t, T + depth, one);
        LS exp_factor(std::move(bell), 0, T + depth);
        LS lhs = exp_factor * substituted;
        REQUIRE(lhs.tmax() >= T);
        // insertion side
        MayaDiagram maya = MayaDiagram::from_partition(lambda, 0);
        std::vector<MultiPoly> coeffs;
        long lo = -lambda.length() - 2;
        for (long m = lo; m <= T; ++m) {
            SignedPartition ins = vertex_insert(m, lambda);
            if (ins.sign == 0) {
                coeffs.push_back(MultiPoly());
                CHECK(maya.contains(m));
            } else {
                coeffs.push_back(Scalar(ins.sign) * schur_polynomial(ins.partition));
            }
        }
        LS rhs(std::move(coeffs), lo, T);
        CHECK(agree_through(lhs.truncated(T), rhs, T));
    }
}

}  // namespace
