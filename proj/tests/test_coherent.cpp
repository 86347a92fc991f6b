#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "rexosc/coherent.hpp"
#include "rexosc/families.hpp"
#include "rexosc/ladder.hpp"

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

TEST_CASE("psi0 series: classical relations") {
    const long T = 12;
    auto psi0 = psi0_series(T);
    DiffOperator t({RationalFunction(Poly::monomial(2, Scalar(1))), RationalFunction(),
                    RationalFunction(Scalar(-1))});
    DiffOperator lower({RationalFunction(Poly::x()), RationalFunction(Scalar(1))});
    DiffOperator raise({RationalFunction(-Poly::x()), RationalFunction(Scalar(1))});

    auto lhs_t = psi0.map([&](const QuasiRational& c) { return t.apply(c); });
    auto rhs_t = scale(psi0.z_ddz(), Scalar(2)) + psi0;
    CHECK(agree_through(lhs_t, rhs_t, T));

    auto lhs_low = psi0.map([&](const QuasiRational& c) { return lower.apply(c); });
    CHECK(agree_through(lhs_low, psi0.shifted(1), T));

    // L_+ Psi_0 = 2 d/dz Psi_0
    auto lhs_raise = psi0.map([&](const QuasiRational& c) { return raise.apply(c); });
    auto rhs_raise = scale(psi0.z_ddz().shifted(-1), Scalar(2));
    CHECK(agree_through(lhs_raise, rhs_raise, T - 1));
}

TEST_CASE("generating series: lambda = (2,2) prefactor is the worked example") {
    GeneratingSeries gs = generating_series(Partition({2, 2}), 12);
    REQUIRE(gs.prefactor.size() == 3);
    Poly den({Scalar(3), Scalar(0), Scalar(0), Scalar(0), Scalar(4)});
    CHECK(gs.prefactor[0] == RationalFunction(Scalar(1)));
    CHECK(gs.prefactor[1] == RationalFunction(Scalar(-16) * Poly::monomial(3, Scalar(1)), den));
    CHECK(gs.prefactor[2] ==
          RationalFunction(Scalar(12) * Poly({Scalar(1), Scalar(0), Scalar(2)}), den));
}

TEST_CASE("generating series: trivial partition reduces to the classical series") {
    GeneratingSeries gs = generating_series(Partition(), 10);
    REQUIRE(gs.prefactor.size() == 1);
    CHECK(gs.prefactor[0] == RationalFunction(Scalar(1)));
    CHECK(agree_through(gs.series, psi0_series(10), 10));
}

TEST_CASE("generating series coefficients: bound states only, with the stated weights") {
    const long T = 11;
    for (const auto& lambda : partitions_up_to(5)) {
        GeneratingSeries gs = generating_series(lambda, T);
        MayaDiagram m = MayaDiagram::from_partition(lambda, 0);
        RationalExtension ext = RationalExtension::build(m);
        for (long e = -lambda.length() - 2; e <= T; ++e) {
            QuasiRational c = gs.series.coefficient(e);
            if (m.contains(e)) {
                CHECK(c.is_zero());
            } else if (e >= m.first_empty()) {
                CHECK(c == bound_state_coefficient(m, e) * eigenfunction(ext, e));
            } else {
                CHECK(c.is_zero());
            }
        }
    }
}

TEST_CASE("generating series preconditions") {
    CHECK_THROWS_AS(generating_series(Partition({2, 2}), 3), std::domain_error);
    CHECK_THROWS_AS(generating_series(Partition({11}), 20), std::domain_error);
}

TEST_CASE("bound state coefficients: worked examples") {
    for (long n = 0; n <= 8; ++n)
        CHECK(bound_state_coefficient(MayaDiagram(), n) ==
              (pow(Scalar(2), n) * factorial(n)).reciprocal());
    MayaDiagram m23 = MayaDiagram::from_index_set(IndexSet{2, 3});
    CHECK(bound_state_coefficient(m23, 0) == Scalar(24));
    CHECK_THROWS_AS(bound_state_coefficient(m23, 2), std::domain_error);
    // translation consistency against the canonical diagram of the series
    MayaDiagram canonical = MayaDiagram::from_partition(Partition({2, 2}), 0);
    CHECK(bound_state_coefficient(canonical, -2) == Scalar(24));
}

TEST_CASE("series PDE: T_M Psi = (2 z d/dz + 1 + 2 sigma) Psi, |lambda| <= 5") {
    const long T = 12;
    for (const auto& lambda : partitions_up_to(5)) {
        long trunc = std::max(T, threshold_degree(lambda));
        GeneratingSeries gs = generating_series(lambda, trunc);
        RationalExtension ext = RationalExtension::build(MayaDiagram::from_partition(lambda, 0));
        auto lhs = gs.series.map([&](const QuasiRational& c) { return ext.t.apply(c); });
        auto rhs = scale(gs.series.z_ddz(), Scalar(2)) + gs.series;
        CHECK(agree_through(lhs, rhs, trunc - 1));
    }
}

TEST_CASE("series eigenrelation: L^(q) Psi = z^q Psi at and above threshold, |lambda| <= 4") {
    for (const auto& lambda : partitions_up_to(4)) {
        long qc = threshold_degree(lambda);
        MayaDiagram m = MayaDiagram::from_partition(lambda, 0);
        for (long q = std::max(1L, qc); q <= qc + 1; ++q) {
            long trunc = std::max(12L, q + lambda.part(1) + lambda.length());
            GeneratingSeries gs = generating_series(lambda, trunc);
            Intertwiner l = ladder_operator(m, q);
            auto lhs = gs.series.map([&](const QuasiRational& c) { return l.op.apply(c); });
            CHECK(agree_through(lhs, gs.series.shifted(q), trunc - q));
        }
    }
}

TEST_CASE("coherent state: canonical reduction at 1000 random points") {
    std::mt19937_64 rng(90210);
    std::uniform_real_distribution<double> ux(-4.0, 4.0);
    std::uniform_real_distribution<double> ut(0.0, 2.0);
    std::uniform_real_distribution<double> ua(-1.5, 1.5);
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
        double x = ux(rng), t = ut(rng);
        std::complex<double> alpha(ua(rng), ua(rng));
        CoherentState s(MayaDiagram(), alpha);
        worst = std::max(worst,
                         std::abs(s.value(x, t) - canonical_coherent(alpha, x, t)));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("coherent state: worked value at the origin for lambda = (2,2)") {
    // t = 0, alpha = 1: prefactor(0, 1) = 1 - 0 + 12/3 = 5, Psi_0(0,1) = e^{-1/4}
    std::complex<double> v = coherent_eval(Partition({2, 2}), {1.0, 0.0}, 0.0, 0.0);
    CHECK(std::abs(v - 5.0 * std::exp(-0.25)) < 1e-12);
    // and t = 0 reduces to the plain generating function for the K={2,3} diagram
    MayaDiagram m23 = MayaDiagram::from_index_set(IndexSet{2, 3});
    std::complex<double> w = coherent_eval(m23, {1.0, 0.0}, 0.7, 0.0);
    GeneratingSeries gs = generating_series(Partition({2, 2}), 6);
    double x = 0.7;
    double p = 1.0;
    for (size_t k = 0; k < gs.prefactor.size(); ++k) p += (k == 0 ? 0.0 : gs.prefactor[k].eval_d(x));
    double psi0 = std::exp(-0.5 * (x - 1.0) * (x - 1.0) + 0.25);
    CHECK(std::abs(w - p * psi0) < 1e-12);
}

TEST_CASE("coherent state: zero amplitude") {
    CHECK_THROWS_AS(coherent_eval(Partition({2, 2}), {0.0, 0.0}, 0.0, 0.0), std::domain_error);
    // stationary ground state for lambda = 0, alpha = 0
    EvalGrid grid{-5.0, 5.0, 64, 0.0, 1.0, 64};
    CHECK(tdse_residual(Partition(), {0.0, 0.0}, grid) < 1e-10);
}

TEST_CASE("TDSE residual: classical coherent state on the reference grid") {
    EvalGrid grid{-5.0, 5.0, 201, 0.0, 1.0, 201};
    CHECK(tdse_residual(Partition(), {1.0, 0.0}, grid) < 1e-6);
}

TEST_CASE("annihilator eigen-residuals") {
    std::mt19937_64 rng(5150);
    std::uniform_real_distribution<double> ux(-5.0, 5.0);
    std::uniform_real_distribution<double> ut(0.0, 1.0);
    std::vector<std::pair<double, double>> samples;
    for (int i = 0; i < 100; ++i) samples.emplace_back(ux(rng), ut(rng));
    CHECK(annihilator_eigen_residual(Partition(), 1, {0.8, 0.3}, samples) < 1e-10);
    CHECK(annihilator_eigen_residual(Partition({2, 2}), 4, {1.0, 0.0}, samples) < 1e-8);
    CHECK_THROWS_AS(annihilator_eigen_residual(Partition({2, 2}), 3, {1.0, 0.0}, samples),
                    std::domain_error);
}

}  // namespace
