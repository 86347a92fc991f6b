#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "rexosc/combinatorics.hpp"

namespace {

using namespace rexosc;

// ---- independent oracle: windowed set model of a Maya diagram -------------
// Positions below `lo` are implicitly filled; membership inside the window is
// explicit.  Everything is computed directly from the definitions.
struct WindowModel {
    long lo;                 // window start; all positions < lo are filled
    std::set<long> filled;   // filled positions in [lo, inf)

    static WindowModel from_flips(const std::vector<long>& k, long lo) {
        WindowModel m{lo, {}};
        std::set<long> ks(k.begin(), k.end());
        for (long p = lo; p <= window_hi(); ++p) {
            bool member = (p < 0) != (ks.count(p) > 0);
            if (member) m.filled.insert(p);
        }
        return m;
    }

    static long window_hi() { return 24; }

    bool contains(long p) const { return p < lo ? true : filled.count(p) > 0; }

    long sigma() const {
        long s = 0;
        for (long p = 0; p <= window_hi(); ++p)
            if (contains(p)) ++s;
        for (long p = lo; p < 0; ++p)
            if (!contains(p)) --s;
        return s;
    }

    std::vector<long> lambda() const {
        long sg = sigma();
        std::vector<long> parts;
        long i = 0;
        for (long p = window_hi(); p >= lo - 1; --p) {
            if (!contains(p)) continue;
            ++i;
            long lam = p + i - sg;
            if (lam <= 0) break;
            parts.push_back(lam);
        }
        return parts;
    }

    void flip(long p) {
        REQUIRE(p >= lo);
        if (filled.count(p))
            filled.erase(p);
        else
            filled.insert(p);
    }

    std::vector<long> difference_against(const WindowModel& o) const {
        std::vector<long> out;
        for (long p = std::min(lo, o.lo); p <= window_hi(); ++p)
            if (contains(p) != o.contains(p)) out.push_back(p);
        return out;
    }
};

WindowModel model_of(const MayaDiagram& m) {
    WindowModel w{-14, {}};
    for (long p = w.lo; p <= WindowModel::window_hi(); ++p)
        if (m.contains(p)) w.filled.insert(p);
    return w;
}

// ---- independent oracle: standard Young tableaux --------------------------

long count_syt_backtracking(const Partition& lambda) {
    long n = lambda.weight();
    if (n == 0) return 1;
    std::vector<long> fill(static_cast<size_t>(lambda.length()), 0);  // cells used per row
    std::function<long(long)> place = [&](long next) -> long {
        if (next > n) return 1;
        long total = 0;
        for (long r = 0; r < lambda.length(); ++r) {
            bool row_ok = fill[static_cast<size_t>(r)] < lambda.part(r + 1);
            bool col_ok = r == 0 || fill[static_cast<size_t>(r - 1)] > fill[static_cast<size_t>(r)];
            if (row_ok && col_ok) {
                ++fill[static_cast<size_t>(r)];
                total += place(next + 1);
                --fill[static_cast<size_t>(r)];
            }
        }
        return total;
    };
    return place(1);
}

// Corner-removal recursion d(lambda) = sum over removable corners, memoized;
// independent of hooklengths.
mpz_class count_syt_corners(const std::vector<long>& parts,
                            std::map<std::vector<long>, mpz_class>& memo) {
    if (parts.empty()) return 1;
    auto it = memo.find(parts);
    if (it != memo.end()) return it->second;
    mpz_class total = 0;
    for (size_t r = 0; r < parts.size(); ++r) {
        bool removable = (r + 1 == parts.size()) || parts[r] > parts[r + 1];
        if (!removable) continue;
        std::vector<long> next = parts;
        if (--next[r] == 0) next.pop_back();
        total += count_syt_corners(next, memo);
    }
    memo[parts] = total;
    return total;
}

void generate_partitions_rec(long remaining, long max_part, std::vector<long>& cur,
                             std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (long p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        generate_partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_of_weight_up_to(long n) {
    std::vector<Partition> out;
    std::vector<long> cur;
    for (long w = 0; w <= n; ++w) generate_partitions_rec(w, w, cur, out);
    return out;
}

// ---- tests ----------------------------------------------------------------

TEST_CASE("maya from index set: worked examples") {
    MayaDiagram m = MayaDiagram::from_index_set(IndexSet{2, 3});
    CHECK(m.partition() == Partition({2, 2}));
    CHECK(m.sigma() == 2);
    CHECK(m.index_set() == IndexSet{2, 3});

    MayaDiagram trivial = MayaDiagram::from_index_set(IndexSet{});
    CHECK(trivial.partition() == Partition());
    CHECK(trivial.sigma() == 0);

    MayaDiagram fig2 = MayaDiagram::from_index_set(IndexSet{4, 3, 1, -1, -4, -5});
    CHECK(fig2.partition() == Partition({5, 5, 4, 2, 2}));
    CHECK(fig2.index_set() == IndexSet{-5, -4, -1, 1, 3, 4});
}

TEST_CASE("canonical form and membership") {
    MayaDiagram m = MayaDiagram::from_index_set(IndexSet{2, 3});
    CHECK(m.contains(2));
    CHECK(m.contains(3));
    CHECK(m.contains(-1));
    CHECK(!m.contains(0));
    CHECK(!m.contains(1));
    CHECK(!m.contains(4));
    CHECK(m.first_empty() == 0);
    CHECK(m.last_filled() == 3);

    MayaDiagram shifted = MayaDiagram().shifted(5);
    CHECK(shifted.partition() == Partition());
    CHECK(shifted.sigma() == 5);
    CHECK(shifted.contains(4));
    CHECK(!shifted.contains(5));
}

TEST_CASE("round trip partition/sigma <-> diagram for |lambda| <= 10, sigma in [-5,5]") {
    for (const auto& lambda : partitions_of_weight_up_to(10)) {
        for (long sigma = -5; sigma <= 5; ++sigma) {
            MayaDiagram m = MayaDiagram::from_partition(lambda, sigma);
            MayaDiagram rebuilt = MayaDiagram::from_membership(
                [&](long p) { return m.contains(p); }, m.first_empty() - 1, m.last_filled() + 1);
            CHECK(rebuilt == m);
            // canonical data also round-trips through the index set
            CHECK(MayaDiagram::from_index_set(m.index_set()) == m);
        }
    }
}

TEST_CASE("translation shifts sigma and preserves the partition") {
    std::mt19937_64 rng(77);
    auto all = partitions_of_weight_up_to(8);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    for (int i = 0; i < 60; ++i) {
        Partition lambda = all[pick(rng)];
        MayaDiagram m = MayaDiagram::from_partition(lambda, 1);
        for (long n = -4; n <= 4; ++n) {
            CHECK(m.shifted(n).partition() == lambda);
            CHECK(m.shifted(n).sigma() == m.sigma() + n);
        }
    }
}

TEST_CASE("multi_flip: worked examples and involution against the toggle oracle") {
    CHECK(multi_flip(MayaDiagram(), IndexSet{2, 3}) == MayaDiagram::from_index_set(IndexSet{2, 3}));
    MayaDiagram m = MayaDiagram::from_index_set(IndexSet{2, 3});
    CHECK(multi_flip(m, IndexSet{}) == m);

    std::mt19937_64 rng(4321);
    std::uniform_int_distribution<long> pos(-6, 8);
    std::uniform_int_distribution<int> size(0, 4);
    auto all = partitions_of_weight_up_to(6);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    std::uniform_int_distribution<long> sig(-3, 3);
    for (int i = 0; i < 100; ++i) {
        MayaDiagram start = MayaDiagram::from_partition(all[pick(rng)], sig(rng));
        std::vector<long> flips;
        for (int j = size(rng); j > 0; --j) flips.push_back(pos(rng));
        IndexSet k(flips);
        MayaDiagram once = multi_flip(start, k);
        // oracle: membership toggles exactly at K
        WindowModel expect = model_of(start);
        for (long f : k.elems()) expect.flip(f);
        WindowModel got = model_of(once);
        CHECK(got.filled == expect.filled);
        CHECK(got.sigma() == once.sigma());
        CHECK(expect.lambda() == once.partition().parts());
        // involution
        CHECK(multi_flip(once, k) == start);
        // edge identity
        CHECK(symmetric_difference(start, once) == k);
    }
}

TEST_CASE("symmetric difference: worked examples") {
    MayaDiagram m = MayaDiagram::from_index_set(IndexSet{2, 3});
    CHECK(symmetric_difference(m.shifted(4), m) == IndexSet{0, 1, 6, 7});
    CHECK(symmetric_difference(m, m) == IndexSet{});
    // oracle comparison on the window for M+3 vs M
    WindowModel a = model_of(m.shifted(3));
    WindowModel b = model_of(m);
    CHECK(symmetric_difference(m.shifted(3), m).elems() == a.difference_against(b));
    CHECK(symmetric_difference(m.shifted(3), m) == IndexSet{0, 1, 2, 5, 6});
}

TEST_CASE("d_lambda equals the SYT count") {
    CHECK(d_lambda(Partition({2, 2})) == count_syt_backtracking(Partition({2, 2})));
    CHECK(d_lambda(Partition({2, 2})) == 2);
    CHECK(d_lambda(Partition({1})) == 1);
    CHECK(d_lambda(Partition()) == 1);
    for (const auto& lambda : partitions_of_weight_up_to(10))
        CHECK(d_lambda(lambda) == count_syt_backtracking(lambda));
}

TEST_CASE("d_lambda for (5,5,4,2,2): hook grid and corner-recursion oracle") {
    Partition lambda({5, 5, 4, 2, 2});
    auto hooks = hook_lengths(lambda);
    // hooklength grid of the worked 18-cell diagram
    std::vector<std::vector<long>> expected = {
        {9, 8, 5, 4, 2}, {8, 7, 4, 3, 1}, {7, 6, 2, 1}, {3, 2}, {2, 1}};
    CHECK(hooks == expected);
    std::map<std::vector<long>, mpz_class> memo;
    CHECK(d_lambda(lambda) == count_syt_corners(lambda.parts(), memo));
}

TEST_CASE("hook/Maya product identity for |lambda| <= 12") {
    for (const auto& lambda : partitions_of_weight_up_to(12)) {
        mpz_class hooks = 1;
        for (const auto& row : hook_lengths(lambda))
            for (long h : row) hooks *= h;
        long l = lambda.length();
        std::vector<long> k(static_cast<size_t>(l));
        for (long i = 1; i <= l; ++i) k[static_cast<size_t>(i - 1)] = lambda.part(i) - i + l;
        Scalar rhs(1);
        for (long ki : k) rhs *= factorial(ki);
        for (long i = 0; i < l; ++i)
            for (long j = i + 1; j < l; ++j)
                rhs /= Scalar(k[static_cast<size_t>(i)] - k[static_cast<size_t>(j)]);
        CHECK(Scalar(hooks) == rhs);
    }
}

TEST_CASE("critical degrees: worked examples") {
    CriticalDegrees cd = critical_degrees(Partition({2, 2}), 10);
    CHECK(cd.q_c == 4);
    CHECK(cd.degrees == std::set<long>{4, 5, 6, 7, 8, 9, 10});

    CriticalDegrees trivial = critical_degrees(Partition(), 5);
    CHECK(trivial.q_c == 0);
    CHECK(trivial.degrees == std::set<long>{1, 2, 3, 4, 5});

    // direct subset test on the window as the oracle for (3,1)
    Partition lambda({3, 1});
    MayaDiagram m = MayaDiagram::from_partition(lambda, 0);
    CriticalDegrees cd31 = critical_degrees(lambda, 8);
    for (long q = 1; q <= 8; ++q) {
        bool subset = true;
        for (long p = m.first_empty() - q - 2; p <= m.last_filled(); ++p)
            if (m.contains(p) && !m.shifted(q).contains(p)) subset = false;
        CHECK(subset == (cd31.degrees.count(q) > 0));
    }
}

TEST_CASE("critical degrees: threshold and additive closure for |lambda| <= 8") {
    for (const auto& lambda : partitions_of_weight_up_to(8)) {
        CriticalDegrees cd = critical_degrees(lambda, 12);
        long qc = threshold_degree(lambda);
        CHECK(cd.q_c == qc);
        for (long q = qc; q <= 12; ++q) CHECK(cd.degrees.count(q) == 1);
        if (qc >= 2) CHECK(cd.degrees.count(qc - 1) == 0);
        for (long q1 : cd.degrees)
            for (long q2 : cd.degrees)
                if (q1 + q2 <= 12) CHECK(cd.degrees.count(q1 + q2) == 1);
    }
}

TEST_CASE("Krein-Adler regularity from filled-segment parity") {
    CHECK(krein_adler_regular(MayaDiagram::from_index_set(IndexSet{2, 3})));
    CHECK(!krein_adler_regular(MayaDiagram::from_index_set(IndexSet{2})));
    CHECK(krein_adler_regular(MayaDiagram()));
    CHECK(krein_adler_regular(MayaDiagram::from_index_set(IndexSet{0, 1, 4, 5})));
    CHECK(!krein_adler_regular(MayaDiagram::from_index_set(IndexSet{0, 1, 4})));
    // deleting one negative state leaves a gap of odd size
    CHECK(!krein_adler_regular(MayaDiagram::from_index_set(IndexSet{-2})));
    CHECK(krein_adler_regular(MayaDiagram::from_index_set(IndexSet{-1})));
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(Partition({3, 2, 0, 0}).length() == 2);
    CHECK_THROWS_AS(critical_degrees(Partition({2}), 0), std::domain_error);
}

}  // namespace
