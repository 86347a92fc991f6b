#pragma once

#include <functional>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "rexosc/scalar.hpp"

namespace rexosc {

// Non-increasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long> parts);

    const std::vector<long>& parts() const { return parts_; }
    long length() const { return static_cast<long>(parts_.size()); }
    long weight() const;
    bool empty() const { return parts_.empty(); }
    // 1-based part access; zero beyond the length.
    long part(long i) const;
    Partition conjugate() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Partition& p);

private:
    std::vector<long> parts_;
};

// Finite set of integers, kept sorted increasing.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::initializer_list<long> elems);
    explicit IndexSet(std::vector<long> elems);

    const std::vector<long>& elems() const { return elems_; }
    long size() const { return static_cast<long>(elems_.size()); }
    bool empty() const { return elems_.empty(); }
    bool contains(long k) const;

    friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.elems_ == b.elems_; }
    friend bool operator!=(const IndexSet& a, const IndexSet& b) { return !(a == b); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const IndexSet& k);

private:
    std::vector<long> elems_;
};

IndexSet sym_diff(const IndexSet& a, const IndexSet& b);

// A Maya diagram: a subset of Z with finite non-negative part and finite
// negative complement.  Stored canonically as (partition, sigma) with
// M = M^(lambda) + sigma, which makes translation structural.
class MayaDiagram {
public:
    // The trivial diagram Z_- (all negative integers).
    MayaDiagram() = default;
    static MayaDiagram from_partition(Partition lambda, long sigma);
    static MayaDiagram from_index_set(const IndexSet& k);
    // Canonicalizes an arbitrary membership predicate: every position < lo is
    // filled and every position > hi is empty.
    static MayaDiagram from_membership(const std::function<bool(long)>& contains, long lo, long hi);

    const Partition& partition() const { return lambda_; }
    long sigma() const { return sigma_; }
    bool contains(long m) const;
    // M + n.
    MayaDiagram shifted(long n) const { return from_partition(lambda_, sigma_ + n); }
    // Unique K with f_K(Z_-) = M.
    IndexSet index_set() const;
    // Smallest empty position, sigma - length.
    long first_empty() const { return sigma_ - lambda_.length(); }
    // Largest filled position, sigma + lambda_1 - 1 (sigma - 1 when trivial).
    long last_filled() const { return sigma_ + lambda_.part(1) - 1; }
    // First `count` elements of the decreasing enumeration m_1 > m_2 > ...
    std::vector<long> decreasing_members(long count) const;

    friend bool operator==(const MayaDiagram& a, const MayaDiagram& b) {
        return a.sigma_ == b.sigma_ && a.lambda_ == b.lambda_;
    }
    friend bool operator!=(const MayaDiagram& a, const MayaDiagram& b) { return !(a == b); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const MayaDiagram& m);

private:
    Partition lambda_;
    long sigma_ = 0;
};

// Toggles membership at every position of K; an involution.
MayaDiagram multi_flip(const MayaDiagram& m, const IndexSet& k);
// The unique K with f_K(M1) = M2 (and f_K(M2) = M1).
IndexSet symmetric_difference(const MayaDiagram& m1, const MayaDiagram& m2);

// Hooklength grid of the Young diagram, rows of lambda.
std::vector<std::vector<long>> hook_lengths(const Partition& lambda);
// Number of standard Young tableaux, N! / prod(hooks).
mpz_class d_lambda(const Partition& lambda);

// Whether M is contained in M + q (a q-core).
bool is_q_core(const MayaDiagram& m, long q);
// Threshold critical degree lambda_1 + length.
long threshold_degree(const Partition& lambda);

struct CriticalDegrees {
    std::set<long> degrees;  // q in [1, q_max] with M^(lambda) subset of M^(lambda)+q
    long q_c = 0;
};
CriticalDegrees critical_degrees(const Partition& lambda, long q_max);

// True iff every maximal finite run of filled states has even length
// (equivalently, H_M has no real zeros).
bool krein_adler_regular(const MayaDiagram& m);

}  // namespace rexosc
