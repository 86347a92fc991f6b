#include "rexosc/combinatorics.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace rexosc {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be non-increasing");
    }
}

long Partition::weight() const {
    long n = 0;
    for (long p : parts_) n += p;
    return n;
}

long Partition::part(long i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[static_cast<size_t>(i - 1)];
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<long> conj(static_cast<size_t>(parts_[0]), 0);
    for (long p : parts_)
        for (long j = 0; j < p; ++j) ++conj[static_cast<size_t>(j)];
    return Partition(std::move(conj));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

IndexSet::IndexSet(std::initializer_list<long> elems) : IndexSet(std::vector<long>(elems)) {}

IndexSet::IndexSet(std::vector<long> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool IndexSet::contains(long k) const {
    return std::binary_search(elems_.begin(), elems_.end(), k);
}

std::string IndexSet::str() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < elems_.size(); ++i) {
        if (i) os << ",";
        os << elems_[i];
    }
    os << "}";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IndexSet& k) { return os << k.str(); }

IndexSet sym_diff(const IndexSet& a, const IndexSet& b) {
    std::vector<long> out;
    std::set_symmetric_difference(a.elems().begin(), a.elems().end(), b.elems().begin(),
                                  b.elems().end(), std::back_inserter(out));
    return IndexSet(std::move(out));
}

MayaDiagram MayaDiagram::from_partition(Partition lambda, long sigma) {
    MayaDiagram m;
    m.lambda_ = std::move(lambda);
    m.sigma_ = sigma;
    return m;
}

MayaDiagram MayaDiagram::from_membership(const std::function<bool(long)>& contains, long lo,
                                         long hi) {
    lo = std::min(lo, -1L);
    hi = std::max(hi, 0L);
    long sigma = 0;
    for (long p = 0; p <= hi; ++p)
        if (contains(p)) ++sigma;
    for (long p = lo; p < 0; ++p)
        if (!contains(p)) --sigma;
    // Decreasing member enumeration m_1 > m_2 > ...; lambda_i = m_i + i - sigma
    // is non-increasing and reaches zero no later than position lo-1.
    std::vector<long> parts;
    long i = 0;
    for (long p = hi; p >= lo - 1; --p) {
        bool member = (p < lo) ? true : contains(p);
        if (!member) continue;
        ++i;
        long lam = p + i - sigma;
        if (lam < 0) throw std::logic_error("MayaDiagram: membership window inconsistent");
        if (lam == 0) break;
        parts.push_back(lam);
    }
    return from_partition(Partition(std::move(parts)), sigma);
}

MayaDiagram MayaDiagram::from_index_set(const IndexSet& k) {
    long lo = 0, hi = -1;
    if (!k.empty()) {
        lo = std::min(lo, k.elems().front());
        hi = std::max(hi, k.elems().back());
    }
    return from_membership([&](long m) { return (m < 0) != k.contains(m); }, lo - 1, hi + 1);
}

bool MayaDiagram::contains(long m) const {
    long rel = m - sigma_;
    if (rel < -lambda_.length()) return true;
    // m = lambda_i - i + sigma for some 1 <= i <= length
    for (long i = 1; i <= lambda_.length(); ++i)
        if (lambda_.part(i) - i == rel) return true;
    return false;
}

IndexSet MayaDiagram::index_set() const {
    std::vector<long> out;
    for (long p = 0; p <= last_filled(); ++p)
        if (contains(p)) out.push_back(p);
    for (long p = std::min(first_empty(), 0L); p < 0; ++p)
        if (!contains(p)) out.push_back(p);
    return IndexSet(std::move(out));
}

std::vector<long> MayaDiagram::decreasing_members(long count) const {
    std::vector<long> out;
    out.reserve(static_cast<size_t>(count));
    for (long i = 1; static_cast<long>(out.size()) < count; ++i)
        out.push_back(lambda_.part(i) - i + sigma_);
    return out;
}

std::string MayaDiagram::str() const {
    std::ostringstream os;
    os << "Maya(lambda=" << lambda_.str() << ", sigma=" << sigma_ << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MayaDiagram& m) { return os << m.str(); }

MayaDiagram multi_flip(const MayaDiagram& m, const IndexSet& k) {
    long lo = m.first_empty() - 1;
    long hi = m.last_filled() + 1;
    if (!k.empty()) {
        lo = std::min(lo, k.elems().front() - 1);
        hi = std::max(hi, k.elems().back() + 1);
    }
    return MayaDiagram::from_membership([&](long p) { return m.contains(p) != k.contains(p); }, lo,
                                        hi);
}

IndexSet symmetric_difference(const MayaDiagram& m1, const MayaDiagram& m2) {
    long lo = std::min(m1.first_empty(), m2.first_empty()) - 1;
    long hi = std::max(m1.last_filled(), m2.last_filled()) + 1;
    std::vector<long> out;
    for (long p = lo; p <= hi; ++p)
        if (m1.contains(p) != m2.contains(p)) out.push_back(p);
    return IndexSet(std::move(out));
}

std::vector<std::vector<long>> hook_lengths(const Partition& lambda) {
    Partition conj = lambda.conjugate();
    std::vector<std::vector<long>> grid(static_cast<size_t>(lambda.length()));
    for (long i = 1; i <= lambda.length(); ++i) {
        grid[static_cast<size_t>(i - 1)].resize(static_cast<size_t>(lambda.part(i)));
        for (long j = 1; j <= lambda.part(i); ++j) {
            long arm = lambda.part(i) - j;
            long leg = conj.part(j) - i;
            grid[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = arm + leg + 1;
        }
    }
    return grid;
}

mpz_class d_lambda(const Partition& lambda) {
    mpz_class hooks = 1;
    for (const auto& row : hook_lengths(lambda))
        for (long h : row) hooks *= h;
    mpz_class num = factorial_z(lambda.weight());
    mpz_class d = num / hooks;
    if (d * hooks != num) throw std::logic_error("d_lambda: hook product does not divide N!");
    return d;
}

bool is_q_core(const MayaDiagram& m, long q) {
    if (q < 1) throw std::domain_error("is_q_core: q must be positive");
    // Only the members above the solid tail need the m-q membership check.
    for (long member : m.decreasing_members(m.partition().length()))
        if (!m.contains(member - q)) return false;
    return true;
}

long threshold_degree(const Partition& lambda) { return lambda.part(1) + lambda.length(); }

CriticalDegrees critical_degrees(const Partition& lambda, long q_max) {
    if (q_max < 1) throw std::domain_error("critical_degrees: q_max must be >= 1");
    CriticalDegrees out;
    out.q_c = threshold_degree(lambda);
    MayaDiagram m = MayaDiagram::from_partition(lambda, 0);
    for (long q = 1; q <= q_max; ++q)
        if (is_q_core(m, q)) out.degrees.insert(q);
    return out;
}

bool krein_adler_regular(const MayaDiagram& m) {
    long run = 0;
    for (long p = m.first_empty(); p <= m.last_filled() + 1; ++p) {
        if (m.contains(p)) {
            ++run;
        } else {
            if (run % 2 != 0) return false;
            run = 0;
        }
    }
    return true;
}

}  // namespace rexosc
