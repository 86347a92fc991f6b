#include "rexosc/ladder.hpp"

namespace rexosc {

Intertwiner intertwiner(const MayaDiagram& m, const IndexSet& k) {
    if (k.size() > 12) throw std::domain_error("intertwiner: flip set larger than desk scale");
    Intertwiner out;
    out.source = m;
    out.flips = k;
    out.target = multi_flip(m, k);
    if (k.empty()) {
        out.op = DiffOperator::identity();
        return out;
    }
    RationalExtension ext = RationalExtension::build(m);
    std::vector<QuasiRational> fs;
    fs.reserve(static_cast<size_t>(k.size()));
    for (long level : k.elems()) fs.push_back(eigenfunction(ext, level));
    out.op = kernel_operator(fs);
    return out;
}

IndexSet ladder_index_set(const MayaDiagram& m, long n) {
    return symmetric_difference(m.shifted(n), m);
}

Intertwiner ladder_operator(const MayaDiagram& m, long n) {
    if (n == 0) throw std::domain_error("ladder_operator: n must be nonzero");
    Intertwiner out = intertwiner(m, ladder_index_set(m, n));
    if (out.target != m.shifted(n)) throw std::logic_error("ladder_operator: target is not M+n");
    return out;
}

Poly gamma_polynomial(const MayaDiagram& m, long q) {
    if (q < 1) throw std::domain_error("gamma_polynomial: q must be positive");
    if (!is_q_core(m, q)) throw std::domain_error("gamma_polynomial: diagram is not a q-core");
    MayaDiagram shifted = m.shifted(q);
    std::vector<Scalar> roots;
    for (long p = m.first_empty(); p <= shifted.last_filled(); ++p)
        if (shifted.contains(p) && !m.contains(p)) roots.push_back(Scalar(p));
    if (static_cast<long>(roots.size()) != q)
        throw std::logic_error("gamma_polynomial: expected q roots");
    return Poly::from_roots(roots);
}

Scalar ladder_coefficient(const MayaDiagram& m, long n, long k) {
    if (m.contains(k)) throw std::domain_error("ladder_coefficient: k must lie outside M");
    Intertwiner ladder = ladder_operator(m, n);
    RationalExtension ext = RationalExtension::build(m);
    QuasiRational image = ladder.op.apply(eigenfunction(ext, k));
    if (m.contains(k - n)) {
        if (!image.is_zero())
            throw std::logic_error("ladder_coefficient: image of a state lowered into M is nonzero");
        return Scalar(0);
    }
    return QuasiRational::constant_ratio(image, eigenfunction(ext, k - n));
}

}  // namespace rexosc
