#include "rexosc/json_io.hpp"

namespace rexosc {

json to_json(const Partition& p) {
    json j = json::array();
    for (long part : p.parts()) j.push_back(part);
    return j;
}

json to_json(const IndexSet& k) {
    json j = json::array();
    for (long e : k.elems()) j.push_back(e);
    return j;
}

json to_json(const MayaDiagram& m) {
    return json{{"partition", to_json(m.partition())}, {"sigma", m.sigma()}};
}

json to_json(const Poly& p) {
    json j = json::array();
    for (const auto& c : p.coeffs()) j.push_back(c.str());
    return j;
}

json to_json(const RationalFunction& f) {
    return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}, {"pretty", f.str()}};
}

json to_json(const QuasiRational& f) {
    return json{{"num", to_json(f.rat().num())},
                {"den", to_json(f.rat().den())},
                {"gauss", f.gauss()},
                {"pretty", f.str()}};
}

json to_json(const MultiPoly& p) {
    json j = json::array();
    for (const auto& [e, c] : p.terms()) {
        json term;
        term["exponents"] = e;
        term["coefficient"] = c.str();
        j.push_back(term);
    }
    return j;
}

json to_json(const DiffOperator& d) {
    json j = json::array();
    for (long k = 0; k <= d.order(); ++k) j.push_back(to_json(d.coeff(k)));
    return j;
}

json to_json(const Intertwiner& a) {
    return json{{"source", to_json(a.source)},
                {"flips", to_json(a.flips)},
                {"target", to_json(a.target)},
                {"order", a.op.order()},
                {"coefficients", to_json(a.op)},
                {"pretty", a.op.str()}};
}

Partition partition_from_json(const json& j) {
    std::vector<long> parts;
    for (const auto& v : j) parts.push_back(v.get<long>());
    return Partition(std::move(parts));
}

Poly poly_from_json(const json& j) {
    std::vector<Scalar> c;
    for (const auto& v : j) c.push_back(Scalar::from_string(v.get<std::string>()));
    return Poly(std::move(c));
}

}  // namespace rexosc
