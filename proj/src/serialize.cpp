#include "gfw/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace gfw {

Json element_json(const AlgebraPresentation& alg, const Element& a) {
    std::vector<const Monomial*> order;
    order.reserve(a.terms.size());
    for (const auto& [m, c] : a.terms)
        order.push_back(&m);
    std::sort(order.begin(), order.end(),
              [&](const Monomial* x, const Monomial* y) { return alg.basis_less(*x, *y); });
    Json terms = Json::array();
    for (const Monomial* m : order) {
        Json exps = Json::object();
        for (const auto& [id, exp] : m->factors)
            exps[alg.generator(id).name] = exp;
        terms.push_back({{"coeff", rat_string(a.terms.at(*m))}, {"exponents", std::move(exps)}});
    }
    return terms;
}

Json presentation_json(const AlgebraPresentation& alg) {
    Json gens = Json::array();
    for (const GeneratorSpec& g : alg.generators())
        gens.push_back({{"name", g.name}, {"degree", g.degree}});
    Json out;
    out["generators"] = std::move(gens);
    if (alg.truncation()) {
        Json names = Json::array();
        for (int id : alg.truncation()->gens)
            names.push_back(alg.generator(id).name);
        out["truncation"] = {{"generators", std::move(names)}, {"bound", alg.truncation()->bound}};
    }
    if (alg.rewrite())
        out["rewrite"] = {{"generator", alg.generator(alg.rewrite()->gen).name},
                          {"replacement", alg.generator(alg.rewrite()->replacement).name}};
    return out;
}

Json betti_json(const BettiTable& table) {
    Json betti = Json::object();
    for (const auto& [k, dim] : table.dims)
        if (dim != 0)
            betti[std::to_string(k)] = dim;
    Json out;
    out["model"] = table.model;
    out["max_degree"] = table.max_degree;
    out["betti"] = std::move(betti);
    return out;
}

std::string betti_csv(const BettiTable& table) {
    std::ostringstream out;
    out << "degree,dim\n";
    for (int k = 0; k <= table.max_degree; ++k)
        out << k << ',' << table.dim(k) << '\n';
    return out.str();
}

Json min_gens_json(const WeightedRing& ring, const MinGenSet& gens) {
    Json out = Json::object();
    for (const auto& [deg, monos] : gens.by_degree) {
        Json list = Json::array();
        for (const ExpVec& m : monos)
            list.push_back(monomial_text(ring, m));
        out[std::to_string(deg)] = std::move(list);
    }
    return out;
}

std::string presentation_dump(const ModelBundle& bundle) {
    std::ostringstream out;
    const AlgebraPresentation& alg = bundle.dga.alg;
    out << "model " << bundle.name << "\n";
    if (!bundle.notes.empty())
        out << "  " << bundle.notes << "\n";
    if (bundle.dga.max_valid_degree)
        out << "  valid through degree " << *bundle.dga.max_valid_degree << "\n";
    if (alg.truncation()) {
        out << "  truncation: degree > " << alg.truncation()->bound << " in {";
        bool first = true;
        for (int id : alg.truncation()->gens) {
            out << (first ? "" : ", ") << alg.generator(id).name;
            first = false;
        }
        out << "} is zero\n";
    }
    if (alg.rewrite())
        out << "  rewrite: " << alg.generator(alg.rewrite()->gen).name << "^2 -> "
            << alg.generator(alg.rewrite()->replacement).name << "\n";
    for (const GeneratorSpec& g : alg.generators()) {
        out << "  " << g.name << "  degree " << g.degree;
        auto it = bundle.dga.d.values.find(g.id);
        if (it == bundle.dga.d.values.end() || it->second.is_zero())
            out << "  d -> 0";
        else
            out << "  d -> " << alg.element_string(it->second);
        out << "\n";
    }
    return out.str();
}

}  // namespace gfw
