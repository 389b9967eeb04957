#include "gfw/models.hpp"

#include <algorithm>
#include <stdexcept>

namespace gfw {

namespace {

// Single generators of the rank-3 fiber model: x1..x4 in degree 7, x5 in 9,
// x6..x8 in 10, x9 in 11, x10..x13 in 12, x14 in 14, x15..x17 in 15.
constexpr int kXDeg[18] = {0, 7, 7, 7, 7, 9, 10, 10, 10, 11, 12, 12, 12, 12, 14, 15, 15, 15};

// Commutator-word generators of degree <= 15 (all single generators are odd,
// so only i < j occurs; degree |x_i| + |x_j| - 1).
constexpr std::pair<int, int> kPairs[10] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4},
                                            {3, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}};

std::string x_name(int i) { return "x" + std::to_string(i); }
std::string pair_name(int i, int j) {
    return "x" + std::to_string(i) + "_" + std::to_string(j);
}
std::string bar_of(const std::string& z_name) { return "xb" + z_name.substr(1); }

int pair_degree(int i, int j) { return kXDeg[i] + kXDeg[j] - 1; }

// Cohomology representatives in WU_3 for the fiber model generators.
const char* phi_value(int i) {
    switch (i) {
        case 1: return "c1*h3";
        case 2: return "c2*h2";
        case 3: return "c1^3*h1";
        case 4: return "c1*c2*h1";
        case 5: return "c2*h3";
        case 6: return "c2*h1*h3 - c1*h2*h3";
        case 7: return "c1^3*h1*h2";
        case 8: return "c1*c2*h1*h2";
        case 9: return "c3*h3";
        case 10: return "c2*h2*h3";
        case 11: return "c1^3*h1*h3";
        case 12: return "c1*c2*h1*h3";
        case 13: return "c3*h1*h3";
        case 14: return "c3*h2*h3";
        case 15: return "c1^3*h1*h2*h3";
        case 16: return "c1*c2*h1*h2*h3";
        case 17: return "c3*h1*h2*h3";
    }
    throw std::logic_error("phi_value: bad index");
}

// Differential of the B_3-relative model on single generators; zero for
// i = 1, 3, 4, 5, 9, 11, 12, 13.
const char* relative_d_single(int i) {
    switch (i) {
        case 2: return "-p1^2";
        case 6: return "-p1*x1";
        case 7: return "-p1*x3";
        case 8: return "-p1*x4";
        case 10: return "p1*x5";
        case 14: return "p1*x9";
        case 15: return "-p1*x11";
        case 16: return "-p1*x12";
        case 17: return "-p1*x13";
        default: return "0";
    }
}

// Differential on the commutator generators: the product word plus the
// p1-correction that makes the map to B_3 (x) WU_3 a chain map.
std::string relative_d_pair(int i, int j) {
    std::string base = x_name(i) + "*" + x_name(j);
    if (i == 1 && j == 2)
        return base + " + p1*x6";
    if (i == 2 && j == 3)
        return base + " - p1*x7";
    if (i == 2 && j == 4)
        return base + " - p1*x8";
    if (i == 2 && j == 5)
        return base + " + p1*x10";
    return base;
}

ModelBundle make_bundle(std::string name, AlgebraPresentation alg, Derivation d,
                        std::optional<int> cutoff, std::string notes) {
    ModelBundle bundle{std::move(name), DGA{std::move(alg), std::move(d), cutoff},
                       std::move(notes)};
    int top = 0;
    for (const GeneratorSpec& g : bundle.dga.alg.generators())
        top = std::max(top, g.degree);
    CheckReport sq = verify_d_squared(bundle.dga, top);
    if (!sq.ok())
        throw std::logic_error("model '" + bundle.name + "' fails d^2 = 0 on generator '" +
                               sq.failures.front().subject + "': " + sq.failures.front().detail);
    return bundle;
}

}  // namespace

ModelBundle build_WU(int d) {
    if (d < 1)
        throw std::invalid_argument("build_WU: d must be positive");
    std::vector<GeneratorSpec> gens;
    std::vector<int> trunc_ids;
    for (int i = 1; i <= d; ++i) {
        trunc_ids.push_back(static_cast<int>(gens.size()));
        gens.push_back({0, "c" + std::to_string(i), 2 * i});
    }
    for (int i = 1; i <= d; ++i)
        gens.push_back({0, "h" + std::to_string(i), 2 * i - 1});
    AlgebraPresentation alg =
        define_algebra(std::move(gens), Truncation{std::move(trunc_ids), 2 * d});
    std::map<int, Element> values;
    for (int i = 1; i <= d; ++i) {
        values[alg.id_of("h" + std::to_string(i))] =
            Element::term(Monomial::gen(alg.id_of("c" + std::to_string(i))));
        values[alg.id_of("c" + std::to_string(i))] = Element::zero();
    }
    Derivation diff = extend_derivation(alg, 1, std::move(values));
    return make_bundle("wu" + std::to_string(d), std::move(alg), std::move(diff), std::nullopt,
                       "Chern classes truncated above weighted degree " + std::to_string(2 * d) +
                           " with transgressive exterior generators");
}

AlgebraPresentation build_BSO(int d) {
    if (d < 2)
        throw std::invalid_argument("build_BSO: d must be at least 2");
    std::vector<GeneratorSpec> gens;
    const int m = d / 2;
    const int pontrjagin_count = (d % 2 != 0) ? m : m - 1;
    for (int i = 1; i <= pontrjagin_count; ++i)
        gens.push_back({0, "p" + std::to_string(i), 4 * i});
    if (d % 2 == 0)
        gens.push_back({0, "e", d});
    return define_algebra(std::move(gens));
}

ModelBundle build_A(int d) {
    if (d < 2)
        throw std::invalid_argument("build_A: d must be at least 2");
    AlgebraPresentation base = build_BSO(d + 1);
    if (d % 2 != 0) {
        AlgebraPresentation alg =
            adjoin(base, define_algebra({{0, "s", d}}));
        std::map<int, Element> values;
        values[alg.id_of("s")] = Element::term(Monomial::gen(alg.id_of("e")));
        Derivation diff = extend_derivation(alg, 1, std::move(values));
        return make_bundle("a" + std::to_string(d), std::move(alg), std::move(diff), std::nullopt,
                           "sphere quotient model, odd fiber dimension: ds = e");
    }
    std::vector<GeneratorSpec> gens = base.generators();
    const int e_id = static_cast<int>(gens.size());
    gens.push_back({0, "e", d});
    const int top_p = base.id_of("p" + std::to_string(d / 2));
    AlgebraPresentation alg =
        define_algebra(std::move(gens), std::nullopt, SquareRewrite{e_id, top_p});
    return make_bundle("a" + std::to_string(d), std::move(alg), Derivation{1, {}}, std::nullopt,
                       "sphere quotient model, even fiber dimension: e^2 = p_" +
                           std::to_string(d / 2));
}

ModelBundle build_FdSOd(int d) {
    if (d < 2)
        throw std::invalid_argument("build_FdSOd: d must be at least 2");
    AlgebraPresentation alg = adjoin(build_BSO(d), build_WU(d).dga.alg);
    std::map<int, Element> values;
    for (const GeneratorSpec& g : alg.generators())
        values[g.id] = Element::zero();
    for (int i = 1; i <= d; ++i) {
        Element v = Element::term(Monomial::gen(alg.id_of("c" + std::to_string(i))));
        if (i % 2 == 0) {
            // restriction of c_i is (-1)^{i/2} p_{i/2}; for even d the top
            // class p_{d/2} is the square of the Euler generator
            Element p;
            if (auto pid = alg.find("p" + std::to_string(i / 2)))
                p = Element::term(Monomial::gen(*pid));
            else
                p = Element::term(Monomial::gen(alg.id_of("e"), 2));
            if ((i / 2) % 2 == 0)
                v -= p;
            else
                v += p;
        }
        values[alg.id_of("h" + std::to_string(i))] = std::move(v);
    }
    Derivation diff = extend_derivation(alg, 1, std::move(values));
    return make_bundle("fdso" + std::to_string(d), std::move(alg), std::move(diff), std::nullopt,
                       "fiber model with twisted transgression over the rank-" +
                           std::to_string(d) + " special orthogonal classifying ring");
}

ModelBundle build_CE3() {
    std::vector<GeneratorSpec> gens;
    for (int i = 1; i <= 17; ++i)
        gens.push_back({0, x_name(i), kXDeg[i]});
    for (const auto& [i, j] : kPairs)
        gens.push_back({0, pair_name(i, j), pair_degree(i, j)});
    AlgebraPresentation alg = define_algebra(std::move(gens));
    std::map<int, Element> values;
    for (int i = 1; i <= 17; ++i)
        values[alg.id_of(x_name(i))] = Element::zero();
    for (const auto& [i, j] : kPairs)
        values[alg.id_of(pair_name(i, j))] =
            parse_element(alg, x_name(i) + "*" + x_name(j));
    Derivation diff = extend_derivation(alg, 1, std::move(values));
    return make_bundle("ce3", std::move(alg), std::move(diff), 15,
                       "cochains of the free Lie model of the rank-3 fiber, words of length <= 2");
}

Morphism phi_morphism() {
    AlgebraPresentation source = build_CE3().dga.alg;
    AlgebraPresentation target = build_WU(3).dga.alg;
    std::map<int, Element> values;
    for (int i = 1; i <= 17; ++i)
        values[source.id_of(x_name(i))] = parse_element(target, phi_value(i));
    for (const auto& [i, j] : kPairs)
        values[source.id_of(pair_name(i, j))] =
            (i == 1 && j == 2) ? parse_element(target, "-c2*h1*h2*h3") : Element::zero();
    return make_morphism(std::move(source), std::move(target), std::move(values));
}

ModelBundle build_relative_D() {
    AlgebraPresentation alg = adjoin(build_BSO(3), build_CE3().dga.alg);
    std::map<int, Element> values;
    values[alg.id_of("p1")] = Element::zero();
    for (int i = 1; i <= 17; ++i)
        values[alg.id_of(x_name(i))] = parse_element(alg, relative_d_single(i));
    for (const auto& [i, j] : kPairs)
        values[alg.id_of(pair_name(i, j))] = parse_element(alg, relative_d_pair(i, j));
    Derivation diff = extend_derivation(alg, 1, std::move(values));
    return make_bundle("relative_d", std::move(alg), std::move(diff), 15,
                       "rank-3 fiber model with p1-corrected differential over Q[p1]");
}

Morphism psi_morphism() {
    AlgebraPresentation source = build_relative_D().dga.alg;
    AlgebraPresentation target = build_FdSOd(3).dga.alg;
    std::map<int, Element> values;
    values[source.id_of("p1")] = Element::term(Monomial::gen(target.id_of("p1")));
    for (int i = 1; i <= 17; ++i)
        values[source.id_of(x_name(i))] =
            (i == 2) ? parse_element(target, "c2*h2 - p1*h2") : parse_element(target, phi_value(i));
    for (const auto& [i, j] : kPairs)
        values[source.id_of(pair_name(i, j))] =
            (i == 1 && j == 2) ? parse_element(target, "-c2*h1*h2*h3") : Element::zero();
    return make_morphism(std::move(source), std::move(target), std::move(values));
}

Derivation theta(const AlgebraPresentation& alg, int d, const std::map<int, int>& pairing) {
    if (d % 2 == 0)
        throw std::invalid_argument("theta: fiber dimension must be odd");
    std::map<int, Element> values;
    for (const auto& [z, bar] : pairing) {
        if (z < 0 || z >= alg.num_generators() || bar < 0 || bar >= alg.num_generators() ||
            alg.generator(bar).degree != alg.generator(z).degree - d)
            throw std::invalid_argument("theta: unpaired generator '" +
                                        (z >= 0 && z < alg.num_generators()
                                             ? alg.generator(z).name
                                             : std::to_string(z)) +
                                        "'");
        values[z] = Element::term(Monomial::gen(bar));
    }
    return extend_derivation(alg, -d, std::move(values));
}

std::map<int, int> bar_pairing_by_name(const AlgebraPresentation& alg) {
    std::map<int, int> pairing;
    for (const GeneratorSpec& g : alg.generators()) {
        if (g.name.size() > 1 && g.name[0] == 'x' && g.name[1] != 'b') {
            if (auto bar = alg.find("xb" + g.name.substr(1)))
                pairing[g.id] = *bar;
        }
    }
    return pairing;
}

namespace detail {

ModelBundle build_gamma_raw(int k_max, int theta_sign, bool validate) {
    if (k_max > 12)
        throw std::domain_error(
            "gamma model: the differential table only supports degrees <= 12");
    if (k_max < 0)
        throw std::invalid_argument("gamma model: negative degree bound");

    // Inventory audit: with single generators in degrees 7..15 and commutator
    // words of length L starting in degree 7L - (L-1), every generator of the
    // full model in degree <= 13 (bars: <= 12) comes from the tabulated z's.
    {
        std::vector<int> z_degrees;
        for (int i = 1; i <= 17; ++i)
            z_degrees.push_back(kXDeg[i]);
        for (int i = 1; i <= 17; ++i)
            for (int j = i; j <= 17; ++j) {
                if (i == j && kXDeg[i] % 2 != 0)
                    continue;  // odd squares vanish
                z_degrees.push_back(pair_degree(i, j));
            }
        const int first_triple = 3 * 7 - 2;
        int omitted_z = first_triple, omitted_bar = first_triple - 3;
        for (int deg : z_degrees) {
            const bool z_in_model = deg <= 13;
            const bool bar_in_model = deg - 3 <= 12;
            if (!z_in_model)
                omitted_z = std::min(omitted_z, deg);
            if (!bar_in_model)
                omitted_bar = std::min(omitted_bar, deg - 3);
        }
        if (omitted_z <= 13 || omitted_bar <= 12)
            throw std::logic_error("gamma model: generator inventory incomplete below cutoff");
    }

    std::vector<GeneratorSpec> gens;
    gens.push_back({0, "p1", 4});
    gens.push_back({0, "e", 4});
    std::vector<std::string> z_names;
    for (int i = 1; i <= 17; ++i)
        z_names.push_back(x_name(i));
    for (const auto& [i, j] : kPairs)
        z_names.push_back(pair_name(i, j));
    auto z_degree = [&](const std::string& z) {
        if (z.find('_') == std::string::npos)
            return kXDeg[std::stoi(z.substr(1))];
        const int i = std::stoi(z.substr(1, z.find('_') - 1));
        const int j = std::stoi(z.substr(z.find('_') + 1));
        return pair_degree(i, j);
    };
    for (const std::string& z : z_names)
        gens.push_back({0, bar_of(z), z_degree(z) - 3});
    for (const std::string& z : z_names)
        if (z_degree(z) <= 13)
            gens.push_back({0, z, z_degree(z)});
    AlgebraPresentation alg = define_algebra(std::move(gens));

    const ModelBundle rel_bundle = build_relative_D();
    const AlgebraPresentation& relative = rel_bundle.dga.alg;
    Derivation th = theta(alg, 3, bar_pairing_by_name(alg));

    std::map<int, Element> values;
    values[alg.id_of("p1")] = Element::zero();
    values[alg.id_of("e")] = Element::zero();
    const int e_id = alg.id_of("e");
    for (const std::string& z : z_names) {
        const Element d_rel = transport(
            relative, alg,
            rel_bundle.dga.d.values.at(relative.id_of(z)));
        if (z_degree(z) <= 13) {
            Element v = d_rel;
            std::vector<int> word = {e_id, alg.id_of(bar_of(z))};
            auto nf = alg.normal_form(word);
            v -= Element::term(nf->mono, nf->sign);
            values[alg.id_of(z)] = std::move(v);
        }
        values[alg.id_of(bar_of(z))] =
            apply_derivation(alg, th, d_rel) * Rat(-theta_sign);
    }
    Derivation diff = extend_derivation(alg, 1, std::move(values));
    DGA dga{std::move(alg), std::move(diff), k_max};
    if (validate) {
        CheckReport sq = verify_d_squared(dga, k_max + 1);
        if (!sq.ok())
            throw std::logic_error("gamma model fails d^2 = 0 on '" +
                                   sq.failures.front().subject + "'");
    }
    return ModelBundle{"gamma3", std::move(dga),
                       "section-space model for the 3-sphere over Q[p1, e]"};
}

}  // namespace detail

ModelBundle build_gamma(int k_max) { return detail::build_gamma_raw(k_max, +1, true); }

ModelBundle build_C1() {
    AlgebraPresentation alg = define_algebra(
        {{0, "p1", 4}, {0, "e", 4}, {0, "zb1", 4}, {0, "z1", 7}});
    std::map<int, Element> values;
    values[alg.id_of("z1")] = parse_element(alg, "p1^2 - e*zb1");
    Derivation diff = extend_derivation(alg, 1, std::move(values));
    return make_bundle("c1", std::move(alg), std::move(diff), 24,
                       "pure subcomplex generated by the bottom transgressive pair");
}

EvaluationModel ev_morphism() {
    const ModelBundle gamma = detail::build_gamma_raw(12, +1, false);
    const ModelBundle relative = build_relative_D();

    // target: the gamma model with the sphere generator s adjoined, d(s) = e
    std::vector<GeneratorSpec> tgens;
    tgens.push_back({0, "p1", 4});
    tgens.push_back({0, "e", 4});
    tgens.push_back({0, "s", 3});
    for (const GeneratorSpec& g : gamma.dga.alg.generators())
        if (g.name != "p1" && g.name != "e")
            tgens.push_back({0, g.name, g.degree});
    AlgebraPresentation target = define_algebra(std::move(tgens));
    std::map<int, Element> tvalues;
    tvalues[target.id_of("s")] = Element::term(Monomial::gen(target.id_of("e")));
    for (const GeneratorSpec& g : gamma.dga.alg.generators())
        tvalues[target.id_of(g.name)] =
            transport(gamma.dga.alg, target, gamma.dga.d.values.at(g.id));
    Derivation target_d = extend_derivation(target, 1, std::move(tvalues));

    // source: coefficients p1, e, s and the z generators with the relative differential
    std::vector<GeneratorSpec> sgens;
    sgens.push_back({0, "p1", 4});
    sgens.push_back({0, "e", 4});
    sgens.push_back({0, "s", 3});
    std::vector<std::string> zs;
    for (const GeneratorSpec& g : gamma.dga.alg.generators())
        if (g.name[0] == 'x' && g.name[1] != 'b') {
            sgens.push_back({0, g.name, g.degree});
            zs.push_back(g.name);
        }
    AlgebraPresentation source = define_algebra(std::move(sgens));
    std::map<int, Element> svalues;
    svalues[source.id_of("s")] = Element::term(Monomial::gen(source.id_of("e")));
    for (const std::string& z : zs)
        svalues[source.id_of(z)] =
            transport(relative.dga.alg, source,
                      relative.dga.d.values.at(relative.dga.alg.id_of(z)));
    Derivation source_d = extend_derivation(source, 1, std::move(svalues));

    std::map<int, Element> ev_values;
    ev_values[source.id_of("p1")] = Element::term(Monomial::gen(target.id_of("p1")));
    ev_values[source.id_of("e")] = Element::term(Monomial::gen(target.id_of("e")));
    ev_values[source.id_of("s")] = Element::term(Monomial::gen(target.id_of("s")));
    for (const std::string& z : zs)
        ev_values[source.id_of(z)] = parse_element(target, z + " + s*" + bar_of(z));
    Morphism ev = make_morphism(source, target, std::move(ev_values));
    return EvaluationModel{DGA{std::move(source), std::move(source_d), 13},
                           DGA{std::move(target), std::move(target_d), 12}, std::move(ev)};
}

std::pair<Element, Element> even_splitting(const AlgebraPresentation& alg, int d,
                                           const Element& a) {
    if (d % 2 != 0)
        throw std::invalid_argument("even_splitting: fiber dimension must be even");
    const int e_id = alg.id_of("e");
    Element part_1, part_e;
    for (const auto& [m, c] : a.terms) {
        const int exp = m.exponent_of(e_id);
        if (exp == 0) {
            part_1 += Element::term(m, c);
            continue;
        }
        if (exp > 1)
            throw std::invalid_argument("even_splitting: element not in normal form (e^2 present)");
        Monomial stripped = m;
        std::erase_if(stripped.factors, [&](const auto& f) { return f.first == e_id; });
        // e has even degree, so no sign is picked up by stripping it
        part_e += Element::term(std::move(stripped), c);
    }
    return {std::move(part_1), std::move(part_e)};
}

Morphism make_even_ev(const AlgebraPresentation& alg, const std::map<int, int>& pairing) {
    const int e_id = alg.id_of("e");
    std::map<int, Element> values;
    for (const GeneratorSpec& g : alg.generators())
        values[g.id] = Element::term(Monomial::gen(g.id));
    for (const auto& [z, bar] : pairing) {
        std::vector<int> word = {e_id, bar};
        auto nf = alg.normal_form(word);
        Element v = Element::term(Monomial::gen(z));
        if (nf)
            v += Element::term(nf->mono, nf->sign);
        values[z] = std::move(v);
    }
    return make_morphism(alg, alg, std::move(values));
}

}  // namespace gfw
