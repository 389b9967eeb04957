#include "gfw/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gfw {

namespace {

// Descending-lex comparison of sparse exponent sequences (ids ascending,
// larger exponent at the first differing id comes first).
bool exp_lex_before(const Monomial& a, const Monomial& b) {
    auto ia = a.factors.begin(), ib = b.factors.begin();
    while (ia != a.factors.end() && ib != b.factors.end()) {
        if (ia->first != ib->first)
            return ia->first < ib->first;  // the one with a lower id present has a larger exponent there
        if (ia->second != ib->second)
            return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    return ia != a.factors.end();  // a has extra trailing factors -> earlier
}

void append_word(std::vector<int>& word, const Monomial& m) {
    for (const auto& [id, exp] : m.factors)
        word.insert(word.end(), static_cast<size_t>(exp), id);
}

}  // namespace

int Monomial::exponent_of(int id) const {
    for (const auto& [g, e] : factors)
        if (g == id)
            return e;
    return 0;
}

int Monomial::word_length() const {
    int n = 0;
    for (const auto& [g, e] : factors)
        n += e;
    return n;
}

Element Element::term(Monomial m, Rat c) {
    Element out;
    if (c != 0)
        out.terms.emplace(std::move(m), std::move(c));
    return out;
}

Element& Element::operator+=(const Element& rhs) {
    for (const auto& [m, c] : rhs.terms) {
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
            continue;
        }
        it->second += c;
        if (it->second == 0)
            terms.erase(it);
    }
    return *this;
}

Element& Element::operator-=(const Element& rhs) {
    for (const auto& [m, c] : rhs.terms) {
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, -c);
            continue;
        }
        it->second -= c;
        if (it->second == 0)
            terms.erase(it);
    }
    return *this;
}

Element& Element::operator*=(const Rat& c) {
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [m, v] : terms)
        v *= c;
    return *this;
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator*(Element a, const Rat& c) { return a *= c; }
Element operator-(Element a) { return a *= Rat(-1); }
bool operator==(const Element& a, const Element& b) { return a.terms == b.terms; }

std::optional<int> AlgebraPresentation::find(std::string_view name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        return std::nullopt;
    return it->second;
}

int AlgebraPresentation::id_of(std::string_view name) const {
    auto id = find(name);
    if (!id)
        throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
    return *id;
}

int AlgebraPresentation::degree_of(const Monomial& m) const {
    int deg = 0;
    for (const auto& [id, exp] : m.factors)
        deg += generator(id).degree * exp;
    return deg;
}

std::optional<int> AlgebraPresentation::homogeneous_degree(const Element& a) const {
    if (a.is_zero())
        return 0;
    int deg = degree_of(a.terms.begin()->first);
    for (const auto& [m, c] : a.terms)
        if (degree_of(m) != deg)
            return std::nullopt;
    return deg;
}

bool AlgebraPresentation::truncated_to_zero(const Monomial& m) const {
    if (!truncation_)
        return false;
    int tdeg = 0;
    for (const auto& [id, exp] : m.factors)
        if (std::binary_search(truncation_->gens.begin(), truncation_->gens.end(), id))
            tdeg += generator(id).degree * exp;
    return tdeg > truncation_->bound;
}

std::optional<SignedMonomial> AlgebraPresentation::normal_form(std::span<const int> word) const {
    // Koszul sign: parity of the inversions among the odd-degree letters.
    int sign = 1;
    std::vector<int> odd;
    odd.reserve(word.size());
    for (int id : word) {
        if (id < 0 || id >= num_generators())
            throw std::invalid_argument("normal_form: generator id out of range");
        if (generator(id).odd())
            odd.push_back(id);
    }
    for (size_t i = 0; i < odd.size(); ++i)
        for (size_t j = i + 1; j < odd.size(); ++j)
            if (odd[i] > odd[j])
                sign = -sign;

    std::map<int, int> exps;
    for (int id : word)
        ++exps[id];
    for (const auto& [id, exp] : exps)
        if (generator(id).odd() && exp > 1)
            return std::nullopt;

    if (rewrite_) {
        auto it = exps.find(rewrite_->gen);
        if (it != exps.end() && it->second >= 2) {
            exps[rewrite_->replacement] += it->second / 2;
            it->second %= 2;
            if (it->second == 0)
                exps.erase(it);
        }
    }

    Monomial mono;
    mono.factors.assign(exps.begin(), exps.end());
    if (truncated_to_zero(mono))
        return std::nullopt;
    return SignedMonomial{sign, std::move(mono)};
}

Element AlgebraPresentation::normal_form(const Monomial& m) const {
    std::vector<int> word;
    append_word(word, m);
    auto nf = normal_form(word);
    if (!nf)
        return Element::zero();
    return Element::term(std::move(nf->mono), nf->sign);
}

Element AlgebraPresentation::multiply(const Element& a, const Element& b) const {
    Element out;
    std::vector<int> word;
    for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) {
            word.clear();
            append_word(word, ma);
            append_word(word, mb);
            auto nf = normal_form(word);
            if (!nf)
                continue;
            out += Element::term(std::move(nf->mono), Rat(nf->sign) * ca * cb);
        }
    }
    return out;
}

Element AlgebraPresentation::multiply(const Monomial& a, const Element& b) const {
    return multiply(Element::term(a), b);
}

std::vector<Monomial> AlgebraPresentation::basis_of_degree(int k) const {
    if (k < 0)
        throw std::invalid_argument("basis_of_degree: negative degree");
    std::vector<Monomial> out;
    std::vector<std::pair<int, int>> current;
    // Exponents chosen high-to-low at each id yields descending-lex order.
    auto rec = [&](auto&& self, int id, int remaining, int trunc_used) -> void {
        if (remaining == 0) {
            out.push_back(Monomial{current});
            return;
        }
        if (id >= num_generators())
            return;
        const GeneratorSpec& g = generator(id);
        int max_exp = remaining / g.degree;
        if (g.odd())
            max_exp = std::min(max_exp, 1);
        if (rewrite_ && rewrite_->gen == id)
            max_exp = std::min(max_exp, 1);
        const bool in_trunc =
            truncation_ && std::binary_search(truncation_->gens.begin(),
                                              truncation_->gens.end(), id);
        for (int e = max_exp; e >= 0; --e) {
            if (in_trunc && trunc_used + g.degree * e > truncation_->bound)
                continue;
            if (e > 0)
                current.emplace_back(id, e);
            self(self, id + 1, remaining - g.degree * e,
                 trunc_used + (in_trunc ? g.degree * e : 0));
            if (e > 0)
                current.pop_back();
        }
    };
    rec(rec, 0, k, 0);
    return out;
}

bool AlgebraPresentation::basis_less(const Monomial& a, const Monomial& b) const {
    const int da = degree_of(a), db = degree_of(b);
    if (da != db)
        return da < db;
    return exp_lex_before(a, b);
}

std::string AlgebraPresentation::monomial_string(const Monomial& m) const {
    if (m.is_unit())
        return "1";
    std::string out;
    for (const auto& [id, exp] : m.factors) {
        if (!out.empty())
            out += '*';
        out += generator(id).name;
        if (exp > 1)
            out += '^' + std::to_string(exp);
    }
    return out;
}

std::string AlgebraPresentation::element_string(const Element& a) const {
    if (a.is_zero())
        return "0";
    std::vector<const Monomial*> order;
    order.reserve(a.terms.size());
    for (const auto& [m, c] : a.terms)
        order.push_back(&m);
    std::sort(order.begin(), order.end(),
              [this](const Monomial* x, const Monomial* y) { return basis_less(*x, *y); });
    std::string out;
    for (const Monomial* m : order) {
        const Rat& c = a.terms.at(*m);
        const bool neg = c < 0;
        const Rat mag = neg ? Rat(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (mag != 1 || m->is_unit()) {
            out += rat_string(mag);
            if (!m->is_unit())
                out += '*';
        }
        if (!m->is_unit())
            out += monomial_string(*m);
    }
    return out;
}

AlgebraPresentation define_algebra(std::vector<GeneratorSpec> gens,
                                   std::optional<Truncation> truncation,
                                   std::optional<SquareRewrite> rewrite) {
    AlgebraPresentation alg;
    for (size_t i = 0; i < gens.size(); ++i) {
        gens[i].id = static_cast<int>(i);
        if (gens[i].degree <= 0)
            throw std::invalid_argument("generator '" + gens[i].name + "' must have positive degree");
        if (gens[i].name.empty())
            throw std::invalid_argument("generator names must be nonempty");
        if (!alg.by_name_.emplace(gens[i].name, static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate generator name '" + gens[i].name + "'");
    }
    alg.gens_ = std::move(gens);
    if (truncation) {
        std::sort(truncation->gens.begin(), truncation->gens.end());
        truncation->gens.erase(std::unique(truncation->gens.begin(), truncation->gens.end()),
                               truncation->gens.end());
        int max_deg = 0;
        for (int id : truncation->gens) {
            if (id < 0 || id >= alg.num_generators())
                throw std::invalid_argument("truncation references unknown generator");
            max_deg = std::max(max_deg, alg.generator(id).degree);
        }
        if (truncation->bound < max_deg)
            throw std::invalid_argument("truncation bound below a truncated generator's degree");
        alg.truncation_ = std::move(truncation);
    }
    if (rewrite) {
        if (rewrite->gen < 0 || rewrite->gen >= alg.num_generators() ||
            rewrite->replacement < 0 || rewrite->replacement >= alg.num_generators())
            throw std::invalid_argument("rewrite references unknown generator");
        const auto& g = alg.generator(rewrite->gen);
        const auto& r = alg.generator(rewrite->replacement);
        if (g.odd() || r.odd() || 2 * g.degree != r.degree)
            throw std::invalid_argument("square rewrite must replace an even square degree-consistently");
        alg.rewrite_ = *rewrite;
    }
    return alg;
}

AlgebraPresentation adjoin(const AlgebraPresentation& a, const AlgebraPresentation& b,
                           std::string_view rename_prefix) {
    std::vector<GeneratorSpec> gens = a.generators();
    const int offset = a.num_generators();
    for (const GeneratorSpec& g : b.generators()) {
        GeneratorSpec copy = g;
        copy.id += offset;
        if (a.find(copy.name)) {
            if (rename_prefix.empty())
                throw std::invalid_argument("adjoin: generator name clash '" + copy.name + "'");
            copy.name = std::string(rename_prefix) + copy.name;
        }
        gens.push_back(std::move(copy));
    }
    if (a.truncation() && b.truncation())
        throw std::invalid_argument("adjoin: both sides carry a truncation");
    if (a.rewrite() && b.rewrite())
        throw std::invalid_argument("adjoin: both sides carry a rewrite");
    std::optional<Truncation> trunc = a.truncation();
    if (b.truncation()) {
        trunc = b.truncation();
        for (int& id : trunc->gens)
            id += offset;
    }
    std::optional<SquareRewrite> rewrite = a.rewrite();
    if (b.rewrite())
        rewrite = SquareRewrite{b.rewrite()->gen + offset, b.rewrite()->replacement + offset};
    return define_algebra(std::move(gens), std::move(trunc), std::move(rewrite));
}

Derivation extend_derivation(const AlgebraPresentation& alg, int shift,
                             std::map<int, Element> values) {
    for (const auto& [id, value] : values) {
        if (id < 0 || id >= alg.num_generators())
            throw std::invalid_argument("derivation value for unknown generator");
        if (value.is_zero())
            continue;
        auto deg = alg.homogeneous_degree(value);
        if (!deg || *deg != alg.generator(id).degree + shift)
            throw std::invalid_argument("derivation value for '" + alg.generator(id).name +
                                        "' is not homogeneous of degree " +
                                        std::to_string(alg.generator(id).degree + shift));
    }
    return Derivation{shift, std::move(values)};
}

Element apply_derivation(const AlgebraPresentation& alg, const Derivation& d, const Monomial& m) {
    // delta(g1...gn) = sum_i (-1)^(shift * deg(g1...g_{i-1})) g1...delta(gi)...gn
    std::vector<int> word;
    append_word(word, m);
    Element out;
    const bool odd_shift = d.shift % 2 != 0;
    int prefix_deg = 0;
    for (size_t i = 0; i < word.size(); ++i) {
        const int g = word[i];
        auto it = d.values.find(g);
        if (it != d.values.end() && !it->second.is_zero()) {
            Monomial left, right;
            for (size_t j = 0; j < i; ++j) {
                if (!left.factors.empty() && left.factors.back().first == word[j])
                    ++left.factors.back().second;
                else
                    left.factors.emplace_back(word[j], 1);
            }
            for (size_t j = i + 1; j < word.size(); ++j) {
                if (!right.factors.empty() && right.factors.back().first == word[j])
                    ++right.factors.back().second;
                else
                    right.factors.emplace_back(word[j], 1);
            }
            Element piece = alg.multiply(left, it->second);
            piece = alg.multiply(piece, Element::term(right));
            if (odd_shift && prefix_deg % 2 != 0)
                out -= piece;
            else
                out += piece;
        }
        prefix_deg += alg.generator(g).degree;
    }
    return out;
}

Element apply_derivation(const AlgebraPresentation& alg, const Derivation& d, const Element& a) {
    Element out;
    for (const auto& [m, c] : a.terms) {
        Element piece = apply_derivation(alg, d, m);
        piece *= c;
        out += piece;
    }
    return out;
}

Morphism make_morphism(AlgebraPresentation source, AlgebraPresentation target,
                       std::map<int, Element> values) {
    for (const GeneratorSpec& g : source.generators()) {
        auto it = values.find(g.id);
        if (it == values.end())
            throw std::invalid_argument("morphism missing value for '" + g.name + "'");
        if (it->second.is_zero())
            continue;
        auto deg = target.homogeneous_degree(it->second);
        if (!deg || *deg != g.degree)
            throw std::invalid_argument("morphism value for '" + g.name +
                                        "' is not homogeneous of degree " + std::to_string(g.degree));
    }
    return Morphism{std::move(source), std::move(target), std::move(values)};
}

Morphism identity_morphism(const AlgebraPresentation& alg) {
    std::map<int, Element> values;
    for (const GeneratorSpec& g : alg.generators())
        values[g.id] = Element::term(Monomial::gen(g.id));
    return Morphism{alg, alg, std::move(values)};
}

Element apply_morphism(const Morphism& f, const Element& a) {
    Element out;
    for (const auto& [m, c] : a.terms) {
        Element piece = Element::unit();
        for (const auto& [id, exp] : m.factors) {
            const Element& v = f.values.at(id);
            for (int e = 0; e < exp; ++e)
                piece = f.target.multiply(piece, v);
        }
        piece *= c;
        out += piece;
    }
    return out;
}

Element transport(const AlgebraPresentation& from, const AlgebraPresentation& to,
                  const Element& a) {
    Element out;
    std::vector<int> word;
    for (const auto& [m, c] : a.terms) {
        word.clear();
        for (const auto& [id, exp] : m.factors) {
            const int mapped = to.id_of(from.generator(id).name);
            word.insert(word.end(), static_cast<size_t>(exp), mapped);
        }
        auto nf = to.normal_form(word);
        if (!nf)
            continue;
        out += Element::term(std::move(nf->mono), Rat(nf->sign) * c);
    }
    return out;
}

Element parse_element(const AlgebraPresentation& alg, std::string_view text) {
    Element out;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    skip_ws();
    if (pos == text.size())
        throw std::invalid_argument("empty element literal");
    bool first = true;
    while (pos < text.size()) {
        skip_ws();
        Rat sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-')
                sign = -1;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' between terms");
        }
        first = false;
        Rat coeff = 1;
        bool saw_factor = false;
        std::vector<std::pair<int, int>> factors;  // in written order, signs matter
        while (true) {
            skip_ws();
            if (pos >= text.size())
                break;
            const char ch = text[pos];
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                size_t end = pos;
                while (end < text.size() &&
                       (std::isdigit(static_cast<unsigned char>(text[end])) || text[end] == '/'))
                    ++end;
                coeff *= parse_rat(text.substr(pos, end - pos));
                pos = end;
                saw_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                size_t end = pos;
                while (end < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_'))
                    ++end;
                const int id = alg.id_of(text.substr(pos, end - pos));
                pos = end;
                int exp = 1;
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    size_t e_end = pos;
                    while (e_end < text.size() && std::isdigit(static_cast<unsigned char>(text[e_end])))
                        ++e_end;
                    if (e_end == pos)
                        throw std::invalid_argument("missing exponent");
                    exp = std::stoi(std::string(text.substr(pos, e_end - pos)));
                    pos = e_end;
                }
                factors.emplace_back(id, exp);
                saw_factor = true;
            } else {
                throw std::invalid_argument(std::string("unexpected character '") + ch + "'");
            }
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!saw_factor)
            throw std::invalid_argument("empty term");
        std::vector<int> word;
        for (const auto& [id, exp] : factors)
            word.insert(word.end(), static_cast<size_t>(exp), id);
        auto nf = alg.normal_form(word);
        if (nf)
            out += Element::term(std::move(nf->mono), sign * coeff * nf->sign);
    }
    return out;
}

}  // namespace gfw
