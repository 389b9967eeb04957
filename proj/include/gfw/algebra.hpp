#ifndef GFW_ALGEBRA_HPP
#define GFW_ALGEBRA_HPP

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gfw/rational.hpp"

namespace gfw {

/// A named generator of a graded-commutative algebra. Parity is determined
/// by the degree: even generators are polynomial, odd ones are exterior.
struct GeneratorSpec {
    int id = 0;
    std::string name;
    int degree = 0;

    bool odd() const { return degree % 2 != 0; }
};

/// Canonical monomial: (generator id, exponent) pairs with ids strictly
/// ascending and all exponents positive. The empty monomial is the unit.
struct Monomial {
    std::vector<std::pair<int, int>> factors;

    bool is_unit() const { return factors.empty(); }
    int exponent_of(int id) const;
    int word_length() const;  // sum of exponents

    static Monomial unit() { return {}; }
    static Monomial gen(int id, int exp = 1) { return {{{id, exp}}}; }

    auto operator<=>(const Monomial&) const = default;
};

/// Sparse rational linear combination of monomials; zero coefficients are
/// never stored. Addition needs no algebra context, multiplication does.
struct Element {
    std::map<Monomial, Rat> terms;

    bool is_zero() const { return terms.empty(); }
    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    Element& operator*=(const Rat& c);

    static Element zero() { return {}; }
    static Element term(Monomial m, Rat c = 1);
    static Element unit(Rat c = 1) { return term(Monomial::unit(), std::move(c)); }
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator*(Element a, const Rat& c);
Element operator-(Element a);
bool operator==(const Element& a, const Element& b);

/// Kill rule: any monomial whose {gens}-part has weighted degree > bound is zero.
struct Truncation {
    std::vector<int> gens;  // sorted generator ids
    int bound = 0;
};

/// Rewrite gen^2 -> replacement, applied in normal form. Requires
/// 2*degree(gen) == degree(replacement) and both even. Canonical monomials
/// carry the rewrite generator with exponent at most 1.
struct SquareRewrite {
    int gen = 0;
    int replacement = 0;
};

struct SignedMonomial {
    int sign = 1;  // +1 or -1
    Monomial mono;
};

/// Free or truncated graded-commutative algebra over the rationals, with
/// canonical monomials and Koszul-sign multiplication. Immutable once built.
class AlgebraPresentation {
public:
    AlgebraPresentation() = default;  // the ground field

    int num_generators() const { return static_cast<int>(gens_.size()); }
    const GeneratorSpec& generator(int id) const { return gens_.at(static_cast<size_t>(id)); }
    const std::vector<GeneratorSpec>& generators() const { return gens_; }
    std::optional<int> find(std::string_view name) const;
    int id_of(std::string_view name) const;  // throws if absent

    const std::optional<Truncation>& truncation() const { return truncation_; }
    const std::optional<SquareRewrite>& rewrite() const { return rewrite_; }

    int degree_of(const Monomial& m) const;
    /// Degree if homogeneous (the unit/zero element has degree 0), nullopt if mixed.
    std::optional<int> homogeneous_degree(const Element& a) const;

    /// Canonical form of a product word (generator ids with multiplicity, any
    /// order). The sign counts transpositions of odd generators; nullopt when
    /// an odd generator repeats or the truncation fires.
    std::optional<SignedMonomial> normal_form(std::span<const int> word) const;
    /// Renormalizes an arbitrary exponent collection.
    Element normal_form(const Monomial& m) const;

    Element multiply(const Element& a, const Element& b) const;
    Element multiply(const Monomial& a, const Element& b) const;

    /// All canonical monomials of total degree k surviving truncation, in
    /// descending lexicographic order of exponent sequences. Degree 0 is {1}.
    std::vector<Monomial> basis_of_degree(int k) const;

    /// True when a comes before b in basis order (degree first, then the
    /// descending-lex order used by basis_of_degree).
    bool basis_less(const Monomial& a, const Monomial& b) const;

    std::string monomial_string(const Monomial& m) const;
    std::string element_string(const Element& a) const;

    friend AlgebraPresentation define_algebra(std::vector<GeneratorSpec> gens,
                                              std::optional<Truncation> truncation,
                                              std::optional<SquareRewrite> rewrite);

private:
    std::vector<GeneratorSpec> gens_;
    std::map<std::string, int, std::less<>> by_name_;
    std::optional<Truncation> truncation_;
    std::optional<SquareRewrite> rewrite_;

    bool truncated_to_zero(const Monomial& m) const;
};

/// Validates and builds a presentation. Throws std::invalid_argument on
/// duplicate names, nonpositive degrees, or an inconsistent truncation/rewrite.
AlgebraPresentation define_algebra(std::vector<GeneratorSpec> gens,
                                   std::optional<Truncation> truncation = {},
                                   std::optional<SquareRewrite> rewrite = {});

/// Tensor product as disjoint generator union; b's ids are shifted past a's.
/// At most one side may carry a truncation and at most one a rewrite. Name
/// clashes throw unless a rename prefix for b's clashing generators is given.
AlgebraPresentation adjoin(const AlgebraPresentation& a, const AlgebraPresentation& b,
                           std::string_view rename_prefix = {});

/// Degree-shifting operator defined on generators and extended by the signed
/// Leibniz rule; generators absent from `values` map to zero.
struct Derivation {
    int shift = 1;
    std::map<int, Element> values;
};

/// Validates that every value is homogeneous of degree (generator degree + shift).
Derivation extend_derivation(const AlgebraPresentation& alg, int shift,
                             std::map<int, Element> values);

Element apply_derivation(const AlgebraPresentation& alg, const Derivation& d, const Monomial& m);
Element apply_derivation(const AlgebraPresentation& alg, const Derivation& d, const Element& a);

/// Degree-0 algebra map defined on every source generator.
struct Morphism {
    AlgebraPresentation source;
    AlgebraPresentation target;
    std::map<int, Element> values;
};

/// Validates totality and degree preservation.
Morphism make_morphism(AlgebraPresentation source, AlgebraPresentation target,
                       std::map<int, Element> values);
Morphism identity_morphism(const AlgebraPresentation& alg);

Element apply_morphism(const Morphism& f, const Element& a);

/// Re-expresses an element in another presentation by matching generator
/// names; monomials are renormalized there (signs and truncation included).
Element transport(const AlgebraPresentation& from, const AlgebraPresentation& to,
                  const Element& a);

/// Parses the format produced by element_string: terms "coef*gen^e*gen..."
/// joined with + or -, e.g. "c2*h2 - p1*h2", "-1/2*e", "3", "0".
Element parse_element(const AlgebraPresentation& alg, std::string_view text);

}  // namespace gfw

#endif
