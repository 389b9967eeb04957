#ifndef GFW_MODELS_HPP
#define GFW_MODELS_HPP

#include <map>
#include <string>
#include <utility>

#include "gfw/cohomology.hpp"

namespace gfw {

/// A fully constructed model: presentation, differential, validity cutoff and
/// a short free-text description. Construction verifies d^2 = 0 on every
/// generator and throws otherwise.
struct ModelBundle {
    std::string name;
    DGA dga;
    std::string notes;

    int gen(std::string_view generator_name) const { return dga.alg.id_of(generator_name); }
    Element el(std::string_view text) const { return parse_element(dga.alg, text); }
};

/// Koszul-truncation model of the restricted universal bundle in complex rank
/// d: polynomial part c1..cd truncated above weighted degree 2d, exterior part
/// h1..hd with d(h_i) = c_i. Complete in every degree.
ModelBundle build_WU(int d);

/// Rational cohomology ring of BSO(d) as a free presentation with zero
/// differential: p1..pm for d = 2m+1; p1..p(m-1) and the Euler class e
/// (degree d) for d = 2m. Requires d >= 2.
AlgebraPresentation build_BSO(int d);

/// Model of the sphere's homotopy quotient over BSO(d+1). Odd d: adjoin s of
/// degree d with d(s) = e. Even d: adjoin e of degree d with the rewrite
/// e^2 -> p_{d/2} and zero differential.
ModelBundle build_A(int d);

/// B_d tensor WU_d with the twisted differential: d(h_i) = c_i for odd i and
/// c_i - (-1)^{i/2} p_{i/2} for even i (for d = 2m the top class p_m means e^2).
ModelBundle build_FdSOd(int d);

/// Cochain model of the free Lie model of the rank-3 fiber, as an explicit
/// table: exterior generators x1..x17 (degrees 7..15) and x{i}_{j} for the
/// commutator words of degree <= 15, with d(x{i}_{j}) = x_i x_j.
ModelBundle build_CE3();

/// Quasi-isomorphism from the rank-3 cochain model onto cohomology
/// representatives in WU_3 (x1 -> c1*h3 ... x17 -> c3*h1*h2*h3;
/// x1_2 -> -c2*h1*h2*h3, all other commutator generators -> 0).
Morphism phi_morphism();

/// The rank-3 cochain model with coefficients extended over B_3 = Q[p1] and
/// the p1-corrected differential table. Valid through degree 15.
ModelBundle build_relative_D();

/// Chain map from build_relative_D onto build_FdSOd(3): phi on every
/// generator except x2 -> c2*h2 - p1*h2.
Morphism psi_morphism();

/// B-linear derivation of shift -d sending each z to its bar partner and
/// every bar (and coefficient generator) to zero. `pairing` maps z id to bar
/// id; throws when d is even or some pair has the wrong degree gap.
Derivation theta(const AlgebraPresentation& alg, int d, const std::map<int, int>& pairing);

/// Section-space model for the 3-sphere over B_4 = Q[p1, e]: bar generators
/// xb* of degree <= 12 for every tabulated z, the z generators of degree
/// <= 13, and the differential derived from the relative model by
/// d(z) = D(z) - e*zb and d(zb) = -theta(D(z)). Betti numbers are valid
/// through degree 12; d^2 is checked on all generators (degrees <= 13).
ModelBundle build_gamma(int k_max = 12);

/// Pairs z generators with their bars by name ("x..." -> "xb...").
std::map<int, int> bar_pairing_by_name(const AlgebraPresentation& alg);

/// The pure subcomplex over B_4: polynomial zb1 (degree 4), exterior z1
/// (degree 7), d(z1) = p1^2 - e*zb1. Valid through degree 24.
ModelBundle build_C1();

struct EvaluationModel {
    DGA source;  // B_4 (x) s (x) the z generators, d(s) = e
    DGA target;  // B_4 (x) s (x) the full bar model
    Morphism ev;  // z -> z + s*zb, everything else identity
};

/// Model of the evaluation map for the 3-sphere; verify_chain_map on it
/// reproduces the bar-differential formulas.
EvaluationModel ev_morphism();

/// Splits a normal-form element of an even-d model as a = part_1 + e*part_e
/// by the exponent of the degree-d Euler generator `e`. Throws when d is odd.
std::pair<Element, Element> even_splitting(const AlgebraPresentation& alg, int d,
                                           const Element& a);

/// Evaluation model for even d on an algebra containing e and paired z/zb
/// generators: z -> z + e*zb, everything else identity. Feeding D(z) through
/// this map and splitting with even_splitting yields the two components of
/// the bar differential.
Morphism make_even_ev(const AlgebraPresentation& alg, const std::map<int, int>& pairing);

namespace detail {
/// Test hook: gamma model with the bar differential scaled by theta_sign;
/// validate=false skips the d^2 construction check.
ModelBundle build_gamma_raw(int k_max, int theta_sign, bool validate);
}  // namespace detail

}  // namespace gfw

#endif
