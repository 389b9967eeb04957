#ifndef GFW_COHOMOLOGY_HPP
#define GFW_COHOMOLOGY_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gfw/algebra.hpp"
#include "gfw/matrix.hpp"

namespace gfw {

/// A graded-commutative algebra with a degree +1 differential. When the
/// generator tables behind a model are only known up to some degree, the
/// validity cutoff caps every degree-wise computation; models whose
/// presentation is complete carry no cutoff.
struct DGA {
    AlgebraPresentation alg;
    Derivation d;
    std::optional<int> max_valid_degree;
};

/// The differential out of degree k, linearized. Columns follow
/// basis_of_degree(k); rows enumerate exactly the monomials appearing in
/// images (plus any seeds), in basis order.
struct DifferentialSlice {
    int degree = 0;
    std::vector<Monomial> domain;
    std::vector<Monomial> codomain;
    SparseMatrix matrix;
};

/// Throws std::domain_error when k exceeds the validity cutoff. Extra
/// codomain monomials may be seeded so specific targets get a row even if no
/// image hits them.
DifferentialSlice differential_slice(const DGA& dga, int k,
                                     std::span<const Monomial> extra_codomain = {});
SparseMatrix differential_matrix(const DGA& dga, int k);

/// Degree-indexed cohomology dimensions.
struct BettiTable {
    std::string model;
    int max_degree = 0;
    std::map<int, long> dims;  // every degree 0..max_degree present

    long dim(int k) const;
};

/// dims(k) = dim ker(d_k) - rank(d_{k-1}), all exact. Degree slices are
/// independent; jobs > 1 computes them on a small thread pool with output
/// identical to the serial run.
BettiTable betti_table(const DGA& dga, std::string model_name, int k_max, int jobs = 1);

/// A primitive b with d(b) = a, or nullopt when the class of a is nonzero.
/// Throws std::invalid_argument unless a is homogeneous and closed.
std::optional<Element> is_coboundary(const DGA& dga, const Element& a);

struct CheckIssue {
    std::string subject;  // offending generator
    std::string detail;
};

struct CheckReport {
    int checked = 0;
    std::vector<CheckIssue> failures;

    bool ok() const { return failures.empty(); }
};

/// Asserts d(d(g)) = 0 for every generator of degree <= k_max.
CheckReport verify_d_squared(const DGA& dga, int k_max);

/// Asserts d_target(f(g)) = f(d_source(g)) for every generator of degree <= k_max.
CheckReport verify_chain_map(const Morphism& f, const Derivation& d_source,
                             const Derivation& d_target, int k_max);

/// True iff no nontrivial rational combination of the given closed degree-k
/// elements is a coboundary. Throws on non-closed input.
bool classes_independent(const DGA& dga, int k, std::span<const Element> cocycles);

/// Per-degree bases of { u in f.source : f(u) is a coboundary in the target },
/// for degrees 1..k_max, in canonical echelon form. The source must carry a
/// zero differential (a plain graded ring).
std::map<int, std::vector<Element>> cohomology_kernel_of_map(const Morphism& f,
                                                             const DGA& target, int k_max);

}  // namespace gfw

#endif
